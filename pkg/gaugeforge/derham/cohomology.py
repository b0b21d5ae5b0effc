"""
Gauge cohomology H_g^i(X, W_1) of smooth affine varieties.

On an affine X the gauge cohomology in degree r is the cohomology of the
global sections of G_1^r(X). Its components form a gauge over k with f and
v induced by the ladder maps, and the identity of sigma Omega on the top
component gives phi.

The components are computed in a grading that every map respects. The
degrees r <= 0 use twisted weights <= D (untwisted <= D // p) and the
degrees r >= 1 twisted weights <= D // p, so the top component and the
bottom one both see the forms of weight <= D // p and phi is bijective. The
0-component is the de Rham cohomology in weights <= D // p.

* :func:`~gaugeforge.derham.cohomology.gauge_weight`
* :func:`~gaugeforge.derham.cohomology.gauge_cohomology`
* :class:`~gaugeforge.derham.cohomology.GaugeCohomology`
* :func:`~gaugeforge.derham.cohomology.hg_gauge`
* :func:`~gaugeforge.derham.cohomology.gauge_cohomology_report`
* :func:`~gaugeforge.derham.cohomology.derham_gauge_report`
* :func:`~gaugeforge.derham.cohomology.truncation_stability_report`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object
import logging

import numpy as np

from ..utils import Report, PreconditionError, TruncationOverflow
from ..witt.chainring import ChainRing
from ..witt.modules import WnModule, SemilinearMap
from ..gauge import core
from ..gauge.phi import PhiGauge, validate_phi_gauge
from .forms import de_rham_cohomology, variety_from_dict
from .complexes import (build_G1, LadderMap, ladder_report,
                        cartier_round_trip_report)

log = logging.getLogger(__name__)


def gauge_weight(variety, r):
    """
    The twisted weight used for the component of degree r.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(2, 1, 8)
        >>> [gauge_weight(X, r) for r in [-1, 0, 1, 2]]
        [8, 8, 4, 4]

    """
    if r <= 0:
        return variety.degree
    return variety.degree//variety.p


def _ring_matrix(ring, matrix):
    "An F_p matrix as a matrix over W_1(F_q)."
    matrix = np.asarray(matrix, dtype=np.int64)
    result = ring.zeros(*matrix.shape)
    result[..., 0] = matrix % ring.p
    return result


def gauge_cohomology(variety, i, r, weight=None):
    """
    The component H_g^i(X, W_1)^r as a module over W_1(k).

    Parameters:

    * variety : AffineVariety
    * i, r : int
    * weight : int or None
        The twisted weight, by default :func:`gauge_weight`.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(2, 1, 8)
        >>> gauge_cohomology(X, 1, 0).divisors
        (1, 1)
        >>> gauge_cohomology(X, 2, 0).rank
        0

    """
    ring = ChainRing(variety.field, 1)
    if i < 0 or i > variety.dim:
        return WnModule.zero(ring)
    if weight is None:
        weight = gauge_weight(variety, r)
    rank = build_G1(variety, r, weight).cohomology(i).rank
    return WnModule(ring, [1]*rank)


class GaugeCohomology(object):
    """
    The gauge H_g^i(X, W_1) of affine space on a window of degrees.

    Parameters:

    * variety : AffineVariety
        Affine space. Hypersurfaces are refused since their truncations do
        not split by weight.
    * i : int
    * window : tuple (lower, upper)
        Must contain [-1, dim]. Defaults to (-1, dim).

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> H = GaugeCohomology(affine_space(2, 1, 8), 0)
        >>> H.ranks
        {-1: 3, 0: 3, 1: 3}
        >>> H.phi_gauge.is_phi_gauge()
        True

    """

    def __init__(self, variety, i, window=None):
        if variety.is_hypersurface:
            raise PreconditionError(
                "The assembled gauge cohomology needs affine space, got "
                "{!r}".format(variety))
        if window is None:
            window = (-1, variety.dim)
        lower, upper = int(window[0]), int(window[1])
        assert lower <= -1 and upper >= variety.dim, \
            "Window [{}, {}] must contain [-1, {}]".format(lower, upper,
                                                           variety.dim)
        self.variety = variety
        self.i = i
        self.window = (lower, upper)
        self.ring = ChainRing(variety.field, 1)
        degrees = range(lower, upper + 1)
        self.complexes = {r: build_G1(variety, r, gauge_weight(variety, r))
                          for r in degrees}
        self.spaces = {r: self.complexes[r].cohomology(i) for r in degrees}
        self.gauge = self._assemble()
        self.phi_gauge = PhiGauge(self.gauge, self._phi())
        log.debug("H_g^%d of %r has ranks %r", i, variety, self.ranks)

    @property
    def ranks(self):
        return {r: space.rank for r, space in self.spaces.items()}

    def _module(self, r):
        return WnModule(self.ring, [1]*self.spaces[r].rank)

    def _induced(self, name, source, target):
        ladder = LadderMap(name, self.complexes[source],
                           self.complexes[target])
        matrix = ladder.on_cohomology(self.i, self.spaces[source],
                                      self.spaces[target])
        return SemilinearMap(_ring_matrix(self.ring, matrix),
                             self._module(source), self._module(target))

    def _assemble(self):
        lower, upper = self.window
        components = [self._module(r) for r in range(lower, upper + 1)]
        f_maps = [self._induced('f', r, r + 1) for r in range(lower, upper)]
        v_maps = [self._induced('v', r + 1, r) for r in range(lower, upper)]
        return core.Gauge(self.ring, self.window, components, f_maps, v_maps)

    def _phi(self):
        "The identity of the forms of weight <= D // p, top to bottom."
        lower, upper = self.window
        top, bottom = self.spaces[upper], self.spaces[lower]
        matrix = bottom.matrix(top.representatives)
        return SemilinearMap(_ring_matrix(self.ring, matrix),
                             self._module(upper), self._module(lower), 1)

    def rank_table(self):
        "One row per degree with the rank and the twisted weight used."
        return [{'r': r, 'rank': self.spaces[r].rank,
                 'weight': self.complexes[r].weight}
                for r in range(self.window[0], self.window[1] + 1)]

    def to_dict(self):
        return {'variety': self.variety.to_dict(), 'i': self.i,
                'window': list(self.window), 'ranks': self.rank_table(),
                'gauge': self.phi_gauge.to_dict()}

    def __repr__(self):
        return 'GaugeCohomology(i={}, ranks={})'.format(self.i, self.ranks)


def hg_gauge(variety, i, window=None):
    """
    The phi-gauge H_g^i(X, W_1) of affine space.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> M = hg_gauge(affine_space(2, 1, 8), 1)
        >>> core.concentration_interval(M.gauge)
        (0, 1)

    """
    return GaugeCohomology(variety, i, window).phi_gauge


def gauge_cohomology_report(cohomology):
    """
    Check a :class:`GaugeCohomology` against the structure it must carry.

    The child report validates the phi-gauge. The gauge must be effective
    (``'effective'``), concentrated in [0, dim] (``'concentrated'``) and
    its 0-component must be the de Rham cohomology in weights <= D // p
    (``'de Rham'``). For i = 0 the constants must give a nonzero class in
    every component (``'constants'``).
    """
    variety = cohomology.variety
    gauge = cohomology.gauge
    report = Report('gauge cohomology', {'i': cohomology.i,
                                         'ranks': cohomology.rank_table()})
    report.add(validate_phi_gauge(cohomology.phi_gauge))
    report.check(core.is_effective(gauge), {'failed': 'effective'})
    a, b = core.concentration_interval(gauge)
    report.check(gauge.is_zero() or (0 <= a and b <= variety.dim),
                 {'failed': 'concentrated', 'interval': [a, b]})
    expected = de_rham_cohomology(variety, cohomology.i,
                                  variety.degree//variety.p).rank \
        if cohomology.i <= variety.dim else 0
    report.check(cohomology.spaces[0].rank == expected,
                 {'failed': 'de Rham', 'rank': cohomology.spaces[0].rank,
                  'expected': expected})
    if cohomology.i == 0:
        # the constant 1 is the first basis vector of every term
        for r, space in sorted(cohomology.spaces.items()):
            one = np.zeros(space.size, dtype=np.int64)
            one[0] = 1
            report.check(space.rank > 0 and space.coordinates(one).any(),
                         {'r': r, 'failed': 'constants'})
    return report


def derham_gauge_report(variety, window=None, cartier_degrees=2):
    """
    All checks of the de Rham gauge of affine space.

    The children are the termwise ladder reports for every r in the window,
    the Cartier round trips in degrees q <= *cartier_degrees* and the gauge
    cohomology reports for i = 0, ..., dim.
    """
    if window is None:
        window = (-2, variety.dim + 1)
    report = Report('de Rham gauge', {'variety': variety.to_dict(),
                                      'window': list(window)})
    for r in range(window[0], window[1] + 1):
        report.add(ladder_report(variety, r))
    for q in range(min(cartier_degrees, variety.nvars) + 1):
        report.add(cartier_round_trip_report(variety, q))
    for i in range(variety.dim + 1):
        report.add(gauge_cohomology_report(GaugeCohomology(variety, i)))
    return report


def truncation_stability_report(variety, extra=None):
    """
    Check that the ranks below weight D - p do not move when D grows.

    The de Rham ranks and the ranks of H^i(G_1^r) for r = -1, 0, 1 at
    twisted weight D - p are compared between truncation degrees D and
    D + *extra* (default p).
    """
    p = variety.p
    if extra is None:
        extra = p
    weight = variety.degree - p
    report = Report('de Rham truncation stability', {'degree': variety.degree,
                                                     'extra': extra,
                                                     'weight': weight})
    if weight < 0:
        report.overflow({'failed': 'capacity', 'degree': variety.degree})
        return report
    data = variety.to_dict()
    data['degree'] = variety.degree + extra
    larger = variety_from_dict(data)
    for i in range(variety.nvars + 1):
        small = de_rham_cohomology(variety, i, weight).rank
        large = de_rham_cohomology(larger, i, weight).rank
        report.check(small == large, {'index': i, 'failed': 'de Rham',
                                      'ranks': [small, large]})
        for r in [-1, 0, 1]:
            try:
                small = build_G1(variety, r, weight).cohomology(i).rank
                large = build_G1(larger, r, weight).cohomology(i).rank
            except TruncationOverflow as error:
                report.overflow({'index': i, 'r': r, 'failed': 'capacity',
                                 'message': str(error)})
                continue
            report.check(small == large, {'index': i, 'r': r,
                                          'failed': 'gauge',
                                          'ranks': [small, large]})
    return report
