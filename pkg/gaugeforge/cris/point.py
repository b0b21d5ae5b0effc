"""
The gauge ring at a perfect point.

Over a perfect field k the crystalline sections are W_m(k) with the usual
Frobenius sigma, so the elements with phi(x) divisible by p^r are
p^max(r, 0) W_m(k). Reducing modulo p^n, every degree r holds a copy of
W_n(k) generated by p^max(r, 0). In these coordinates f (multiplication by
p) is the identity for r >= 0 and p for r < 0, v (the inclusion) is p for
r >= 0 and the identity for r < 0, and phi(x)/p^r is sigma on the
non-negative degrees.

* :class:`~gaugeforge.cris.point.PointGauge`
* :func:`~gaugeforge.cris.point.point_gauge`
* :func:`~gaugeforge.cris.point.point_gauge_report`: gauge relations,
  multiplicativity of phi and rigidity at n = 1
* :func:`~gaugeforge.cris.point.flatness_check`: exactness of
  0 -> G_n -> G_(n+m) -> G_m -> 0 in every degree

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object
import logging

import numpy as np

from ..utils import Report, random_state
from ..witt.chainring import ChainRing
from ..witt import modules
from ..witt.modules import WnModule, SemilinearMap
from ..gauge import core, rigidity
from ..gauge.phi import PhiGauge, validate_phi_gauge

log = logging.getLogger(__name__)


def _generator(r):
    "The exponent of the generator p^max(r, 0) of degree r."
    return max(r, 0)


def _point_component_gauge(ring, length, window):
    "Degrees W_length(k) in *window* with the maps of the perfect point."
    lower, upper = window
    assert lower <= 0 <= upper, \
        "Window [{}, {}] must contain 0".format(lower, upper)
    module = WnModule(ring, [length])
    p = ring.p
    f_maps, v_maps = [], []
    for r in range(lower, upper):
        step = _generator(r + 1) - _generator(r)
        f_maps.append(modules.scalar_map(module, p**(1 - step)))
        v_maps.append(modules.scalar_map(module, p**step))
    return core.Gauge(ring, window, [module]*(upper - lower + 1), f_maps,
                      v_maps)


class PointGauge(object):
    """
    The phi-ring G_n(k) of a perfect field k on a window of degrees.

    Parameters:

    * field : FiniteField or int
    * n : int
    * window : tuple (lower, upper)
        Must contain 0. Degrees outside continue as the gauge conventions
        say, f = p below and f = 1 above.

    Examples:

        >>> G = PointGauge(2, 2)
        >>> G.gauge.interval
        (-1, 1)
        >>> int(G.product(-1, 1, G.ring.one(), G.ring.one())[0])
        2

    """

    def __init__(self, field, n, window=(-1, 1)):
        assert n >= 1, "Invalid length {}".format(n)
        self.ring = ChainRing(field, n)
        self.n = n
        self.gauge = _point_component_gauge(self.ring, n, window)
        top, bottom = self.gauge.plus_infinity, self.gauge.minus_infinity
        self.phi_gauge = PhiGauge(self.gauge, SemilinearMap(
            self.ring.identity(1), top, bottom, 1))

    @property
    def window(self):
        return self.gauge.interval

    def _times_p(self, x, e):
        return self.ring.mul(x, self.ring.p_power(e))

    def product(self, r, s, x, y):
        "The product of x in degree r and y in degree s, in degree r + s."
        excess = _generator(r) + _generator(s) - _generator(r + s)
        return self._times_p(self.ring.mul(x, y), excess)

    def f_at(self, r, x):
        "f : G^r -> G^(r+1)."
        return self._times_p(x, 1 + _generator(r) - _generator(r + 1))

    def phi_at(self, r, x):
        "phi(x)/p^r in G^(-infinity) = W_n(k)."
        return self._times_p(self.ring.sigma(x), _generator(r) - r)

    def to_dict(self):
        return self.phi_gauge.to_dict()

    def __repr__(self):
        return 'PointGauge(q={}, n={}, window={})'.format(
            self.ring.field.q, self.n, list(self.window))


def point_gauge(field, n, window=(-1, 1)):
    """
    The gauge ring G_n(k) at a perfect point.

    Examples:

        >>> G = point_gauge(3, 1)
        >>> core.validate_gauge(G.gauge).ok
        True
        >>> G.gauge.tighten().same_as(core.free_gauge(G.ring, 0))
        True

    """
    return PointGauge(field, n, window)


def point_gauge_report(point, samples=10, seed=None):
    """
    Check the phi-ring structure of a point gauge.

    The children check fv = vf = p and the bijectivity of phi. On sampled
    elements the products must be compatible with f and phi must be
    multiplicative, phi(xy)/p^(r+s) = phi(x)/p^r phi(y)/p^s. On the top
    component phi must be a ring isomorphism. For n = 1 the gauge must be
    rigid and isomorphic to the free gauge k(0).
    """
    ring = point.ring
    random = random_state(seed)
    lower, upper = point.window
    report = Report('point gauge', {'context': ring.context,
                                    'window': [lower, upper]})
    report.add(validate_phi_gauge(point.phi_gauge))
    for sample in range(samples):
        x, y = ring.random(random), ring.random(random)
        for r in range(lower, upper + 1):
            for s in range(lower, upper + 1):
                product = point.product(r, s, x, y)
                report.check(np.array_equal(
                    point.phi_at(r + s, product),
                    ring.mul(point.phi_at(r, x), point.phi_at(s, y))),
                    {'index': sample, 'degrees': [r, s],
                     'failed': 'phi multiplicative'})
                report.check(np.array_equal(
                    point.product(r + 1, s, point.f_at(r, x), y),
                    point.f_at(r + s, product)),
                    {'index': sample, 'degrees': [r, s],
                     'failed': 'f linear'})
        report.check(np.array_equal(ring.sigma(ring.mul(x, y)),
                                    ring.mul(ring.sigma(x), ring.sigma(y))) and
                     np.array_equal(ring.sigma(ring.add(x, y)),
                                    ring.add(ring.sigma(x), ring.sigma(y))),
                     {'index': sample, 'failed': 'ring map'})
    if point.n == 1:
        report.check(rigidity.is_rigid(point.gauge), {'failed': 'rigid'})
        report.check(point.gauge.tighten().same_as(
            core.free_gauge(ring, 0)), {'failed': 'free'})
    return report


def flatness_check(field, n, m, window=(-1, 1)):
    """
    Check that 0 -> G_n -> G_(n+m) -> G_m -> 0 is exact in every degree.

    The first map is multiplication by p^m and the second the reduction.
    Both must commute with f and v. The cokernel of p^n on G_(n+1) must
    be G_n.

    Examples:

        >>> flatness_check(2, 1, 1).ok
        True

    """
    assert n >= 1 and m >= 1, "Invalid lengths {} and {}".format(n, m)
    ring = ChainRing(field, n + m)
    p = ring.p
    small = _point_component_gauge(ring, n, window)
    middle = _point_component_gauge(ring, n + m, window)
    quotient = _point_component_gauge(ring, m, window)
    report = Report('flatness', {'context': ring.context, 'n': n, 'm': m})
    lower, upper = window
    for r in range(lower, upper + 1):
        first = modules.scalar_map(small.component(r), p**m,
                                   middle.component(r))
        second = modules.scalar_map(middle.component(r), 1,
                                    quotient.component(r))
        report.check(first.is_injective(), {'index': r,
                                            'failed': 'injective'})
        report.check(second.is_surjective(), {'index': r,
                                              'failed': 'surjective'})
        report.check(second.compose(first).is_zero(),
                     {'index': r, 'failed': 'complex'})
        image_length = modules.image(first)[0].length
        kernel_length = modules.kernel(second)[0].length
        report.check(image_length == kernel_length,
                     {'index': r, 'failed': 'exact', 'image': image_length,
                      'kernel': kernel_length})
        for name, source, target in [('f', small.f(r), middle.f(r)),
                                     ('v', small.v(r), middle.v(r))]:
            report.check(first.compose(source).equals(target.compose(first)),
                         {'index': r, 'failed': name + ' compatible'})
    truncation = modules.cokernel(modules.scalar_map(
        WnModule(ring, [n + 1]), p**n))[0]
    report.check(truncation.divisors == (n,),
                 {'failed': 'truncation', 'divisors': truncation.divisors})
    if not report.ok:
        log.error("Flatness fails for %r: %r", ring, report.witnesses)
    return report
