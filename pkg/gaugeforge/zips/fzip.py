"""
F-zips over a finite field and generalized F-zips over F_p.

An F-zip over k = F_q is a space k^m with a descending filtration C on its
Frobenius twist, an ascending filtration D and sigma-semilinear isomorphisms
phi_i : C^i/C^(i+1) -> D_i/D_(i-1). The Frobenius twist is absorbed into the
semilinearity, so both filtrations are subspaces of k^m. Rigid phi-gauges
over k give F-zips through :func:`~gaugeforge.zips.fzip.gauge_to_fzip`,
with D_r the image of phi_r : M^r -> M^(-inf) and C^r the image of
v^(r-a) : M^r -> M^a.

**F-zips**

* :class:`~gaugeforge.zips.fzip.FZip`
* :func:`~gaugeforge.zips.fzip.validate_fzip`
* :func:`~gaugeforge.zips.fzip.graded_dimensions`
* :func:`~gaugeforge.zips.fzip.tate_fzip`
* :func:`~gaugeforge.zips.fzip.fzip_direct_sum`
* :func:`~gaugeforge.zips.fzip.fzip_from_dict`

**From phi-gauges**

* :func:`~gaugeforge.zips.fzip.zip_gauge_report`: the rigid phi-gauges with
  free components that F-zips are sent to
* :func:`~gaugeforge.zips.fzip.gauge_to_fzip`

**Generalized F-zips**

* :class:`~gaugeforge.zips.fzip.GeneralizedFZip`
* :func:`~gaugeforge.zips.fzip.validate_generalized_fzip`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import logging

import numpy as np

from ..utils import Report, PreconditionError, SchemaError
from ..witt import linalg, modules
from ..witt.modules import WnModule, SemilinearMap
from ..gauge import core, rigidity

log = logging.getLogger(__name__)


def _columns(ring, generators, size):
    "Generators as a (size, k, d) array, (size, 0, d) when there are none."
    if generators is None:
        return ring.zeros(size, 0)
    generators = np.asarray(generators, dtype=np.int64)
    if generators.size == 0:
        return ring.zeros(size, 0)
    return generators


def _dim(module, generators):
    "Dimension of the span of the columns over k."
    return modules.submodule(module, generators)[0].length


def _join(first, second):
    return np.concatenate([first, second], axis=1)


def _image(phi, generators):
    "Columns phi(x) for the columns x of *generators*."
    if generators.shape[1] == 0:
        return generators
    ring = phi.ring
    return ring.matmul(phi.matrix, ring.sigma(generators, phi.twist))


class FZip(object):
    """
    An F-zip of dimension m over k = F_q stored on an interval [lo, hi].

    Below lo, C^i is everything and D_i is zero. Above hi, C^i is zero and
    D_i is everything. Inside:

    * ``upper[i - lo]`` generates C^i for lo <= i <= hi + 1
    * ``lower[i - lo]`` generates D_(i-1) for lo <= i <= hi + 1
    * ``phis[i - lo]`` is a sigma-semilinear endomorphism of k^m with
      phi(C^i) in D_i and phi(C^(i+1)) in D_(i-1), inducing phi_i

    Parameters:

    * ring : ChainRing
        The field, as W_1(F_q).
    * dim : int
    * interval : tuple (lo, hi)
    * upper, lower : lists of generator arrays of shape (dim, k, d)
    * phis : list of SemilinearMap
        Twist 1 endomorphisms of k^dim.

    """

    def __init__(self, ring, dim, interval, upper, lower, phis):
        if ring.n != 1:
            raise ValueError("F-zips live over a field (got n = {})".format(
                ring.n))
        lo, hi = interval
        if hi < lo:
            raise ValueError("Invalid interval [{}, {}]".format(lo, hi))
        steps = hi - lo + 2
        if len(upper) != steps or len(lower) != steps or \
                len(phis) != steps - 1:
            raise ValueError(
                "Interval [{}, {}] needs {} steps and {} maps".format(
                    lo, hi, steps, steps - 1))
        self.ring = ring
        self.dim = dim
        self.interval = (lo, hi)
        self.module = WnModule.free(ring, dim)
        self.upper = [_columns(ring, c, dim) for c in upper]
        self.lower = [_columns(ring, c, dim) for c in lower]
        for gens in self.upper + self.lower:
            if gens.shape[0] != dim or gens.shape[2] != ring.d:
                raise ValueError("Generators of shape {} in k^{}".format(
                    gens.shape, dim))
        for phi in phis:
            if phi.domain != self.module or phi.codomain != self.module or \
                    phi.twist != 1:
                raise ValueError(
                    "phi_i must be sigma-semilinear maps of k^{}".format(dim))
        self.phis = list(phis)

    def upper_step(self, i):
        "Generators of C^i."
        lo, hi = self.interval
        if i < lo:
            return self.ring.identity(self.dim)
        if i > hi + 1:
            return self.ring.zeros(self.dim, 0)
        return self.upper[i - lo]

    def lower_step(self, i):
        "Generators of D_i."
        lo, hi = self.interval
        if i < lo - 1:
            return self.ring.zeros(self.dim, 0)
        if i > hi:
            return self.ring.identity(self.dim)
        return self.lower[i + 1 - lo]

    def phi(self, i):
        lo, hi = self.interval
        if lo <= i <= hi:
            return self.phis[i - lo]
        return SemilinearMap(None, self.module, self.module, 1)

    def to_dict(self):
        return {'context': self.ring.context,
                'dim': self.dim,
                'interval': list(self.interval),
                'upper': [c.tolist() for c in self.upper],
                'lower': [c.tolist() for c in self.lower],
                'phi': [phi.matrix.tolist() for phi in self.phis]}

    def __repr__(self):
        return 'FZip(dim={}, interval={})'.format(self.dim,
                                                  list(self.interval))


def graded_dimensions(fzip):
    """
    The dimensions of gr^i C and gr_i D on the interval.

    Returns:

    * dims : dict
        ``{i: (dim C^i/C^(i+1), dim D_i/D_(i-1))}``

    """
    module = fzip.module
    lo, hi = fzip.interval
    dims = {}
    for i in range(lo, hi + 1):
        up = _dim(module, fzip.upper_step(i)) - \
            _dim(module, fzip.upper_step(i + 1))
        down = _dim(module, fzip.lower_step(i)) - \
            _dim(module, fzip.lower_step(i - 1))
        dims[i] = (up, down)
    return dims


def validate_fzip(fzip):
    """
    Check the F-zip axioms.

    Witnesses carry the index and the failed ``'axiom'``: ``'upper
    exhaustive'``, ``'upper separated'``, ``'lower separated'``, ``'lower
    exhaustive'``, ``'upper decreasing'``, ``'lower increasing'``,
    ``'dimension'``, ``'phi defined'`` or ``'phi bijective'``.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> validate_fzip(tate_fzip(ChainRing(3, 1), 2)).ok
        True

    """
    module = fzip.module
    lo, hi = fzip.interval
    everything = fzip.ring.identity(fzip.dim)
    report = Report('fzip', {'dim': fzip.dim, 'interval': [lo, hi]})
    report.check(modules.span_contains(module, fzip.upper_step(lo),
                                       everything),
                 {'index': lo, 'axiom': 'upper exhaustive'})
    report.check(_dim(module, fzip.upper_step(hi + 1)) == 0,
                 {'index': hi + 1, 'axiom': 'upper separated'})
    report.check(_dim(module, fzip.lower_step(lo - 1)) == 0,
                 {'index': lo - 1, 'axiom': 'lower separated'})
    report.check(modules.span_contains(module, fzip.lower_step(hi),
                                       everything),
                 {'index': hi, 'axiom': 'lower exhaustive'})
    for i in range(lo, hi + 1):
        top, below = fzip.upper_step(i), fzip.upper_step(i + 1)
        inner, outer = fzip.lower_step(i - 1), fzip.lower_step(i)
        report.check(modules.span_contains(module, top, below),
                     {'index': i, 'axiom': 'upper decreasing'})
        report.check(modules.span_contains(module, outer, inner),
                     {'index': i, 'axiom': 'lower increasing'})
        up = _dim(module, top) - _dim(module, below)
        down = _dim(module, outer) - _dim(module, inner)
        report.check(up == down, {'index': i, 'axiom': 'dimension',
                                  'upper': up, 'lower': down})
        phi = fzip.phi(i)
        images = _image(phi, top)
        defined = (modules.span_contains(module, outer, images) and
                   modules.span_contains(module, inner, _image(phi, below)))
        report.check(defined, {'index': i, 'axiom': 'phi defined'})
        if defined:
            reached = _dim(module, _join(inner, images)) - _dim(module, inner)
            report.check(reached == up and reached == down,
                         {'index': i, 'axiom': 'phi bijective'})
    return report


def tate_fzip(ring, weight, rank=1):
    """
    The F-zip of rank *rank* with both filtrations jumping at *weight* and
    phi = sigma.
    """
    module = WnModule.free(ring, rank)
    ident = ring.identity(rank)
    zero = ring.zeros(rank, 0)
    return FZip(ring, rank, (weight, weight), [ident, zero], [zero, ident],
                [SemilinearMap(ident, module, module, 1)])


def _embed(ring, generators, offset, total):
    "Generators of k^m placed in rows offset..offset+m of k^total."
    placed = ring.zeros(total, generators.shape[1])
    placed[offset:offset + generators.shape[0]] = generators
    return placed


def fzip_direct_sum(*zips):
    """
    The direct sum of F-zips over the same field.
    """
    assert zips, "Need at least one F-zip"
    ring = zips[0].ring
    assert all(z.ring == ring for z in zips), "F-zips over different fields"
    total = sum(z.dim for z in zips)
    lo = min(z.interval[0] for z in zips)
    hi = max(z.interval[1] for z in zips)
    offsets = np.cumsum([0] + [z.dim for z in zips[:-1]])
    module = WnModule.free(ring, total)
    upper, lower, phis = [], [], []
    for i in range(lo, hi + 2):
        upper.append(np.concatenate(
            [_embed(ring, z.upper_step(i), o, total)
             for z, o in zip(zips, offsets)], axis=1))
        lower.append(np.concatenate(
            [_embed(ring, z.lower_step(i - 1), o, total)
             for z, o in zip(zips, offsets)], axis=1))
    for i in range(lo, hi + 1):
        matrix = ring.zeros(total, total)
        for z, o in zip(zips, offsets):
            matrix[o:o + z.dim, o:o + z.dim] = z.phi(i).matrix
        phis.append(SemilinearMap(matrix, module, module, 1))
    return FZip(ring, total, (lo, hi), upper, lower, phis)


def fzip_from_dict(data):
    """
    Build an F-zip from its JSON form.

    Raises :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    try:
        ring = core.ring_from_context(data['context'])
        dim = int(data['dim'])
        lo, hi = [int(x) for x in data['interval']]
        upper, lower = data['upper'], data['lower']
        phi_rows = data['phi']
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError("Invalid F-zip document: {}".format(err))
    module = WnModule.free(ring, dim)

    def generators(rows):
        if not rows or not np.size(rows):
            return ring.zeros(dim, 0)
        ncols = len(rows[0])
        return core.matrix_from_json(ring, rows, dim, ncols)

    phis = [SemilinearMap(core.matrix_from_json(ring, rows, dim, dim),
                          module, module, 1) for rows in phi_rows]
    upper = [generators(c) for c in upper]
    lower = [generators(c) for c in lower]
    try:
        return FZip(ring, dim, (lo, hi), upper, lower, phis)
    except ValueError as err:
        raise SchemaError("Invalid F-zip: {}".format(err))


def zip_gauge_report(phi_gauge):
    """
    Whether a phi-gauge lies in the image of F-zips.

    These are the phi-gauges over a field that are rigid, of finite type,
    with free components and bijective phi. Witnesses carry ``'failed'``:
    ``'field'``, ``'phi bijective'``, ``'free components'`` or ``'rigid'``.
    """
    gauge = phi_gauge.gauge
    report = Report('zip gauge', {'interval': list(gauge.interval)})
    if not report.check(gauge.n == 1, {'failed': 'field', 'n': gauge.n}):
        return report
    report.check(phi_gauge.is_phi_gauge(), {'failed': 'phi bijective'})
    report.check(all(m.is_free() for m in gauge.components),
                 {'failed': 'free components'})
    report.check(rigidity.is_rigid(gauge), {'failed': 'rigid'})
    return report


def _graded_lift(module, down, across):
    """
    A semilinear Phi of k^m with Phi(down y) = across(y) modulo the previous
    lower step.

    Columns of sigma(down) are kept while they are independent, the rest of
    a basis is completed with unit vectors sent to zero.
    """
    ring = module.ring
    size = module.rank
    twisted = ring.sigma(down)
    basis = ring.zeros(size, 0)
    chosen = []
    for j in range(twisted.shape[1]):
        trial = _join(basis, twisted[:, j:j + 1])
        if _dim(module, trial) > basis.shape[1]:
            basis = trial
            chosen.append(j)
    units = ring.identity(size)
    for j in range(size):
        if basis.shape[1] == size:
            break
        trial = _join(basis, units[:, j:j + 1])
        if _dim(module, trial) > basis.shape[1]:
            basis = trial
    images = _join(across[:, chosen], ring.zeros(size, size - len(chosen)))
    return ring.matmul(images, linalg.inverse(ring, basis))


def gauge_to_fzip(phi_gauge):
    """
    The F-zip of a rigid phi-gauge over k.

    With the gauge on its minimal window [a, b] and M = M^a:

    * C^r is the image of v^(r-a) : M^r -> M
    * D_r is the image of phi_r = phi f^(b-r) : M^r -> M
    * phi_r sends the class of v^(r-a) y to the class of phi_r(y)

    Raises :class:`~gaugeforge.utils.PreconditionError` if the phi-gauge is
    not rigid over a field with bijective phi.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> from gaugeforge.gauge.phi import PhiGauge
        >>> R = ChainRing(2, 1)
        >>> G = core.free_gauge(R, -1)
        >>> phi = SemilinearMap(R.identity(1), G.plus_infinity,
        ...                     G.minus_infinity, 1)
        >>> Z = gauge_to_fzip(PhiGauge(G, phi))
        >>> Z.interval, graded_dimensions(Z)
        ((1, 1), {1: (1, 1)})

    """
    report = zip_gauge_report(phi_gauge)
    if not report.ok:
        raise PreconditionError(
            "Not a rigid phi-gauge over a field: {}".format(report.witnesses))
    tight = phi_gauge.tighten()
    gauge = tight.gauge
    ring = gauge.ring
    a, b = gauge.interval
    module = gauge.minus_infinity
    dim = module.rank
    upper, lower, phis = [], [ring.zeros(dim, 0)], []
    for r in range(a, b + 1):
        down = gauge.v_power(r, r - a)
        across = tight.phi.compose(gauge.f_power(r, b - r))
        upper.append(down.matrix)
        lower.append(across.matrix)
        phis.append(SemilinearMap(_graded_lift(module, down.matrix,
                                               across.matrix),
                                  module, module, 1))
    upper.append(ring.zeros(dim, 0))
    log.debug("F-zip of %s on [%d, %d]", phi_gauge, a, b)
    return FZip(ring, dim, (a, b), upper, lower, phis)


class GeneralizedFZip(object):
    """
    An effective generalized F-zip on F_p^dim, truncated.

    The structure maps are given linearized: ``phis[r]`` holds, as columns,
    the images in F_r of a basis of the Frobenius twist of F^r/F^(r+1),
    which has *twist_rank* times the dimension of F^r/F^(r+1).

    Parameters:

    * p : int
    * dim : int
    * upper : list of 2d-arrays
        Generators (columns) of F^0, F^1, ..., the last one zero.
    * lower : list of 2d-arrays
        Generators of F_(-1), F_0, ..., the last one everything.
    * phis : list of 2d-arrays
        Linearized phi_r for r = 0, ..., len(phis) - 1.
    * twist_rank : int

    """

    def __init__(self, p, dim, upper, lower, phis, twist_rank=1):
        self.p = p
        self.dim = dim
        self.upper = [self._checked(c) for c in upper]
        self.lower = [self._checked(c) for c in lower]
        self.phis = [self._checked(c) for c in phis]
        self.twist_rank = twist_rank
        if len(self.phis) > min(len(self.upper) - 1, len(self.lower) - 1):
            raise ValueError("More structure maps than filtration steps")

    def _checked(self, generators):
        generators = np.asarray(generators, dtype=np.int64)
        if generators.size == 0:
            return np.zeros((self.dim, 0), dtype=np.int64)
        if generators.ndim != 2 or generators.shape[0] != self.dim:
            raise ValueError("Generators of shape {} in F_p^{}".format(
                generators.shape, self.dim))
        return generators % self.p

    @property
    def degree(self):
        "The number of degrees with a structure map."
        return len(self.phis)

    def rank(self, generators):
        return linalg.rank_mod_p(generators, self.p)

    def contains(self, outer, inner):
        "True if the span of *inner* lies in the span of *outer*."
        return self.rank(np.hstack([outer, inner])) == self.rank(outer)

    def graded_ranks(self):
        "The pairs (dim F^r/F^(r+1), dim F_r/F_(r-1)) for r < degree."
        return [(self.rank(self.upper[r]) - self.rank(self.upper[r + 1]),
                 self.rank(self.lower[r + 1]) - self.rank(self.lower[r]))
                for r in range(self.degree)]

    def __repr__(self):
        return 'GeneralizedFZip(p={}, dim={}, degree={})'.format(
            self.p, self.dim, self.degree)


def validate_generalized_fzip(fzip):
    """
    Check the axioms of an effective generalized F-zip within truncation.

    F^0 is everything and F_(-1) zero, the filtrations are monotone, the
    last stored F^r is zero and the last stored F_r everything, and every
    linearized phi_r is an isomorphism onto F_r/F_(r-1). Witnesses carry
    ``'index'`` and ``'axiom'``.
    """
    dim = fzip.dim
    everything = np.eye(dim, dtype=np.int64)
    report = Report('generalized fzip', {'dim': dim,
                                         'degree': fzip.degree})
    report.check(fzip.contains(fzip.upper[0], everything),
                 {'index': 0, 'axiom': 'upper exhaustive'})
    report.check(fzip.rank(fzip.lower[0]) == 0,
                 {'index': -1, 'axiom': 'lower separated'})
    report.check(fzip.rank(fzip.upper[-1]) == 0,
                 {'index': len(fzip.upper) - 1, 'axiom': 'upper separated'})
    report.check(fzip.contains(fzip.lower[-1], everything),
                 {'index': len(fzip.lower) - 2, 'axiom': 'lower exhaustive'})
    for r in range(len(fzip.upper) - 1):
        report.check(fzip.contains(fzip.upper[r], fzip.upper[r + 1]),
                     {'index': r, 'axiom': 'upper decreasing'})
    for r in range(len(fzip.lower) - 1):
        report.check(fzip.contains(fzip.lower[r + 1], fzip.lower[r]),
                     {'index': r, 'axiom': 'lower increasing'})
    for r, (up, down) in enumerate(fzip.graded_ranks()):
        images = fzip.phis[r]
        inner, outer = fzip.lower[r], fzip.lower[r + 1]
        report.check(images.shape[1] == fzip.twist_rank*up,
                     {'index': r, 'axiom': 'dimension',
                      'upper': up, 'lower': down})
        defined = fzip.contains(outer, images)
        report.check(defined, {'index': r, 'axiom': 'phi defined'})
        if defined:
            reached = fzip.rank(np.hstack([inner, images])) - \
                fzip.rank(inner)
            report.check(reached == images.shape[1] and reached == down,
                         {'index': r, 'axiom': 'phi bijective'})
    return report
