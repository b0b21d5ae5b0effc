"""
Rigidity and freeness of gauges.

Strictness and quasi-rigidity only make sense for gauges killed by p, so the
deciders of this module that work over k raise
:class:`~gaugeforge.utils.PreconditionError` for n >= 2.

**Over k**

* :func:`~gaugeforge.gauge.rigidity.is_strict`
* :func:`~gaugeforge.gauge.rigidity.is_quasi_rigid`
* :func:`~gaugeforge.gauge.rigidity.is_rigid`
* :func:`~gaugeforge.gauge.rigidity.quasi_rigid_lengths`
* :func:`~gaugeforge.gauge.rigidity.quotient_criterion`: the maps
  M^r/v -> M^(r+1)/v are injective
* :func:`~gaugeforge.gauge.rigidity.dual_quotient_criterion`: the maps
  M^(r+1)/f -> M^r/f are injective
* :func:`~gaugeforge.gauge.rigidity.is_free_k_gauge`

**Over W_n**

* :func:`~gaugeforge.gauge.rigidity.is_free_W_gauge`
* :func:`~gaugeforge.gauge.rigidity.free_decomposition`
* :func:`~gaugeforge.gauge.rigidity.free_sum`: the gauge sum W_n(i)^(d_i)
* :func:`~gaugeforge.gauge.rigidity.free_component_gauges`: all small gauges
  with free components

----
"""
from __future__ import division, absolute_import
from future.builtins import range
import itertools
import logging

import numpy as np

from ..utils import Report, PreconditionError, ImplementationBug
from ..witt import modules, linalg
from . import core, morphisms

log = logging.getLogger(__name__)


def _require_k(gauge, what):
    if gauge.n != 1:
        raise PreconditionError(
            "{} is only defined for gauges over k (got n = {})".format(
                what, gauge.n))


def is_strict(gauge):
    """
    True if (f^(b-r), v^(r-a)) : M^r -> M^b + M^a is injective for all r.

    Raises :class:`~gaugeforge.utils.PreconditionError` for n >= 2.
    """
    _require_k(gauge, "Strictness")
    a, b = gauge.interval
    top, bottom = gauge.plus_infinity, gauge.minus_infinity
    for r in range(a, b + 1):
        joint = modules.block_map(
            [[gauge.f_power(r, b - r)], [gauge.v_power(r, r - a)]],
            [gauge.component(r)], [top, bottom])
        if not joint.is_injective():
            log.debug("Not strict at index %d", r)
            return False
    return True


def exactness_report(gauge):
    """
    Where the sequences through f and v fail to be exact.

    Witnesses carry the index r and ``'f'`` (ker f != im v on M^r) or
    ``'v'`` (ker v != im f on M^r).
    """
    report = Report('quasi-rigidity', {'interval': list(gauge.interval)})
    for r in range(gauge.a - 1, gauge.b + 2):
        module = gauge.component(r)
        ker_f = modules.kernel(gauge.f(r))[1].matrix
        report.check(modules.same_span(module, ker_f, gauge.v(r).matrix),
                     {'index': r, 'map': 'f'})
        ker_v = modules.kernel(gauge.v(r - 1))[1].matrix
        report.check(modules.same_span(module, ker_v,
                                       gauge.f(r - 1).matrix),
                     {'index': r, 'map': 'v'})
    return report


def is_quasi_rigid(gauge):
    """
    True if ker f = im v and ker v = im f on every component.

    Raises :class:`~gaugeforge.utils.PreconditionError` for n >= 2.
    """
    _require_k(gauge, "Quasi-rigidity")
    return exactness_report(gauge).ok


def is_rigid(gauge):
    "Strict and quasi-rigid."
    return is_strict(gauge) and is_quasi_rigid(gauge)


def quasi_rigid_lengths(gauge):
    """
    The common length of the components of a quasi-rigid gauge.

    Returns:

    * report : Report
        ``details['length']`` is the common length and
        ``details['lengths']`` the lengths on the window.

    Raises :class:`~gaugeforge.utils.PreconditionError` if the gauge is not
    quasi-rigid and :class:`~gaugeforge.utils.ImplementationBug` if the
    lengths disagree anyway.
    """
    if not is_quasi_rigid(gauge):
        raise PreconditionError("Gauge is not quasi-rigid")
    lengths = gauge.lengths()
    report = Report('quasi-rigid lengths', {'lengths': lengths,
                                            'length': lengths[0]})
    for r, length in zip(range(gauge.a, gauge.b + 1), lengths):
        report.check(length == lengths[0], {'index': r, 'length': length})
    if not report.ok:
        raise ImplementationBug(
            "Quasi-rigid gauge with lengths {}".format(lengths))
    return report


def _induced_on_quotients(gauge, r, forward):
    """
    The map M^r/v -> M^(r+1)/v induced by f (forward) or
    M^(r+1)/f -> M^r/f induced by v.
    """
    ring = gauge.ring
    if forward:
        src, dst = r, r + 1
        mapping = gauge.f(r)
        src_rel, dst_rel = gauge.v(r).matrix, gauge.v(r + 1).matrix
    else:
        src, dst = r + 1, r
        mapping = gauge.v(r)
        src_rel, dst_rel = gauge.f(r).matrix, gauge.f(r - 1).matrix
    here, _, section = modules.quotient_by(gauge.component(src), src_rel)
    there, projection, _ = modules.quotient_by(gauge.component(dst), dst_rel)
    matrix = ring.matmul(projection.matrix,
                         ring.matmul(mapping.matrix, section))
    return modules.SemilinearMap(matrix, here, there)


def _criterion(gauge, forward):
    name = 'quotient criterion' if forward else 'dual quotient criterion'
    report = Report(name, {'interval': list(gauge.interval)})
    for r in range(gauge.a - 1, gauge.b + 1):
        induced = _induced_on_quotients(gauge, r, forward)
        report.check(induced.is_injective(), {'index': r})
    return report


def quotient_criterion(gauge):
    """
    Check that f induces injections M^r/vM^(r+1) -> M^(r+1)/vM^(r+2).

    For a gauge over k this is equivalent to freeness. Returns a
    :class:`~gaugeforge.utils.Report` listing the failing indices.
    """
    _require_k(gauge, "The quotient criterion")
    return _criterion(gauge, forward=True)


def dual_quotient_criterion(gauge):
    """
    Check that v induces injections M^(r+1)/fM^r -> M^r/fM^(r-1).
    """
    _require_k(gauge, "The dual quotient criterion")
    return _criterion(gauge, forward=False)


def is_free_k_gauge(gauge):
    "True if a gauge over k is free."
    return quotient_criterion(gauge).ok


def freeness_report(gauge):
    """
    Decide freeness of a gauge over W_n.

    The gauge is free when all its components are free and its reduction
    modulo p satisfies the quotient criterion. Witnesses name the failed
    condition (``'component'`` or ``'criterion'``) and the index.
    """
    report = Report('freeness', {'interval': list(gauge.interval),
                                 'n': gauge.n})
    for r, module in zip(range(gauge.a, gauge.b + 1), gauge.components):
        report.check(module.is_free(), {'index': r, 'failed': 'component'})
    if report.ok:
        reduced = _criterion(gauge.reduce_mod_p(), forward=True)
        for index in reduced.violated_indices():
            report.violate({'index': index, 'failed': 'criterion'})
    return report


def is_free_W_gauge(gauge):
    "True if a gauge over W_n is free."
    return freeness_report(gauge).ok


def free_decomposition(gauge):
    """
    An explicit isomorphism from a sum of free gauges onto a free gauge.

    Generators lifting a basis of M/(p, f, v)M span copies of W_n(i) and the
    map from their sum is an isomorphism.

    Returns:

    * multiplicities : dict
        Twist i -> multiplicity d_i.
    * free : Gauge
        The sum of the W_n(i)^(d_i) (generator order).
    * iso : GaugeMorphism
        The isomorphism free -> gauge.

    Raises :class:`~gaugeforge.utils.PreconditionError` for a gauge that is
    not free, naming the failed condition and index.
    """
    report = freeness_report(gauge)
    if not report.ok:
        raise PreconditionError(
            "Gauge is not free: {}".format(report.witnesses[0]))
    free, cover, degrees = morphisms.free_cover(gauge)
    if not cover.is_isomorphism():
        raise ImplementationBug(
            "Free cover of a free gauge is not an isomorphism")
    multiplicities = {}
    for deg in degrees:
        multiplicities[-deg] = multiplicities.get(-deg, 0) + 1
    return multiplicities, free, cover


def free_sum(ring, multiplicities):
    """
    The gauge sum of W_n(i)^(d_i) for a dict {i: d_i}.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> G = free_sum(ChainRing(2, 2), {0: 1, 1: 2})
        >>> G.interval
        (-1, 0)
        >>> free_decomposition(G)[0] == {0: 1, 1: 2}
        True

    """
    pieces = [core.free_gauge(ring, i, m)
              for i, m in sorted(multiplicities.items()) if m > 0]
    if not pieces:
        return core.zero_gauge(ring)
    return core.direct_sum(*pieces)


def _valid_pairs(ring, r0, r1):
    "All (f, v) with f : W^r0 -> W^r1, v back, and fv = vf = p."
    q = ring.modulus
    p = ring.p % q
    entries = np.array(list(itertools.product(range(q), repeat=r0*r1)),
                       dtype=np.int64)
    fs = entries.reshape(-1, r1, r0)
    vs = entries.reshape(-1, r0, r1)
    fv = np.einsum('aij,bjk->abik', fs, vs) % q
    vf = np.einsum('bij,ajk->abik', vs, fs) % q
    good = ((fv == p*np.eye(r1, dtype=np.int64)).all(axis=(2, 3)) &
            (vf == p*np.eye(r0, dtype=np.int64)).all(axis=(2, 3)))
    return [(fs[i], vs[j]) for i, j in zip(*np.nonzero(good))]


def _general_linear(ring, rank):
    "GL_rank(W_n(F_p)) as stacked matrices and their inverses."
    q = ring.modulus
    group, inverses = [], []
    for entries in itertools.product(range(q), repeat=rank*rank):
        g = np.array(entries, dtype=np.int64).reshape(rank, rank)
        if linalg.rank_mod_p(g, ring.p) == rank:
            group.append(g)
            inverses.append(linalg.inverse(ring, g[..., None])[..., 0])
    return np.array(group), np.array(inverses)


def _end_orbits(ring, pairs, rank, left):
    """
    One representative per orbit of a base change on an end component.

    On the left end g acts by (f g, g^-1 v), on the right end by
    (g f, v g^-1).
    """
    if not pairs:
        return []
    q = ring.modulus
    group, inverses = _general_linear(ring, rank)
    seen = {}
    for f, v in pairs:
        if left:
            fg = np.einsum('ij,gjk->gik', f, group) % q
            vg = np.einsum('gij,jk->gik', inverses, v) % q
        else:
            fg = np.einsum('gij,jk->gik', group, f) % q
            vg = np.einsum('ij,gjk->gik', v, inverses) % q
        keys = np.concatenate([fg.reshape(len(group), -1),
                               vg.reshape(len(group), -1)], axis=1)
        best = min(tuple(row) for row in keys.tolist())
        if best not in seen:
            split = f.size
            seen[best] = (np.array(best[:split]).reshape(f.shape),
                          np.array(best[split:]).reshape(v.shape))
    return [seen[key] for key in sorted(seen)]


def _linear(matrix, source, target):
    return modules.SemilinearMap(matrix[..., None], source, target)


def free_component_gauges(ring, max_rank=2):
    """
    Every gauge with free components of rank <= *max_rank* on a window of
    length at most two.

    The windows [0, 0] and [0, 1] are searched exhaustively. On [0, 2] the
    gauges are listed up to base changes of M^0 and M^2, which leaves one
    gauge per isomorphism class. Only rings W_n(F_p) are supported and the
    count grows like p^(2 n r0 r1).

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> gauges = list(free_component_gauges(ChainRing(2, 2), max_rank=1))
        >>> len(gauges)
        9
        >>> sorted(set(G.interval for G in gauges))
        [(0, 0), (0, 1), (0, 2)]

    """
    assert ring.d == 1, \
        "Enumeration needs a prime field, got degree {}".format(ring.d)
    ranks = range(1, max_rank + 1)
    free = dict((r, modules.WnModule.free(ring, r)) for r in ranks)
    pairs = dict(((r0, r1), _valid_pairs(ring, r0, r1))
                 for r0, r1 in itertools.product(ranks, repeat=2))
    for rank in ranks:
        yield core.free_gauge(ring, 0, rank)
    for r0, r1 in itertools.product(ranks, repeat=2):
        for f, v in pairs[r0, r1]:
            yield core.Gauge(ring, (0, 1), [free[r0], free[r1]],
                             [_linear(f, free[r0], free[r1])],
                             [_linear(v, free[r1], free[r0])])
    for r0, r1, r2 in itertools.product(ranks, repeat=3):
        lower = _end_orbits(ring, pairs[r0, r1], r0, left=True)
        upper = _end_orbits(ring, pairs[r1, r2], r2, left=False)
        for (f0, v0), (f1, v1) in itertools.product(lower, upper):
            yield core.Gauge(ring, (0, 2), [free[r0], free[r1], free[r2]],
                             [_linear(f0, free[r0], free[r1]),
                              _linear(f1, free[r1], free[r2])],
                             [_linear(v0, free[r1], free[r0]),
                              _linear(v1, free[r2], free[r1])])
