"""
Morphisms of gauges and the constructions built from them.

A morphism is a family of linear maps alpha_r : M^r -> N^r commuting with f
and v, stored on a window that contains both concentration windows.

**Morphisms**

* :class:`~gaugeforge.gauge.morphisms.GaugeMorphism`
* :func:`~gaugeforge.gauge.morphisms.validate_morphism`
* :func:`~gaugeforge.gauge.morphisms.kernel`
* :func:`~gaugeforge.gauge.morphisms.cokernel`
* :func:`~gaugeforge.gauge.morphisms.identity`

**Hom sets**

* :func:`~gaugeforge.gauge.morphisms.hom_module`: Hom(M, N) as a W_n-module
* :func:`~gaugeforge.gauge.morphisms.hom_count`
* :func:`~gaugeforge.gauge.morphisms.enumerate_morphisms`
* :func:`~gaugeforge.gauge.morphisms.isomorphic`

**Constructions**

* :func:`~gaugeforge.gauge.morphisms.free_cover`: the surjection from a free
  gauge on minimal generators
* :func:`~gaugeforge.gauge.morphisms.tensor`
* :func:`~gaugeforge.gauge.morphisms.random_gauge`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import logging

import numpy as np

from .. import constants
from ..utils import Report, PreconditionError, TruncationOverflow
from ..witt import modules
from ..witt.modules import WnModule
from . import core

log = logging.getLogger(__name__)


class GaugeMorphism(object):
    """
    A morphism of gauges stored on the window [lo, hi].

    Parameters:

    * source, target : Gauge
    * window : tuple = (lo, hi)
        Must contain the windows of both gauges.
    * maps : list of SemilinearMap
        Linear maps source^r -> target^r for lo <= r <= hi.

    """

    def __init__(self, source, target, window, maps):
        lo, hi = int(window[0]), int(window[1])
        assert source.ring == target.ring, "Gauges over different rings"
        assert lo <= min(source.a, target.a) and \
            hi >= max(source.b, target.b), \
            "Window [{}, {}] does not contain both gauges".format(lo, hi)
        maps = list(maps)
        if len(maps) != hi - lo + 1:
            raise ValueError("Window [{}, {}] needs {} maps, got {}".format(
                lo, hi, hi - lo + 1, len(maps)))
        for r, mapping in zip(range(lo, hi + 1), maps):
            if mapping.domain != source.component(r) or \
                    mapping.codomain != target.component(r) or \
                    mapping.twist != 0:
                raise ValueError("Map at index {} does not fit".format(r))
        self.source = source
        self.target = target
        self.window = (lo, hi)
        self.maps = maps

    def at(self, r):
        "alpha_r for any integer r."
        lo, hi = self.window
        return self.maps[min(max(r, lo), hi) - lo]

    def compose(self, other):
        "The composite self ∘ other."
        assert other.target.same_as(self.source) or \
            other.target is self.source, "Morphisms do not compose"
        lo = min(self.window[0], other.window[0])
        hi = max(self.window[1], other.window[1])
        maps = [self.at(r).compose(other.at(r)) for r in range(lo, hi + 1)]
        return GaugeMorphism(other.source, self.target, (lo, hi), maps)

    def is_isomorphism(self):
        return all(m.is_bijective() for m in self.maps)

    def is_zero(self):
        return all(m.is_zero() for m in self.maps)

    def to_dict(self):
        return {'window': list(self.window),
                'maps': [m.matrix.tolist() for m in self.maps]}

    def __repr__(self):
        return 'GaugeMorphism({} -> {}, window={})'.format(
            self.source, self.target, self.window)


def _common_window(*gauges):
    return (min(g.a for g in gauges), max(g.b for g in gauges))


def identity(gauge):
    "The identity morphism of a gauge."
    lo, hi = gauge.interval
    return GaugeMorphism(gauge, gauge, (lo, hi),
                         [modules.identity_map(m) for m in gauge.components])


def validate_morphism(morphism):
    """
    Check that a morphism commutes with f and v.

    Returns a :class:`~gaugeforge.utils.Report` whose witnesses carry the
    index and the failed square (``'f'`` or ``'v'``).
    """
    source, target = morphism.source, morphism.target
    lo, hi = morphism.window
    report = Report('morphism squares', {'window': [lo, hi]})
    for r in range(lo - 1, hi + 1):
        left = morphism.at(r + 1).compose(source.f(r))
        right = target.f(r).compose(morphism.at(r))
        report.check(left.equals(right), {'index': r, 'square': 'f'})
        left = morphism.at(r).compose(source.v(r))
        right = target.v(r).compose(morphism.at(r + 1))
        report.check(left.equals(right), {'index': r, 'square': 'v'})
    return report


def _solve_columns(embedding, columns):
    "Matrix whose column j solves embedding(y) = columns[:, j]."
    solutions = [modules.solve(embedding, columns[:, j])
                 for j in range(columns.shape[1])]
    if not solutions:
        return None
    return np.stack(solutions, axis=1)


def kernel(morphism):
    """
    The kernel gauge, stored on the morphism window.

    Returns:

    * ker : Gauge
    * embedding : GaugeMorphism
        The inclusion ker -> source.

    """
    source = morphism.source
    lo, hi = morphism.window
    parts = [modules.kernel(morphism.at(r)) for r in range(lo, hi + 1)]
    components = [ker for ker, _ in parts]
    f_maps, v_maps = [], []
    for k in range(hi - lo):
        r = lo + k
        (here, emb_here), (there, emb_there) = parts[k], parts[k + 1]
        images = source.f(r).compose(emb_here).matrix
        f_maps.append(modules.SemilinearMap(
            _solve_columns(emb_there, images), here, there))
        images = source.v(r).compose(emb_there).matrix
        v_maps.append(modules.SemilinearMap(
            _solve_columns(emb_here, images), there, here))
    ker = core.Gauge(source.ring, (lo, hi), components, f_maps, v_maps)
    embedding = GaugeMorphism(ker, source, (lo, hi),
                              [emb for _, emb in parts])
    return ker, embedding


def cokernel(morphism):
    """
    The cokernel gauge, stored on the morphism window.

    Returns:

    * coker : Gauge
    * projection : GaugeMorphism
        The quotient map target -> coker.

    """
    target = morphism.target
    ring = target.ring
    lo, hi = morphism.window
    parts = [modules.cokernel(morphism.at(r)) for r in range(lo, hi + 1)]
    components = [coker for coker, _, _ in parts]
    f_maps, v_maps = [], []
    for k in range(hi - lo):
        r = lo + k
        here, proj_here, sec_here = parts[k]
        there, proj_there, sec_there = parts[k + 1]
        lifted = ring.matmul(target.f(r).matrix, sec_here)
        f_maps.append(modules.SemilinearMap(
            ring.matmul(proj_there.matrix, lifted), here, there))
        lifted = ring.matmul(target.v(r).matrix, sec_there)
        v_maps.append(modules.SemilinearMap(
            ring.matmul(proj_here.matrix, lifted), there, here))
    coker = core.Gauge(ring, (lo, hi), components, f_maps, v_maps)
    projection = GaugeMorphism(target, coker, (lo, hi),
                               [proj for _, proj, _ in parts])
    return coker, projection


# Hom modules -----------------------------------------------------------------

def _hom_layout(domain, codomain):
    """
    Hom(domain, codomain) as a sum of W_min(e_j, f_i).

    The entry (i, j) of a map is p^max(f_i - e_j, 0) t with t in
    W_min(e_j, f_i). Returns the module and the (i, j, shift) label of each
    of its generators.
    """
    labels = []
    for i, f in enumerate(codomain.divisors):
        for j, e in enumerate(domain.divisors):
            labels.append((min(e, f), i, j, max(f - e, 0)))
    order = sorted(range(len(labels)), key=lambda t: -labels[t][0])
    module = WnModule(domain.ring, [labels[t][0] for t in order])
    return module, [labels[t][1:] for t in order]


def _hom_to_matrix(ring, coords, layout, domain, codomain):
    matrix = ring.zeros(codomain.rank, domain.rank)
    for x, (i, j, shift) in zip(coords, layout):
        matrix[i, j] = ring.mul(ring.p_power(shift), x)
    return codomain.reduce(matrix)


def _matrix_to_hom(ring, matrix, layout, module):
    coords = np.zeros((module.rank, ring.d), dtype=np.int64)
    for k, (i, j, shift) in enumerate(layout):
        coords[k] = ring.divide_p(matrix[i, j], shift)
    return module.reduce(coords)


class HomModule(object):
    """
    Hom(M, N) of two gauges as a submodule of the product of component Homs.

    Attributes:

    * module : WnModule
        Hom(M, N) in canonical form.
    * embedding : SemilinearMap
        Into the coordinates of the component Homs on the window.

    """

    def __init__(self, source, target):
        self.source = source
        self.target = target
        self.ring = source.ring
        lo, hi = _common_window(source, target)
        self.window = (lo, hi)
        self.layouts = []
        pieces = []
        for r in range(lo, hi + 1):
            module, layout = _hom_layout(source.component(r),
                                         target.component(r))
            pieces.append(module)
            self.layouts.append(layout)
        self.product, self.injections, self.projections = \
            modules.direct_sum(*pieces)
        self.pieces = pieces
        self.module, self.embedding = modules.kernel(self._constraints())
        log.debug("Hom module on [%d, %d] with divisors %s", lo, hi,
                  self.module.divisors)

    def _morphism_of(self, coords):
        "The GaugeMorphism with the given product coordinates."
        ring = self.ring
        lo, hi = self.window
        maps = []
        for k, r in enumerate(range(lo, hi + 1)):
            local = self.projections[k].apply(coords)
            src = self.source.component(r)
            dst = self.target.component(r)
            matrix = _hom_to_matrix(ring, local, self.layouts[k], src, dst)
            maps.append(modules.SemilinearMap(matrix, src, dst))
        return GaugeMorphism(self.source, self.target, (lo, hi), maps)

    def _constraints(self):
        """
        The linear map alpha -> (alpha f - f alpha, alpha v - v alpha).
        """
        ring = self.ring
        lo, hi = self.window
        source, target = self.source, self.target
        targets, layouts = [], []
        for r in range(lo, hi):
            for dom, cod in [(source.component(r), target.component(r + 1)),
                             (source.component(r + 1), target.component(r))]:
                module, layout = _hom_layout(dom, cod)
                targets.append(module)
                layouts.append((layout, dom, cod))
        if not targets:
            return modules.zero_map(self.product, WnModule.zero(ring))
        total, injections, _ = modules.direct_sum(*targets)
        columns = []
        for g in range(self.product.rank):
            alpha = self._morphism_of(self.product.generator(g))
            value = total.zero_element()
            for k, r in enumerate(range(lo, hi)):
                f_diff = (alpha.at(r + 1).compose(source.f(r)) -
                          target.f(r).compose(alpha.at(r)))
                v_diff = (alpha.at(r).compose(source.v(r)) -
                          target.v(r).compose(alpha.at(r + 1)))
                for slot, diff in [(2*k, f_diff), (2*k + 1, v_diff)]:
                    layout, _, _ = layouts[slot]
                    coords = _matrix_to_hom(ring, diff.matrix, layout,
                                            targets[slot])
                    value = value + injections[slot].apply(coords)
            columns.append(total.reduce(value))
        return modules.SemilinearMap(np.stack(columns, axis=1), self.product,
                                     total)

    @property
    def size(self):
        return self.module.size

    def morphism(self, element):
        "The morphism given by an element of the Hom module."
        return self._morphism_of(self.embedding.apply(element))

    def generators(self):
        "Morphisms generating Hom(M, N) over W_n."
        return [self.morphism(self.module.generator(i))
                for i in range(self.module.rank)]


def hom_module(source, target):
    """
    Hom(source, target) as a W_n-module with a way back to morphisms.

    Returns a :class:`~gaugeforge.gauge.morphisms.HomModule`.
    """
    return HomModule(source, target)


def hom_count(source, target):
    """
    The number of gauge morphisms source -> target.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 1)
        >>> hom_count(core.free_gauge(R, 0), core.free_gauge(R, 0, 2))
        4

    """
    return hom_module(source, target).size


def enumerate_morphisms(source, target, limit=constants.MAX_ENUMERATION):
    """
    Iterate over all morphisms source -> target.

    Raises :class:`~gaugeforge.utils.TruncationOverflow` if there are more
    than *limit* of them.
    """
    hom = hom_module(source, target)
    if hom.size > limit:
        raise TruncationOverflow(
            "Hom set of size {} exceeds the enumeration limit {}".format(
                hom.size, limit))
    for element in hom.module.elements():
        yield hom.morphism(element)


def isomorphic(first, second, limit=constants.MAX_ENUMERATION):
    """
    Decide whether two gauges are isomorphic.

    Returns True or False, or None when the fingerprints agree but the Hom
    set is too large to search.
    """
    if first.ring != second.ring:
        return False
    if core.fingerprint(first) != core.fingerprint(second):
        return False
    if first.same_as(second):
        return True
    hom = hom_module(first, second)
    if hom.size > limit:
        log.info("Hom set of size %d too large, isomorphism undecided",
                 hom.size)
        return None
    for element in hom.module.elements():
        if hom.morphism(element).is_isomorphism():
            return True
    return False


# Free covers and tensor products ---------------------------------------------

def free_cover(gauge):
    """
    The free gauge on the minimal generators and its surjection to *gauge*.

    The j-th generator of degree d_j spans a copy of W_n(-d_j).

    Returns:

    * free : Gauge
    * cover : GaugeMorphism
        Surjective; an isomorphism exactly when *gauge* is free.
    * degrees : list of int

    """
    ring = gauge.ring
    generators = core.minimal_generators(gauge)
    degrees = [deg for deg, _ in generators]
    if not generators:
        free = core.zero_gauge(ring, gauge.a)
    else:
        lo, hi = min(degrees), max(degrees)
        module = WnModule.free(ring, len(degrees))
        f_maps, v_maps = [], []
        for r in range(lo, hi):
            f_diag = [ring.p_power(0 if r >= deg else 1) for deg in degrees]
            v_diag = [ring.p_power(0 if r < deg else 1) for deg in degrees]
            f_maps.append(modules.SemilinearMap(ring.diagonal(f_diag),
                                                module, module))
            v_maps.append(modules.SemilinearMap(ring.diagonal(v_diag),
                                                module, module))
        free = core.Gauge(ring, (lo, hi), [module]*(hi - lo + 1),
                          f_maps, v_maps)
    lo, hi = _common_window(gauge, free)
    maps = []
    for r in range(lo, hi + 1):
        columns = core.generated_elements(gauge, generators, r)
        maps.append(modules.SemilinearMap(columns, free.component(r),
                                          gauge.component(r)))
    return free, GaugeMorphism(free, gauge, (lo, hi), maps), degrees


def presentation(gauge):
    """
    Generators and relations of a gauge.

    Returns:

    * degrees : list of int
        Degrees of the generators g_j.
    * relations : list of (degree, element)
        Each element lies in the degree part of the free cover, so its j-th
        coordinate is the coefficient of g_j moved into that degree by
        powers of f or v.

    """
    free, cover, degrees = free_cover(gauge)
    ker, embedding = kernel(cover)
    relations = [(deg, embedding.at(deg).apply(element))
                 for deg, element in core.minimal_generators(ker)]
    return degrees, relations


def _move(gauge, start, shift):
    "f^shift (shift >= 0) or v^-shift from the component of index start."
    if shift >= 0:
        return gauge.f_power(start, shift)
    return gauge.v_power(start, -shift)


def tensor(first, second):
    """
    The tensor product of two gauges over D_n.

    *first* is presented by generators g_j and relations h, and the product
    is computed degreewise as the cokernel of the induced map
    sum_h N^(r - deg h) -> sum_j N^(r - deg g_j).

    Raises :class:`~gaugeforge.utils.PreconditionError` on a context
    mismatch.
    """
    if first.ring != second.ring:
        raise PreconditionError("Tensor product over different rings")
    ring = first.ring
    degrees, relations = presentation(first)
    lo, hi = first.a + second.a, first.b + second.b
    if not degrees:
        return core.zero_gauge(ring, lo)
    parts = []
    for r in range(lo, hi + 1):
        targets = [second.component(r - deg) for deg in degrees]
        if relations:
            sources = [second.component(r - deg) for deg, _ in relations]
            blocks = []
            for j, deg_g in enumerate(degrees):
                row = []
                for deg_h, element in relations:
                    coef = element[j]
                    move = _move(second, r - deg_h, deg_h - deg_g)
                    row.append(None if ring.is_zero(coef)
                               else move.scaled(coef))
                blocks.append(row)
            rel_map = modules.block_map(blocks, sources, targets)
        else:
            total = modules.direct_sum(*targets)[0]
            rel_map = modules.zero_map(WnModule.zero(ring), total)
        parts.append((targets, modules.cokernel(rel_map)))
    components, f_maps, v_maps = [], [], []
    for k in range(hi - lo + 1):
        components.append(parts[k][1][0])
    count = len(degrees)
    for k in range(hi - lo):
        r = lo + k
        targets_here, (here, proj_here, sec_here) = parts[k]
        targets_there, (there, proj_there, sec_there) = parts[k + 1]
        f_blocks = [[second.f(r - deg) if i == j else None
                     for j in range(count)] for i, deg in enumerate(degrees)]
        v_blocks = [[second.v(r - deg) if i == j else None
                     for j in range(count)] for i, deg in enumerate(degrees)]
        big_f = modules.block_map(f_blocks, targets_here, targets_there)
        big_v = modules.block_map(v_blocks, targets_there, targets_here)
        f_maps.append(modules.SemilinearMap(
            ring.matmul(proj_there.matrix,
                        ring.matmul(big_f.matrix, sec_here)), here, there))
        v_maps.append(modules.SemilinearMap(
            ring.matmul(proj_here.matrix,
                        ring.matmul(big_v.matrix, sec_there)), there, here))
    result = core.Gauge(ring, (lo, hi), components, f_maps, v_maps)
    return result.tighten()


def random_chain(ring, rng, lower, upper, divisor=None):
    """
    A random rank one gauge with all components W_e on [lower, upper].

    Every step is (f, v) = (u, p/u) or (p u, 1/u) for a random unit u. Over
    W_1 the step (0, 0) is drawn as well.
    """
    e = ring.n if divisor is None else divisor
    module = WnModule(ring, [e])
    f_maps, v_maps = [], []
    for _ in range(lower, upper):
        unit = ring.random(rng)
        while not ring.is_unit(unit):
            unit = ring.random(rng)
        inv = ring.unit_inverse(unit)
        choice = rng.randint(0, 3 if e == 1 else 2)
        if choice == 0:
            f, v = unit, ring.mul(ring.p_power(1), inv)
        elif choice == 1:
            f, v = ring.mul(ring.p_power(1), unit), inv
        else:
            f, v = ring.zero(), ring.zero()
        f_maps.append(modules.scalar_map(module, f))
        v_maps.append(modules.scalar_map(module, v))
    return core.Gauge(ring, (lower, upper), [module]*(upper - lower + 1),
                      f_maps, v_maps)


def random_gauge(ring, rng, lower=-1, upper=1, pieces=2):
    """
    A random gauge: a direct sum of random chains on sub-windows.
    """
    chains = []
    for _ in range(pieces):
        a = rng.randint(lower, upper + 1)
        b = rng.randint(a, upper + 1)
        e = rng.randint(1, ring.n + 1)
        chains.append(random_chain(ring, rng, a, b, e))
    return core.direct_sum(*chains)
