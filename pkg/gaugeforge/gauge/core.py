"""
Gauges over W_n(F_q): graded modules over W_n[f, v]/(fv - p) of finite type.

A gauge is stored on a finite window [a, b] as the diagram
M^a ⇄ M^(a+1) ⇄ ... ⇄ M^b with f : M^r -> M^(r+1) and v : M^(r+1) -> M^r.
Outside the window the components are identified with the boundary ones:
to the right of b, f is the identity and v is multiplication by p, to the left
of a, v is the identity and f is multiplication by p. Component and map
access through :meth:`~gaugeforge.gauge.core.Gauge.component`,
:meth:`~gaugeforge.gauge.core.Gauge.f` and
:meth:`~gaugeforge.gauge.core.Gauge.v` works for every integer index.

**Construction**

* :class:`~gaugeforge.gauge.core.Gauge`
* :func:`~gaugeforge.gauge.core.free_gauge`: W_n(i)^m
* :func:`~gaugeforge.gauge.core.zero_gauge`
* :func:`~gaugeforge.gauge.core.p_multiple_gauge`: the diagram
  N -> pN -> pN of a lattice N
* :func:`~gaugeforge.gauge.core.direct_sum`
* :func:`~gaugeforge.gauge.core.gauge_from_dict`

**Operations**

* :func:`~gaugeforge.gauge.core.validate_gauge`
* :func:`~gaugeforge.gauge.core.tate_twist`
* :func:`~gaugeforge.gauge.core.truncate_leq0`
* :func:`~gaugeforge.gauge.core.concentration_interval`
* :func:`~gaugeforge.gauge.core.is_effective`
* :func:`~gaugeforge.gauge.core.is_coeffective`
* :func:`~gaugeforge.gauge.core.effective_twist_range`
* :func:`~gaugeforge.gauge.core.minimal_generators`
* :func:`~gaugeforge.gauge.core.generates`
* :func:`~gaugeforge.gauge.core.fingerprint`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import copy as cp
import logging

import numpy as np

from ..utils import Report, SchemaError
from ..witt.chainring import ChainRing
from ..witt.fields import FiniteField
from ..witt import modules

log = logging.getLogger(__name__)


class Gauge(object):
    """
    A finite type gauge stored on the window [a, b].

    Parameters:

    * ring : ChainRing
        The coefficient ring W_n(F_q).
    * interval : tuple = (a, b)
        The storage window, a <= b.
    * components : list of WnModule
        M^a, ..., M^b.
    * f_maps : list of SemilinearMap
        f : M^r -> M^(r+1) for a <= r < b (linear).
    * v_maps : list of SemilinearMap
        v : M^(r+1) -> M^r for a <= r < b (linear).

    Raises ``ValueError`` if the maps do not fit the components.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> G = free_gauge(ChainRing(2, 1), 0)
        >>> G.interval
        (0, 0)
        >>> G.component(5).divisors
        (1,)
        >>> validate_gauge(G).ok
        True

    """

    def __init__(self, ring, interval, components, f_maps=(), v_maps=()):
        a, b = int(interval[0]), int(interval[1])
        if a > b:
            raise ValueError("Invalid interval [{}, {}]".format(a, b))
        components = list(components)
        f_maps, v_maps = list(f_maps), list(v_maps)
        if len(components) != b - a + 1:
            raise ValueError(
                "Interval [{}, {}] needs {} components, got {}".format(
                    a, b, b - a + 1, len(components)))
        if len(f_maps) != b - a or len(v_maps) != b - a:
            raise ValueError("Interval [{}, {}] needs {} f and v maps".format(
                a, b, b - a))
        for k in range(b - a):
            f, v = f_maps[k], v_maps[k]
            if f.domain != components[k] or f.codomain != components[k + 1]:
                raise ValueError("f at index {} does not fit {} -> {}".format(
                    a + k, components[k], components[k + 1]))
            if v.domain != components[k + 1] or v.codomain != components[k]:
                raise ValueError("v at index {} does not fit {} -> {}".format(
                    a + k, components[k + 1], components[k]))
            if f.twist != 0 or v.twist != 0:
                raise ValueError("f and v must be linear (index {})".format(
                    a + k))
        for module in components:
            if module.ring != ring:
                raise ValueError("Component {} is not over {}".format(
                    module, ring))
        self.ring = ring
        self.interval = (a, b)
        self.components = components
        self.f_maps = f_maps
        self.v_maps = v_maps

    @property
    def a(self):
        return self.interval[0]

    @property
    def b(self):
        return self.interval[1]

    @property
    def p(self):
        return self.ring.p

    @property
    def n(self):
        return self.ring.n

    def component(self, r):
        "M^r for any integer r."
        a, b = self.interval
        return self.components[min(max(r, a), b) - a]

    def f(self, r):
        "f : M^r -> M^(r+1) for any integer r."
        a, b = self.interval
        if r >= b:
            return modules.identity_map(self.components[-1])
        if r < a:
            return modules.scalar_map(self.components[0], self.p)
        return self.f_maps[r - a]

    def v(self, r):
        "v : M^(r+1) -> M^r for any integer r."
        a, b = self.interval
        if r >= b:
            return modules.scalar_map(self.components[-1], self.p)
        if r < a:
            return modules.identity_map(self.components[0])
        return self.v_maps[r - a]

    def f_power(self, r, k):
        "The composite f^k : M^r -> M^(r+k), k >= 0."
        result = modules.identity_map(self.component(r))
        for s in range(r, r + k):
            result = self.f(s).compose(result)
        return result

    def v_power(self, r, k):
        "The composite v^k : M^r -> M^(r-k), k >= 0."
        result = modules.identity_map(self.component(r))
        for s in range(r - 1, r - k - 1, -1):
            result = self.v(s).compose(result)
        return result

    @property
    def plus_infinity(self):
        "M^(+infinity) = M^b."
        return self.components[-1]

    @property
    def minus_infinity(self):
        "M^(-infinity) = M^a."
        return self.components[0]

    def lengths(self):
        "W-lengths of the stored components."
        return [m.length for m in self.components]

    def is_zero(self):
        return all(m.is_zero() for m in self.components)

    def window(self, lower, upper):
        """
        The same gauge stored on a larger window [lower, upper].
        """
        assert lower <= self.a and upper >= self.b, \
            "Window [{}, {}] does not contain [{}, {}]".format(
                lower, upper, self.a, self.b)
        components = [self.component(r) for r in range(lower, upper + 1)]
        f_maps = [self.f(r) for r in range(lower, upper)]
        v_maps = [self.v(r) for r in range(lower, upper)]
        return Gauge(self.ring, (lower, upper), components, f_maps, v_maps)

    def tighten(self):
        """
        The same gauge on its minimal window.

        The top component is dropped while the last f is bijective and the
        bottom one while the first v is bijective.
        """
        a, b = self.interval
        components = list(self.components)
        f_maps, v_maps = list(self.f_maps), list(self.v_maps)
        while b > a and f_maps[-1].is_bijective():
            components.pop()
            f_maps.pop()
            v_maps.pop()
            b -= 1
        while b > a and v_maps[0].is_bijective():
            components.pop(0)
            f_maps.pop(0)
            v_maps.pop(0)
            a += 1
        return Gauge(self.ring, (a, b), components, f_maps, v_maps)

    def reduce_mod_p(self):
        """
        The k-gauge M/pM over W_1(F_q).
        """
        ring1 = ChainRing(self.ring.field, 1)

        def reduce_module(module):
            return modules.WnModule(ring1, [1]*module.rank)

        def reduce_map(mapping):
            return modules.SemilinearMap(
                mapping.matrix % self.p, reduce_module(mapping.domain),
                reduce_module(mapping.codomain), mapping.twist)

        return Gauge(ring1, self.interval,
                     [reduce_module(m) for m in self.components],
                     [reduce_map(f) for f in self.f_maps],
                     [reduce_map(v) for v in self.v_maps])

    def copy(self):
        return cp.deepcopy(self)

    def same_as(self, other):
        "True if both gauges have identical windows, components and maps."
        if self.ring != other.ring or self.interval != other.interval:
            return False
        if self.components != other.components:
            return False
        return all(x.equals(y) for x, y in zip(self.f_maps + self.v_maps,
                                                other.f_maps + other.v_maps))

    def to_dict(self):
        return {'context': self.ring.context,
                'interval': list(self.interval),
                'components': [list(m.divisors) for m in self.components],
                'f': [f.matrix.tolist() for f in self.f_maps],
                'v': [v.matrix.tolist() for v in self.v_maps]}

    def __repr__(self):
        return 'Gauge([{}, {}], {})'.format(
            self.a, self.b, [list(m.divisors) for m in self.components])


def ring_from_context(context):
    """
    The chain ring described by a JSON context {"p", "d", "n", "minpoly"}.
    """
    try:
        p = int(context['p'])
        n = int(context['n'])
        d = int(context.get('d', 1))
        minpoly = context.get('minpoly')
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError("Invalid context {!r}: {}".format(context, err))
    try:
        field = FiniteField(p, d, minpoly=minpoly)
    except (AssertionError, ValueError) as err:
        raise SchemaError("Invalid field in context: {}".format(err))
    return ChainRing(field, n)


def matrix_from_json(ring, rows, nrows, ncols):
    """
    A ring matrix from nested lists.

    Entries are integers (read in Z/p^n) or coordinate lists of length d.
    """
    if nrows == 0 or ncols == 0:
        return ring.zeros(nrows, ncols)
    try:
        arr = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError) as err:
        raise SchemaError("Invalid matrix {!r}: {}".format(rows, err))
    if arr.ndim == 2:
        full = ring.zeros(*arr.shape)
        full[..., 0] = arr
        arr = full
    if arr.shape != (nrows, ncols, ring.d):
        raise SchemaError("Matrix of shape {} where {} was expected".format(
            arr.shape, (nrows, ncols, ring.d)))
    return arr % ring.modulus


def gauge_from_dict(data):
    """
    Build a gauge from its JSON form.

    Raises :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    try:
        ring = ring_from_context(data['context'])
        a, b = [int(x) for x in data['interval']]
        divisors = data['components']
        f_rows = data.get('f', [])
        v_rows = data.get('v', [])
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError("Invalid gauge document: {}".format(err))
    try:
        components = [modules.WnModule(ring, d) for d in divisors]
    except (AssertionError, TypeError, ValueError) as err:
        raise SchemaError("Invalid component: {}".format(err))
    if len(components) != b - a + 1 or len(f_rows) != b - a or \
            len(v_rows) != b - a:
        raise SchemaError("Interval [{}, {}] does not match the lists".format(
            a, b))
    f_maps, v_maps = [], []
    for k in range(b - a):
        src, dst = components[k], components[k + 1]
        f_maps.append(modules.SemilinearMap(
            matrix_from_json(ring, f_rows[k], dst.rank, src.rank), src, dst))
        v_maps.append(modules.SemilinearMap(
            matrix_from_json(ring, v_rows[k], src.rank, dst.rank), dst, src))
    try:
        return Gauge(ring, (a, b), components, f_maps, v_maps)
    except ValueError as err:
        raise SchemaError(str(err))


def zero_gauge(ring, degree=0):
    "The zero gauge."
    return Gauge(ring, (degree, degree), [modules.WnModule.zero(ring)])


def free_gauge(ring, i, multiplicity=1):
    """
    The free gauge W_n(i)^m, concentrated in degree -i.

    Parameters:

    * ring : ChainRing
    * i : int
        The Tate twist.
    * multiplicity : int
        The rank m.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> G = free_gauge(ChainRing(3, 2), 1, 2)
        >>> G.interval
        (-1, -1)
        >>> G.component(0).divisors
        (2, 2)

    """
    module = modules.WnModule.free(ring, multiplicity)
    return Gauge(ring, (-i, -i), [module])


def p_multiple_gauge(ring, rank=1, start=0):
    """
    The gauge N -> pN -> pN of a free lattice N, placed at [start, start+2].

    With pN identified with N, f is the identity then p and v is p then the
    identity. Its components are free but it is not a free gauge.
    """
    module = modules.WnModule.free(ring, rank)
    ident = modules.identity_map(module)
    mult = modules.scalar_map(module, ring.p)
    return Gauge(ring, (start, start + 2), [module, module, module],
                 [ident, mult], [mult, ident])


def validate_gauge(gauge):
    """
    Check fv = vf = p at every index.

    Parameters:

    * gauge : Gauge

    Returns:

    * report : Report
        Violations carry the index r and the failed relation (``'fv'`` on
        M^(r+1) or ``'vf'`` on M^r). Ill defined maps are reported too.

    """
    report = Report('gauge relation', {'interval': list(gauge.interval)})
    for r in range(gauge.a - 1, gauge.b + 1):
        f, v = gauge.f(r), gauge.v(r)
        for name, mapping in [('f', f), ('v', v)]:
            if not mapping.is_well_defined():
                report.violate({'index': r, 'relation': name + ' defined'})
        pv = modules.scalar_map(gauge.component(r + 1), gauge.p)
        pf = modules.scalar_map(gauge.component(r), gauge.p)
        report.check(f.compose(v).equals(pv), {'index': r, 'relation': 'fv'})
        report.check(v.compose(f).equals(pf), {'index': r, 'relation': 'vf'})
    return report


def tate_twist(gauge, i):
    """
    The Tate twist M(i) with M(i)^r = M^(r+i), stored on [a-i, b-i].
    """
    return Gauge(gauge.ring, (gauge.a - i, gauge.b - i), gauge.components,
                 gauge.f_maps, gauge.v_maps)


def truncate_leq0(gauge):
    """
    The coeffective truncation M_<=0.

    M_<=0^r = M^r for r <= 0 and M^0 for r >= 0, with f the identity and v
    multiplication by p in non-negative degrees.
    """
    lower = min(gauge.a, 0)
    components = [gauge.component(r) for r in range(lower, 1)]
    f_maps = [gauge.f(r) for r in range(lower, 0)]
    v_maps = [gauge.v(r) for r in range(lower, 0)]
    return Gauge(gauge.ring, (lower, 0), components, f_maps,
                 v_maps).tighten()


def concentration_interval(gauge):
    "The minimal window (a, b)."
    return gauge.tighten().interval


def is_effective(gauge):
    "True if v : M^r -> M^(r-1) is bijective for every r <= 0."
    return all(gauge.v(r).is_bijective()
               for r in range(min(gauge.a, 0) - 1, 0))


def is_coeffective(gauge):
    "True if f : M^r -> M^(r+1) is bijective for every r >= 0."
    return all(gauge.f(r).is_bijective()
               for r in range(0, max(gauge.b, 0) + 1))


def effective_twist_range(gauge):
    """
    The Tate twists i for which M(i) is effective or coeffective.

    Returns a dict with ``'effective_max'`` (M(i) is effective iff
    i <= effective_max) and ``'coeffective_min'`` (coeffective iff
    i >= coeffective_min).
    """
    a, b = concentration_interval(gauge)
    return {'effective_max': a, 'coeffective_min': b}


def direct_sum(*gauges):
    """
    The direct sum of gauges over a common ring.
    """
    assert gauges, "Need at least one gauge"
    ring = gauges[0].ring
    lower = min(g.a for g in gauges)
    upper = max(g.b for g in gauges)
    components, f_maps, v_maps = [], [], []
    for r in range(lower, upper + 1):
        components.append(modules.direct_sum(
            *[g.component(r) for g in gauges])[0])
    for r in range(lower, upper):
        here = [g.component(r) for g in gauges]
        there = [g.component(r + 1) for g in gauges]
        count = len(gauges)
        f_blocks = [[gauges[i].f(r) if i == j else None for j in range(count)]
                    for i in range(count)]
        v_blocks = [[gauges[i].v(r) if i == j else None for j in range(count)]
                    for i in range(count)]
        f_maps.append(modules.block_map(f_blocks, here, there))
        v_maps.append(modules.block_map(v_blocks, there, here))
    return Gauge(ring, (lower, upper), components, f_maps, v_maps)


def _generator_quotient(gauge, r):
    "M^r / (p, f, v) with its projection and lifting section."
    module = gauge.component(r)
    ring = gauge.ring
    parts = [ring.scalar_matrix(module.rank, ring.p_power(1)),
             gauge.f(r - 1).matrix, gauge.v(r).matrix]
    return modules.quotient_by(module, np.concatenate(parts, axis=1))


def minimal_generators(gauge):
    """
    Homogeneous generators lifting a basis of M/(p, f, v)M.

    Returns:

    * generators : list of (degree, element)
        Ordered by degree. Their classes form a basis of M/(p, f, v)M and
        by Nakayama they generate M.

    """
    generators = []
    for r in range(gauge.a, gauge.b + 1):
        quotient, _, section = _generator_quotient(gauge, r)
        module = gauge.component(r)
        for j in range(quotient.rank):
            generators.append((r, module.reduce(section[:, j])))
    log.debug("Found %d generators on [%d, %d]", len(generators), gauge.a,
              gauge.b)
    return generators


def generated_elements(gauge, generators, r):
    """
    The images in M^r of homogeneous elements under powers of f and v.

    Returns a (rank, count, d) matrix whose columns span the degree r part
    of the submodule generated by *generators*.
    """
    columns = []
    for degree, element in generators:
        if r >= degree:
            mapping = gauge.f_power(degree, r - degree)
        else:
            mapping = gauge.v_power(degree, degree - r)
        columns.append(mapping.apply(element))
    if not columns:
        return gauge.ring.zeros(gauge.component(r).rank, 0)
    return np.stack(columns, axis=1)


def generates(gauge, generators):
    """
    True if the homogeneous elements generate the gauge as a D_n-module.
    """
    for r in range(gauge.a, gauge.b + 1):
        module = gauge.component(r)
        if module.is_zero():
            continue
        span = generated_elements(gauge, generators, r)
        if not modules.span_contains(module, span,
                                     gauge.ring.identity(module.rank)):
            return False
    return True


def fingerprint(gauge):
    """
    Isomorphism invariants of a gauge.

    The minimal window, the component divisors and the divisors of the
    images and kernels of f, v and their composites on the window. Two
    isomorphic gauges have equal fingerprints.
    """
    tight = gauge.tighten()
    a, b = tight.interval
    invariants = []
    for r in range(a - 1, b + 1):
        row = []
        for mapping in [tight.f(r), tight.v(r)]:
            row.append(modules.image(mapping)[0].divisors)
            row.append(modules.kernel(mapping)[0].divisors)
        for k in range(2, b - a + 2):
            if r + k <= b + 1:
                row.append(modules.image(tight.f_power(r, k))[0].divisors)
            if r - k >= a - 1:
                row.append(modules.image(tight.v_power(r, k))[0].divisors)
        invariants.append(tuple(row))
    return ((a, b), tuple(m.divisors for m in tight.components),
            tuple(invariants))
