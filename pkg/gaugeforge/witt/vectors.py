"""
Truncated p-typical Witt vectors W_n(F_q) in Witt coordinates.

Addition and multiplication use the universal structure polynomials, derived
once per (p, n) from the ghost components over the integers and cached. The
Frobenius acts componentwise by c -> c^p and the Verschiebung shifts
coordinates to the right.

**Structure polynomials**

* :func:`~gaugeforge.witt.vectors.ghost_polynomials`
* :func:`~gaugeforge.witt.vectors.witt_structure_polynomials`

**Ring and elements**

* :class:`~gaugeforge.witt.vectors.WittRing`
* :class:`~gaugeforge.witt.vectors.WittElem`

**Operations**

* :func:`~gaugeforge.witt.vectors.witt_add`
* :func:`~gaugeforge.witt.vectors.witt_mul`
* :func:`~gaugeforge.witt.vectors.witt_neg`
* :func:`~gaugeforge.witt.vectors.witt_frobenius`
* :func:`~gaugeforge.witt.vectors.witt_verschiebung`
* :func:`~gaugeforge.witt.vectors.teichmuller`
* :func:`~gaugeforge.witt.vectors.from_integer`

**Checks**

* :func:`~gaugeforge.witt.vectors.ghost_equivalence_report`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import collections
import itertools
import logging
import threading

import numpy as np
from sympy import ZZ
from sympy.polys.rings import ring as polynomial_ring

from .. import constants
from ..utils import Report, random_state
from .fields import FiniteField
from .chainring import ChainRing
from . import _witt_numba

log = logging.getLogger(__name__)

StructurePolynomials = collections.namedtuple(
    'StructurePolynomials', ['ring', 'xs', 'ys', 'sums', 'products'])

_cache = {}
_compiled = {}
_cache_lock = threading.Lock()


def _variables(p, n):
    names = ['X{}'.format(i) for i in range(n)] + \
        ['Y{}'.format(i) for i in range(n)]
    result = polynomial_ring(','.join(names), ZZ)
    return result[0], list(result[1:n + 1]), list(result[n + 1:])


def ghost_polynomials(p, variables):
    """
    The ghost components w_k = sum_{i <= k} p^i X_i^(p^(k-i)).

    Parameters:

    * p : int
        The prime.
    * variables : list
        Polynomial ring generators X_0, ..., X_{n-1}.

    Returns:

    * ghosts : list
        The polynomials w_0, ..., w_{n-1}.

    """
    n = len(variables)
    return [sum((p**i*variables[i]**(p**(k - i)) for i in range(k + 1)),
                variables[0].ring.zero)
            for k in range(n)]


def _solve_ghost(p, ghost_target, n):
    """
    Find polynomials Z_0..Z_{n-1} with ghost(Z) equal to the targets.
    """
    solved = []
    for k in range(n):
        rest = ghost_target[k]
        for i in range(k):
            rest = rest - p**i*solved[i]**(p**(k - i))
        divisor = p**k
        if any(c % divisor for c in rest.values()):
            raise ArithmeticError(
                "Ghost component {} not divisible by {}".format(k, divisor))
        solved.append(rest.quo_ground(divisor))
    return solved


def witt_structure_polynomials(p, n):
    """
    Integer polynomials S_k and P_k giving Witt addition and multiplication.

    They satisfy ghost(S) = ghost(X) + ghost(Y) and
    ghost(P) = ghost(X)*ghost(Y) identically over the integers. Results are
    cached per (p, n) and safe to request from several threads.

    Parameters:

    * p : int
        The prime.
    * n : int
        The truncation length.

    Returns:

    * polys : StructurePolynomials
        Named tuple with the polynomial ring, the generators ``xs`` and ``ys``
        and the lists ``sums`` (S_k) and ``products`` (P_k).

    Examples:

        >>> polys = witt_structure_polynomials(2, 2)
        >>> x0, x1 = polys.xs
        >>> y0, y1 = polys.ys
        >>> polys.sums[1] == x1 + y1 - x0*y0
        True
        >>> polys.products[0] == x0*y0
        True

    """
    assert n >= 1, "Invalid length {}. Must be >= 1.".format(n)
    assert n <= constants.MAX_WITT_LENGTH, \
        "Length {} exceeds MAX_WITT_LENGTH".format(n)
    key = (p, n)
    with _cache_lock:
        if key not in _cache:
            log.debug("Generating Witt structure polynomials p=%d n=%d", p, n)
            R, xs, ys = _variables(p, n)
            gx = ghost_polynomials(p, xs)
            gy = ghost_polynomials(p, ys)
            sums = _solve_ghost(p, [a + b for a, b in zip(gx, gy)], n)
            products = _solve_ghost(p, [a*b for a, b in zip(gx, gy)], n)
            _cache[key] = StructurePolynomials(R, xs, ys, sums, products)
        return _cache[key]


def _compile(p, n):
    "Coefficient and exponent arrays of the structure polynomials mod p."
    key = (p, n)
    with _cache_lock:
        if key in _compiled:
            return _compiled[key]
    polys = witt_structure_polynomials(p, n)
    tables = []
    for group in (polys.sums, polys.products):
        compiled = []
        for poly in group:
            terms = [(monom, int(c) % p) for monom, c in poly.terms()
                     if int(c) % p != 0]
            coefs = np.array([c for _, c in terms], dtype=np.int64)
            exps = np.array([m for m, _ in terms],
                            dtype=np.int64).reshape(len(terms), 2*n)
            compiled.append((coefs, exps))
        tables.append(compiled)
    with _cache_lock:
        _compiled[key] = tuple(tables)
    return _compiled[key]


class WittRing(object):
    """
    The ring W_n(F_q) of Witt vectors of length n.

    Elements are tuples of n field codes (see
    :class:`~gaugeforge.witt.fields.FiniteField`).

    Parameters:

    * field : FiniteField or int
        The residue field, or a prime p for F_p.
    * n : int
        The truncation length.

    Examples:

        >>> W = WittRing(2, 2)
        >>> W.add((1, 0), (1, 0))
        (0, 1)
        >>> W.mul((1, 0), (1, 1))
        (1, 1)
        >>> W.from_integer(3)
        (1, 1)

    """

    def __init__(self, field, n):
        if not isinstance(field, FiniteField):
            field = FiniteField(field)
        assert n >= 1, "Invalid length {}. Must be >= 1.".format(n)
        self.field = field
        self.p = field.p
        self.n = n
        self._sums, self._products = _compile(field.p, n)
        self.zero = (0,)*n
        self.one = (1,) + (0,)*(n - 1)

    @property
    def context(self):
        "The JSON context of the ring."
        ctx = self.field.to_dict()
        ctx['n'] = self.n
        return ctx

    def _apply(self, table, a, b):
        values = np.array(tuple(a) + tuple(b), dtype=np.int64)
        field = self.field
        return tuple(int(_witt_numba.evaluate(coefs, exps, values,
                                              field.add_table,
                                              field.mul_table))
                     for coefs, exps in table)

    def _check(self, a):
        assert len(a) == self.n, \
            "Witt vector {} does not have length {}".format(a, self.n)

    def add(self, a, b):
        self._check(a)
        self._check(b)
        return self._apply(self._sums, a, b)

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        return self._apply(self._products, a, b)

    def neg(self, a):
        self._check(a)
        if self.p != 2:
            return tuple(self.field.neg(c) for c in a)
        return self.mul(self.from_integer(-1), a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def batch(self, operation, a, b):
        """
        Apply ``'add'`` or ``'mul'`` to every row of two (samples, n) arrays.
        """
        table = {'add': self._sums, 'mul': self._products}[operation]
        values = np.hstack([np.asarray(a, dtype=np.int64),
                            np.asarray(b, dtype=np.int64)])
        out = np.empty((values.shape[0], self.n), dtype=np.int64)
        column = np.empty(values.shape[0], dtype=np.int64)
        for k, (coefs, exps) in enumerate(table):
            _witt_numba.evaluate_batch(coefs, exps, values,
                                       self.field.add_table,
                                       self.field.mul_table, column)
            out[:, k] = column
        return out

    def from_integer(self, m):
        "The image of the integer m (double and add)."
        m = int(m) % self.p**self.n
        result = self.zero
        base = self.one
        while m:
            if m & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            m >>= 1
        return result

    def teichmuller(self, c):
        "The Teichmuller representative (c, 0, ..., 0)."
        return (int(c),) + (0,)*(self.n - 1)

    def frobenius(self, a, times=1):
        "Componentwise c -> c^p, applied *times* times (any sign)."
        return tuple(self.field.frobenius(c, times) for c in a)

    def verschiebung(self, a):
        "Shift coordinates to the right, dropping the last one."
        return (0,) + tuple(a[:-1])

    def valuation(self, a):
        "Index of the first non-zero coordinate (n for zero)."
        for i, c in enumerate(a):
            if c != 0:
                return i
        return self.n

    def elements(self):
        "Iterate over all q^n elements."
        return itertools.product(range(self.field.q), repeat=self.n)

    def random(self, rng):
        "A random element drawn with the numpy RandomState *rng*."
        return tuple(int(c) for c in rng.randint(0, self.field.q,
                                                 size=self.n))

    def __call__(self, coords):
        return WittElem(self, coords)

    def __eq__(self, other):
        return (isinstance(other, WittRing) and self.field == other.field and
                self.n == other.n)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field, self.n))

    def __repr__(self):
        return 'WittRing({!r}, {})'.format(self.field, self.n)


class WittElem(object):
    """
    An element of :class:`~gaugeforge.witt.vectors.WittRing`.

    >>> W = WittRing(3, 2)
    >>> x = W((1, 2))
    >>> (x - x).is_zero()
    True
    >>> x.frobenius() == x
    True

    """

    __slots__ = ['ring', 'components']

    def __init__(self, ring, components):
        components = tuple(int(c) for c in components)
        assert len(components) == ring.n, \
            "Expected {} components, got {}".format(ring.n, len(components))
        self.ring = ring
        self.components = components

    def _other(self, other):
        if isinstance(other, WittElem):
            if other.ring != self.ring:
                raise ValueError("Witt vectors over different contexts")
            return other.components
        return self.ring.from_integer(other)

    def __add__(self, other):
        return WittElem(self.ring, self.ring.add(self.components,
                                                 self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return WittElem(self.ring, self.ring.sub(self.components,
                                                 self._other(other)))

    def __rsub__(self, other):
        return WittElem(self.ring, self.ring.sub(self._other(other),
                                                 self.components))

    def __neg__(self):
        return WittElem(self.ring, self.ring.neg(self.components))

    def __mul__(self, other):
        return WittElem(self.ring, self.ring.mul(self.components,
                                                 self._other(other)))

    __rmul__ = __mul__

    def frobenius(self, times=1):
        return WittElem(self.ring, self.ring.frobenius(self.components,
                                                       times))

    def verschiebung(self):
        return WittElem(self.ring, self.ring.verschiebung(self.components))

    def valuation(self):
        return self.ring.valuation(self.components)

    def is_zero(self):
        return not any(self.components)

    def to_json(self):
        "Array of coordinate arrays, one per Witt component."
        return [self.ring.field.coordinates(c) for c in self.components]

    def __eq__(self, other):
        if isinstance(other, WittElem):
            return (self.ring == other.ring and
                    self.components == other.components)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ring, self.components))

    def __repr__(self):
        return 'WittElem({})'.format(self.components)


def _check_context(a, b):
    if a.ring != b.ring:
        raise ValueError("Witt vectors over different contexts: {} and {}"
                         .format(a.ring, b.ring))


def witt_add(a, b):
    "Sum of two Witt vectors over the same context."
    _check_context(a, b)
    return a + b


def witt_mul(a, b):
    "Product of two Witt vectors over the same context."
    _check_context(a, b)
    return a*b


def witt_neg(a):
    "Additive inverse."
    return -a


def witt_frobenius(a):
    "The Frobenius sigma, componentwise p-th power."
    return a.frobenius()


def witt_verschiebung(a):
    "The Verschiebung V, shifting coordinates to the right."
    return a.verschiebung()


def teichmuller(c, ring):
    "The Teichmuller lift [c] of a field element (code or FqElem)."
    code = getattr(c, 'code', c)
    return WittElem(ring, ring.teichmuller(code))


def from_integer(m, ring):
    "The image of the integer m in the ring."
    return WittElem(ring, ring.from_integer(m))


def ghost_equivalence_report(field, n, samples=None, seed=None):
    """
    Compare Witt arithmetic with the arithmetic of the unramified model.

    Every pair of W_n(F_q) is checked when q^(2n) is at most *samples*
    (default :data:`~gaugeforge.constants.GHOST_SAMPLES`), otherwise
    *samples* random pairs are drawn. Sums, products and negatives must
    match their images in :class:`~gaugeforge.witt.chainring.ChainRing`.
    Witnesses carry the ``'operation'`` and the Witt coordinates.

    Examples:

        >>> ghost_equivalence_report(2, 2).details['exhaustive']
        True
        >>> ghost_equivalence_report(3, 4, samples=50, seed=0).ok
        True

    """
    if samples is None:
        samples = constants.GHOST_SAMPLES
    witt = WittRing(field, n)
    model = ChainRing(witt.field, n)
    exhaustive = witt.field.q**(2*n) <= samples
    if exhaustive:
        pairs = list(itertools.product(witt.elements(), repeat=2))
        firsts = np.array([a for a, _ in pairs], dtype=np.int64)
        seconds = np.array([b for _, b in pairs], dtype=np.int64)
    else:
        random = random_state(seed)
        firsts = random.randint(0, witt.field.q, size=(samples, n))
        seconds = random.randint(0, witt.field.q, size=(samples, n))
    report = Report('ghost equivalence', {'context': witt.context,
                                          'exhaustive': exhaustive,
                                          'pairs': int(firsts.shape[0]),
                                          'seed': seed})
    sums = witt.batch('add', firsts, seconds)
    products = witt.batch('mul', firsts, seconds)
    for k in range(firsts.shape[0]):
        a, b = tuple(int(c) for c in firsts[k]), tuple(int(c)
                                                      for c in seconds[k])
        x, y = model.from_witt(a), model.from_witt(b)
        report.check(tuple(sums[k]) == model.to_witt(model.add(x, y)),
                     {'operation': 'add', 'a': list(a), 'b': list(b)})
        report.check(tuple(products[k]) == model.to_witt(model.mul(x, y)),
                     {'operation': 'mul', 'a': list(a), 'b': list(b)})
    negated = witt.elements() if exhaustive else (tuple(int(c) for c in row)
                                                  for row in firsts)
    for a in negated:
        image = model.to_witt(model.neg(model.from_witt(a)))
        report.check(witt.neg(a) == image,
                     {'operation': 'neg', 'a': list(a)})
    log.debug("Ghost equivalence over %r: %s", witt, report.status)
    return report
