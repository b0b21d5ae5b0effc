"""
Finite fields F_q, q = p^d, with table arithmetic.

Elements are encoded as integer codes ``sum(c[i]*p**i)`` where ``c`` are the
coordinates on the basis 1, t, ..., t^(d-1) of F_p[t]/(minpoly). The tables
are plain :mod:`numpy` arrays so the numba kernels can use them directly.

* :class:`~gaugeforge.witt.fields.FiniteField`: the field and its tables
* :class:`~gaugeforge.witt.fields.FqElem`: a field element
* :func:`~gaugeforge.witt.fields.is_prime`
* :func:`~gaugeforge.witt.fields.default_minpoly`: the lexicographically
  smallest monic irreducible polynomial of a degree

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import itertools
import logging

import numpy as np

from .. import constants

log = logging.getLogger(__name__)


def is_prime(p):
    """
    Trial division primality test.

    >>> [n for n in range(12) if is_prime(n)]
    [2, 3, 5, 7, 11]

    """
    if p < 2:
        return False
    i = 2
    while i*i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _polymod(coefs, modulus, p):
    "Remainder of a polynomial (low to high) by a monic polynomial mod p."
    coefs = [c % p for c in coefs]
    deg = len(modulus) - 1
    for top in range(len(coefs) - 1, deg - 1, -1):
        c = coefs[top]
        if c:
            for i in range(deg + 1):
                coefs[top - deg + i] = (coefs[top - deg + i] -
                                        c*modulus[i]) % p
    coefs = coefs[:deg] + [0]*max(0, deg - len(coefs))
    return coefs


def _is_irreducible(poly, p):
    deg = len(poly) - 1
    for fdeg in range(1, deg//2 + 1):
        for low in itertools.product(range(p), repeat=fdeg):
            factor = list(low) + [1]
            if not any(_polymod(poly, factor, p)):
                return False
    return True


def default_minpoly(p, d):
    """
    The smallest monic irreducible polynomial of degree *d* over F_p.

    Coefficients are listed from the constant term up. The order is
    lexicographic on the code ``sum(c[i]*p**i)`` of the lower coefficients.

    >>> default_minpoly(2, 2)
    [1, 1, 1]
    >>> default_minpoly(3, 1)
    [0, 1]

    """
    for code in range(p**d):
        low = [(code//p**i) % p for i in range(d)]
        poly = low + [1]
        if d == 1 or (low[0] != 0 and _is_irreducible(poly, p)):
            return poly
    raise ValueError("No irreducible polynomial of degree {}".format(d))


class FiniteField(object):
    """
    The finite field F_q with q = p^d.

    Parameters:

    * p : int
        The characteristic (a prime).
    * d : int
        The degree over F_p.
    * minpoly : None or list of ints
        Monic irreducible defining polynomial, constant term first. If None,
        uses :func:`~gaugeforge.witt.fields.default_minpoly`.

    Examples:

        >>> k = FiniteField(2, 2)
        >>> k.q
        4
        >>> g = k.generator
        >>> k.mul(g, g) == k.add(g, k.one)
        True
        >>> k.frobenius(k.frobenius(g)) == g
        True

    """

    def __init__(self, p, d=1, minpoly=None):
        assert is_prime(p), "Characteristic {} is not prime".format(p)
        assert d >= 1, "Invalid degree {}. Must be >= 1.".format(d)
        q = p**d
        if q > constants.MAX_FIELD_SIZE:
            raise ValueError(
                "Field of size {} is larger than the maximum {}".format(
                    q, constants.MAX_FIELD_SIZE))
        if minpoly is None:
            minpoly = default_minpoly(p, d)
        minpoly = [int(c) % p for c in minpoly]
        if len(minpoly) != d + 1 or minpoly[-1] != 1:
            raise ValueError(
                "Defining polynomial {} is not monic of degree {}".format(
                    minpoly, d))
        if d > 1 and (minpoly[0] == 0 or not _is_irreducible(minpoly, p)):
            raise ValueError(
                "Defining polynomial {} is reducible mod {}".format(
                    minpoly, p))
        self.p = p
        self.d = d
        self.q = q
        self.minpoly = tuple(minpoly)
        self.zero = 0
        self.one = 1
        self.generator = p if d > 1 else 1
        self._build_tables()

    def _build_tables(self):
        p, d, q = self.p, self.d, self.q
        digits = np.array([[(c//p**i) % p for i in range(d)]
                           for c in range(q)], dtype=np.int64)
        weights = p**np.arange(d, dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % p
        self.add_table = np.dot(summed, weights).astype(np.int64)
        negated = (-digits) % p
        self.neg_table = np.dot(negated, weights).astype(np.int64)
        # Multiplication through discrete logarithms of a primitive element
        primitive, exp = None, None
        for candidate in range(1, q):
            powers = [1]
            current = 1
            for _ in range(q - 2):
                current = self._slow_mul(current, candidate)
                if current == 1:
                    break
                powers.append(current)
            if len(powers) == q - 1:
                primitive, exp = candidate, powers
                break
        assert primitive is not None, "No primitive element found"
        self.primitive = primitive
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.zeros(q, dtype=np.int64)
        self.log_table[self.exp_table] = np.arange(q - 1)
        logs = self.log_table
        mul = self.exp_table[(logs[:, None] + logs[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul_table = mul.astype(np.int64)
        log.debug("Built tables of F_%d with primitive element %d",
                  q, primitive)

    def _slow_mul(self, a, b):
        p, d = self.p, self.d
        ca = self.coordinates(a)
        cb = self.coordinates(b)
        prod = [0]*(2*d - 1)
        for i in range(d):
            for j in range(d):
                prod[i + j] += ca[i]*cb[j]
        return self.element(_polymod(prod, list(self.minpoly), p))

    def coordinates(self, code):
        "The coordinates of an element on the basis 1, t, ..., t^(d-1)."
        return [(code//self.p**i) % self.p for i in range(self.d)]

    def element(self, coords):
        "The code of the element with the given coordinates."
        coords = list(coords) + [0]*(self.d - len(coords))
        return sum((int(c) % self.p)*self.p**i for i, c in enumerate(coords))

    def from_integer(self, m):
        "The image of an integer in the prime field."
        return int(m) % self.p

    def add(self, a, b):
        return int(self.add_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def inverse(self, a):
        "Multiplicative inverse. Raises ``ZeroDivisionError`` for zero."
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse in F_{}".format(
                self.q))
        return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    def power(self, a, e):
        "The e-th power (e may be negative for non-zero a)."
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("Zero has no inverse")
            return 0
        return int(self.exp_table[(self.log_table[a]*e) % (self.q - 1)])

    def frobenius(self, a, times=1):
        "The absolute Frobenius a -> a^p applied *times* times (any sign)."
        return self.power(a, self.p**(times % self.d))

    def frobenius_inverse(self, a):
        "The inverse of the absolute Frobenius, a -> a^(p^(d-1))."
        return self.frobenius(a, -1)

    def elements(self):
        "All element codes."
        return range(self.q)

    def __call__(self, value):
        "Wrap an integer code (or coordinate list) as a :class:`FqElem`."
        if isinstance(value, (list, tuple)):
            value = self.element(value)
        return FqElem(self, value)

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p and
                self.minpoly == other.minpoly)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.minpoly))

    def __repr__(self):
        return 'FiniteField({}, {}, minpoly={})'.format(
            self.p, self.d, list(self.minpoly))

    def to_dict(self):
        return {'p': self.p, 'd': self.d, 'minpoly': list(self.minpoly)}


class FqElem(object):
    """
    An element of a :class:`~gaugeforge.witt.fields.FiniteField`.

    Supports ``+ - * /`` and ``**`` with other elements of the same field or
    with integers (mapped into the prime field).

    >>> k = FiniteField(3)
    >>> x = k(2)
    >>> x*x == k(1)
    True
    >>> (x + 1).code
    0

    """

    __slots__ = ['field', 'code']

    def __init__(self, field, code):
        self.field = field
        self.code = int(code)

    def _other(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("Elements of different fields")
            return other.code
        return self.field.from_integer(other)

    def __add__(self, other):
        return FqElem(self.field, self.field.add(self.code,
                                                 self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FqElem(self.field, self.field.sub(self.code,
                                                 self._other(other)))

    def __rsub__(self, other):
        return FqElem(self.field, self.field.sub(self._other(other),
                                                 self.code))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul(self.code,
                                                 self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        inv = self.field.inverse(self._other(other))
        return FqElem(self.field, self.field.mul(self.code, inv))

    __div__ = __truediv__

    def __pow__(self, e):
        return FqElem(self.field, self.field.power(self.code, e))

    def frobenius(self, times=1):
        return FqElem(self.field, self.field.frobenius(self.code, times))

    def is_zero(self):
        return self.code == 0

    @property
    def coordinates(self):
        return self.field.coordinates(self.code)

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.from_integer(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field.p, self.field.minpoly, self.code))

    def __repr__(self):
        return 'FqElem({})'.format(self.coordinates)
