"""
The chain ring W_n(F_q) in the unramified model (Z/p^n)[t]/(F).

F is the monic integer lift of the defining polynomial of F_q, so elements
are integer vectors of length d (coordinates on 1, t, ..., t^(d-1)) reduced
modulo p^n. This is the representation used by all linear algebra. The
Frobenius is an integer d x d matrix computed through Teichmuller digits, and
:meth:`~gaugeforge.witt.chainring.ChainRing.to_witt` and
:meth:`~gaugeforge.witt.chainring.ChainRing.from_witt` translate to and from
Witt coordinates.

Matrices over the ring are int64 arrays of shape (rows, cols, d).

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import itertools

import numpy as np

from .fields import FiniteField


class ChainRing(object):
    """
    W_n(F_q) as (Z/p^n)[t]/(F).

    Parameters:

    * field : FiniteField or int
        The residue field, or a prime p for F_p.
    * n : int
        The truncation length.

    Examples:

        >>> R = ChainRing(2, 3)
        >>> R.to_witt(R.from_integer(3))
        (1, 1, 0)
        >>> int(R.from_witt((0, 1, 0))[0])
        2
        >>> R.valuation(R.from_integer(4))
        2

    """

    def __init__(self, field, n):
        if not isinstance(field, FiniteField):
            field = FiniteField(field)
        assert n >= 1, "Invalid length {}. Must be >= 1.".format(n)
        self.field = field
        self.p = field.p
        self.d = field.d
        self.n = n
        self.modulus = self.p**n
        self._teichmuller = {}
        self._build_multiplication()
        self._build_sigma()

    def _build_multiplication(self):
        d, mod = self.d, self.modulus
        lift = [int(c) for c in self.field.minpoly]
        # powers t^k reduced modulo the monic lift, k < 2d - 1
        powers = []
        for k in range(max(2*d - 1, 1)):
            vec = np.zeros(d, dtype=np.int64)
            if k < d:
                vec[k] = 1
            else:
                prev = powers[k - 1]
                top = prev[d - 1]
                vec[1:] = prev[:-1]
                vec = (vec - top*np.array(lift[:d], dtype=np.int64)) % mod
            powers.append(vec % mod)
        table = np.zeros((d, d, d), dtype=np.int64)
        for a in range(d):
            for b in range(d):
                table[a, b] = powers[a + b]
        self.table = table

    def _build_sigma(self):
        d = self.d
        sigma = np.zeros((d, d), dtype=np.int64)
        for j in range(d):
            basis = np.zeros(d, dtype=np.int64)
            basis[j] = 1
            digits = self.to_witt(basis)
            sigma[:, j] = self.from_witt(
                [self.field.frobenius(c) for c in digits])
        self.sigma_matrix = sigma
        self._sigma_powers = [np.eye(d, dtype=np.int64)]
        for _ in range(1, d):
            self._sigma_powers.append(
                np.dot(sigma, self._sigma_powers[-1]) % self.modulus)

    # Elements ----------------------------------------------------------------

    def zero(self):
        return np.zeros(self.d, dtype=np.int64)

    def one(self):
        return self.from_integer(1)

    def from_integer(self, m):
        x = np.zeros(self.d, dtype=np.int64)
        x[0] = int(m) % self.modulus
        return x

    def p_power(self, k):
        "The element p^k (zero if k >= n)."
        return self.from_integer(self.p**k if k < self.n else 0)

    def lift(self, code):
        "The representative with coordinates in [0, p) of a field element."
        return np.array(self.field.coordinates(code), dtype=np.int64)

    def residue(self, x):
        "The field code of x mod p."
        return self.field.element([int(c) % self.p for c in x])

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def neg(self, x):
        return (-x) % self.modulus

    def mul(self, x, y):
        return np.einsum('a,b,abc->c', x, y, self.table) % self.modulus

    def power(self, x, e):
        result = self.one()
        base = np.array(x, dtype=np.int64) % self.modulus
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def valuation(self, x):
        "The p-adic valuation, n for zero."
        x = np.asarray(x) % self.modulus
        if not x.any():
            return self.n
        best = self.n
        for c in x:
            c = int(c)
            if c:
                v = 0
                while c % self.p == 0:
                    c //= self.p
                    v += 1
                best = min(best, v)
        return best

    def is_zero(self, x):
        return not (np.asarray(x) % self.modulus).any()

    def is_unit(self, x):
        return self.valuation(x) == 0

    def unit_inverse(self, x):
        "Inverse of a unit by Newton iteration from the residue inverse."
        if not self.is_unit(x):
            raise ZeroDivisionError("{} is not a unit".format(x))
        y = self.lift(self.field.inverse(self.residue(x)))
        two = self.from_integer(2)
        precision = 1
        while precision < self.n:
            y = self.mul(y, self.sub(two, self.mul(x, y)))
            precision *= 2
        return y

    def divide_p(self, x, k):
        "x / p^k for x of valuation >= k (defined modulo p^(n-k))."
        x = np.asarray(x) % self.modulus
        assert not (x % self.p**k).any(), \
            "{} is not divisible by p^{}".format(x, k)
        return x // self.p**k

    def reduce(self, x, e):
        "Reduction modulo p^e."
        return np.asarray(x) % self.p**e

    def sigma(self, x, times=1):
        "The Frobenius applied *times* times (any sign) along the last axis."
        mat = self._sigma_powers[times % self.d]
        return np.dot(np.asarray(x, dtype=np.int64), mat.T) % self.modulus

    def teichmuller(self, code):
        "The Teichmuller lift of a field element."
        if code not in self._teichmuller:
            self._teichmuller[code] = self.power(
                self.lift(code), self.field.q**(self.n - 1))
        return self._teichmuller[code]

    def to_witt(self, x):
        """
        Witt coordinates of x.

        Writes x = sum p^i [b_i] and returns a_i = b_i^(p^i).
        """
        current = np.asarray(x, dtype=np.int64) % self.modulus
        coords = []
        for i in range(self.n):
            digit = self.residue(current)
            coords.append(self.field.frobenius(digit, i))
            current = (current - self.teichmuller(digit)) % self.modulus
            current = current // self.p
        return tuple(coords)

    def from_witt(self, coords):
        "The element with Witt coordinates *coords*."
        assert len(coords) == self.n, \
            "Expected {} Witt coordinates".format(self.n)
        total = self.zero()
        for i, a in enumerate(coords):
            digit = self.field.frobenius(int(a), -i)
            total = total + self.p**i*self.teichmuller(digit)
        return total % self.modulus

    def elements(self, e=None):
        "All elements of W_e (default e = n) as coordinate arrays."
        if e is None:
            e = self.n
        for coords in itertools.product(range(self.p**e), repeat=self.d):
            yield np.array(coords, dtype=np.int64)

    def random(self, rng, e=None):
        if e is None:
            e = self.n
        return rng.randint(0, self.p**e, size=self.d).astype(np.int64)

    # Matrices ----------------------------------------------------------------

    def zeros(self, rows, cols):
        return np.zeros((rows, cols, self.d), dtype=np.int64)

    def identity(self, size):
        mat = self.zeros(size, size)
        for i in range(size):
            mat[i, i, 0] = 1
        return mat

    def scalar_matrix(self, size, x):
        mat = self.zeros(size, size)
        for i in range(size):
            mat[i, i] = x
        return mat

    def diagonal(self, entries):
        mat = self.zeros(len(entries), len(entries))
        for i, x in enumerate(entries):
            mat[i, i] = x
        return mat

    def matmul(self, a, b):
        "Product of two matrices (rows, k, d) x (k, cols, d)."
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return np.einsum('ija,jkb,abc->ikc', a, b, self.table) % self.modulus

    def matvec(self, a, x):
        a = np.asarray(a, dtype=np.int64)
        x = np.asarray(x, dtype=np.int64)
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], self.d), dtype=np.int64)
        return np.einsum('ija,jb,abc->ic', a, x, self.table) % self.modulus

    def scale(self, x, a):
        "Multiply every entry of the array *a* (last axis d) by x."
        a = np.asarray(a, dtype=np.int64)
        return np.einsum('a,...b,abc->...c', x, a, self.table) % self.modulus

    def from_integers(self, rows):
        "A matrix from nested lists of integers (entries in Z/p^n)."
        arr = np.array(rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        mat = np.zeros(arr.shape + (self.d,), dtype=np.int64)
        mat[..., 0] = arr % self.modulus
        return mat

    def __eq__(self, other):
        return (isinstance(other, ChainRing) and self.field == other.field and
                self.n == other.n)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field, self.n))

    def __repr__(self):
        return 'ChainRing({!r}, {})'.format(self.field, self.n)

    @property
    def context(self):
        ctx = self.field.to_dict()
        ctx['n'] = self.n
        return ctx
