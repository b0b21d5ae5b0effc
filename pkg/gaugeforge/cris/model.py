"""
The divided power model of the crystalline sections over a truncated
polynomial ring.

Let A = k[x_1, ..., x_d]/(x_1^p, ..., x_d^p) with k a finite field. The ring
of crystalline sections over A is the divided power polynomial algebra
A<theta_1, ..., theta_d>, with A acting through the section ``f`` that sends
x_i to u_i and theta_i = gamma_p(u_i). As a k-vector space it has the basis

    u^r gamma_q(theta) = prod_i u_i^(r_i) gamma_(q_i)(theta_i)

with 0 <= r_i < p. The model keeps the monomials with q_i < R (the
truncation order) and raises :class:`~gaugeforge.utils.TruncationOverflow`
whenever a non-zero term would need q_i >= R.

Elements are 1d-arrays of field codes (see
:class:`~gaugeforge.witt.fields.FiniteField`) indexed by the flattened
exponent vector (r_1, ..., r_d, q_1, ..., q_d). Elements of A are arrays of
shape ``(p,)*d`` holding the coefficient of x^r at position r.

**The model**

* :class:`~gaugeforge.cris.model.DPAlgebra`
* :func:`~gaugeforge.cris.model.build_model`
* :func:`~gaugeforge.cris.model.divided_power_unit`: the unit c_m in
  gamma_m(u) = c_m u^r gamma_q(theta)

**Divided power operations**

* :func:`~gaugeforge.cris.model.dp_mul`
* :func:`~gaugeforge.cris.model.dp_gamma`

**Maps**

* :func:`~gaugeforge.cris.model.a_mul`: multiplication in A
* :func:`~gaugeforge.cris.model.lift`: the ring map f from A to the model
* :func:`~gaugeforge.cris.model.project`: the projection onto A, with kernel
  the divided power ideal
* :func:`~gaugeforge.cris.model.induced_endomorphism`: the endomorphism
  induced by x_i -> lambda_i x_i
* :func:`~gaugeforge.cris.model.functoriality_check`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object
import logging

import numpy as np

from .. import constants
from ..utils import (Report, PreconditionError, TruncationOverflow,
                     binomial, factorial, valuation, inverse_mod)
from ..witt.fields import FiniteField

log = logging.getLogger(__name__)


def _reduce(num, den, p):
    "num/den modulo p for a fraction without p in the denominator."
    if num == 0:
        return 0
    vnum, vden = valuation(num, p), valuation(den, p)
    if vnum > vden:
        return 0
    assert vnum == vden, \
        "{}/{} is not p-integral for p = {}".format(num, den, p)
    num, den = num//p**vnum, den//p**vden
    return (num*inverse_mod(den, p)) % p


def divided_power_unit(p, m):
    """
    The constant c_m = q! (p!)^q / m! with m = qp + r, reduced modulo p.

    It is a p-adic unit and gamma_m(u) = c_m u^r gamma_q(theta).

    Examples:

        >>> divided_power_unit(2, 3)
        1
        >>> divided_power_unit(5, 7)
        3

    """
    q = m//p
    return _reduce(factorial(q)*factorial(p)**q, factorial(m), p)


class DPAlgebra(object):
    """
    Truncated divided power polynomial algebra over A = k[x]/(x^p).

    Parameters:

    * field : :class:`~gaugeforge.witt.fields.FiniteField` or int
        The coefficient field k (a prime means F_p).
    * d : int
        The number of variables.
    * truncation : int
        The order R. Monomials need q_i < R.

    Examples:

        >>> model = DPAlgebra(2, 1, 3)
        >>> model.size
        6
        >>> model.describe(model.mul(model.u(0), model.theta(0)))
        'u1*g1(th1)'
        >>> model.describe(model.mul(model.theta(0), model.theta(0)))
        '0'

    """

    def __init__(self, field, d, truncation=constants.DEFAULT_TRUNCATION):
        if not isinstance(field, FiniteField):
            field = FiniteField(field)
        assert d >= 1, "Invalid number of variables {}".format(d)
        assert truncation >= 1, \
            "Invalid truncation order {}. Must be >= 1.".format(truncation)
        self.field = field
        self.p = field.p
        self.d = d
        self.truncation = truncation
        self.shape = (self.p,)*d + (truncation,)*d
        self.size = int(np.prod(self.shape))
        self.exponents = np.array(
            np.unravel_index(np.arange(self.size), self.shape),
            dtype=np.int64).T.reshape(self.size, 2*d)
        self.u_degrees = self.exponents[:, :d].sum(axis=1)
        self.theta_degrees = self.exponents[:, d:].sum(axis=1)
        self.weights = self.p*self.theta_degrees + self.u_degrees
        self._a_indices = np.array(
            [self.index(r, (0,)*d) for r in np.ndindex(*self.a_shape)],
            dtype=np.int64)
        self._products = {}

    @property
    def a_shape(self):
        "Shape of the coefficient arrays of elements of A."
        return (self.p,)*self.d

    @property
    def max_weight(self):
        "Largest weight of a monomial in the model."
        return self.d*(self.p*self.truncation - 1)

    def index(self, r, q):
        "Position of the monomial u^r gamma_q(theta)."
        return int(np.ravel_multi_index(tuple(r) + tuple(q), self.shape))

    def exponent(self, index):
        "The exponent vectors (r, q) of a basis monomial."
        row = self.exponents[index]
        return row[:self.d].copy(), row[self.d:].copy()

    def zero(self):
        return np.zeros(self.size, dtype=np.int64)

    def one(self):
        return self.constant(1)

    def constant(self, code):
        x = self.zero()
        x[0] = code
        return x

    def monomial(self, r, q, code=1):
        x = self.zero()
        x[self.index(r, q)] = code
        return x

    def u(self, i):
        r = [0]*self.d
        r[i] = 1
        return self.monomial(r, [0]*self.d)

    def theta(self, i, power=1):
        "The divided power gamma_power(theta_i)."
        q = [0]*self.d
        q[i] = power
        if power >= self.truncation:
            raise TruncationOverflow(
                "gamma_{}(theta) needs truncation > {}".format(
                    power, self.truncation))
        return self.monomial([0]*self.d, q)

    def terms(self, x):
        "Pairs (index, code) of the non-zero coefficients of x."
        return [(int(i), int(x[i])) for i in np.flatnonzero(x)]

    def add(self, x, y):
        return self.field.add_table[x, y]

    def neg(self, x):
        return self.field.neg_table[x]

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, code, x):
        return self.field.mul_table[code, x]

    def is_in_ideal(self, x):
        "True if x has no constant term."
        return x[0] == 0

    def _monomial_or_zero(self, r, q, coefficient):
        if coefficient % self.p == 0 or np.any(r >= self.p):
            return None
        if np.any(q >= self.truncation):
            raise TruncationOverflow(
                "The term u^{} gamma_{}(theta) leaves truncation order "
                "{}".format(r.tolist(), q.tolist(), self.truncation))
        return self.index(r, q), coefficient % self.p

    def _product(self, i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in self._products:
            ri, qi = self.exponent(i)
            rj, qj = self.exponent(j)
            coefficient = 1
            for a, b in zip(qi, qj):
                coefficient *= binomial(int(a + b), int(a))
            self._products[key] = self._monomial_or_zero(ri + rj, qi + qj,
                                                         coefficient)
        return self._products[key]

    def mul(self, x, y):
        "Product of two elements. See :func:`~gaugeforge.cris.model.dp_mul`."
        field = self.field
        result = self.zero()
        for i, a in self.terms(x):
            for j, b in self.terms(y):
                target = self._product(i, j)
                if target is None:
                    continue
                index, coefficient = target
                value = field.mul(field.mul(a, b), coefficient)
                result[index] = field.add(int(result[index]), value)
        return result

    def power(self, x, e):
        result = self.one()
        for _ in range(e):
            result = self.mul(result, x)
        return result

    def _gamma_monomial(self, index, m):
        "gamma_m of a basis monomial in closed form."
        p = self.p
        r, q = self.exponent(index)
        num, den = 1, 1
        for b in q:
            num *= factorial(int(m*b))
            den *= factorial(int(b))**m
        new_q = m*q
        if r.any():
            # u^r gamma_q = (u^r gamma_q / u_a) u_a and gamma_m(yx) = y^m
            # gamma_m(x) with gamma_m(u_a) = c_m u_a^s gamma_Q(theta_a)
            a = int(np.flatnonzero(r)[0])
            big, small = divmod(m, p)
            new_r = m*r
            new_r[a] += small - m
            num *= binomial(int(new_q[a] + big), big)
            new_q[a] += big
            num *= factorial(big)*factorial(p)**big
            den *= factorial(m)
        else:
            new_r = r
            den *= factorial(m)
        result = self.zero()
        target = self._monomial_or_zero(new_r, new_q, _reduce(num, den, p))
        if target is not None:
            result[target[0]] = target[1]
        return result

    def gamma(self, x, m):
        "Divided power. See :func:`~gaugeforge.cris.model.dp_gamma`."
        assert m >= 0, "Invalid divided power order {}".format(m)
        if not self.is_in_ideal(x):
            raise PreconditionError(
                "Divided powers are only defined on the ideal (u, theta)")
        if m == 0:
            return self.one()
        field = self.field
        total = None
        for index, code in self.terms(x):
            series = [self.one()]
            for j in range(1, m + 1):
                series.append(self.scale(field.power(code, j),
                                         self._gamma_monomial(index, j)))
            if total is None:
                total = series
                continue
            convolved = []
            for degree in range(m + 1):
                value = self.zero()
                for j in range(degree + 1):
                    value = self.add(value, self.mul(total[j],
                                                     series[degree - j]))
                convolved.append(value)
            total = convolved
        if total is None:
            return self.zero()
        return total[m]

    def describe(self, x):
        "A readable form of an element, non-zero terms in index order."
        parts = []
        for index, code in self.terms(x):
            r, q = self.exponent(index)
            factors = []
            for i in range(self.d):
                if r[i] == 1:
                    factors.append('u{}'.format(i + 1))
                elif r[i] > 1:
                    factors.append('u{}^{}'.format(i + 1, r[i]))
            for i in range(self.d):
                if q[i]:
                    factors.append('g{}(th{})'.format(q[i], i + 1))
            if code != 1 or not factors:
                factors.insert(0, str(code))
            parts.append('*'.join(factors))
        if not parts:
            return '0'
        return ' + '.join(parts)

    def to_dict(self):
        return {'field': self.field.to_dict(), 'd': self.d,
                'truncation': self.truncation, 'size': self.size}

    def __eq__(self, other):
        return (isinstance(other, DPAlgebra) and self.field == other.field
                and self.d == other.d and self.truncation == other.truncation)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'DPAlgebra(q={}, d={}, R={})'.format(self.field.q, self.d,
                                                    self.truncation)


def build_model(field, d, truncation=constants.DEFAULT_TRUNCATION):
    """
    Build the truncated model for A = k[x_1, ..., x_d]/(x_i^p).

    Parameters:

    * field : FiniteField or int
    * d : int
    * truncation : int

    Returns:

    * model : :class:`~gaugeforge.cris.model.DPAlgebra`

    """
    model = DPAlgebra(field, d, truncation)
    log.debug("Built %r with %d monomials", model, model.size)
    return model


def dp_mul(model, x, y):
    """
    Multiply two elements of the model.

    Uses u_i^p = 0 and gamma_a(theta) gamma_b(theta) = binom(a + b, a)
    gamma_(a+b)(theta). Raises :class:`~gaugeforge.utils.TruncationOverflow`
    if a non-zero product leaves the truncation.

    Examples:

        >>> model = build_model(3, 1, 4)
        >>> model.describe(dp_mul(model, model.theta(0), model.theta(0)))
        '2*g2(th1)'
        >>> model.describe(dp_mul(model, model.u(0), model.power(
        ...     model.u(0), 2)))
        '0'

    """
    return model.mul(x, y)


def dp_gamma(model, x, m):
    """
    The m-th divided power of an element of the ideal (u, theta).

    Monomials use the closed forms gamma_m(u_i) = c_m u_i^r gamma_q(theta_i)
    (m = qp + r), gamma_m(gamma_q(theta)) = (mq)!/(m! (q!)^m)
    gamma_(mq)(theta) and gamma_m(yx) = y^m gamma_m(x). Sums follow
    gamma_m(x + y) = sum gamma_i(x) gamma_j(y) over i + j = m.

    Raises :class:`~gaugeforge.utils.PreconditionError` if x has a constant
    term and :class:`~gaugeforge.utils.TruncationOverflow` if a non-zero
    term leaves the truncation.

    Examples:

        >>> model = build_model(2, 1)
        >>> model.describe(dp_gamma(model, model.u(0), 3))
        'u1*g1(th1)'
        >>> model = build_model(2, 2)
        >>> x = model.add(model.u(0), model.u(1))
        >>> model.describe(dp_gamma(model, x, 2))
        'g1(th2) + g1(th1) + u1*u2'

    """
    return model.gamma(x, m)


def lift(model, element):
    """
    The ring map f: A -> model, x^r -> u^r.

    Parameters:

    * model : DPAlgebra
    * element : array of shape ``model.a_shape``

    """
    element = np.asarray(element, dtype=np.int64)
    assert element.shape == model.a_shape, \
        "Element of A of shape {}, expected {}".format(element.shape,
                                                       model.a_shape)
    x = model.zero()
    x[model._a_indices] = element.ravel()
    return x


def project(model, x):
    """
    The projection of the model onto A.

    It sends the divided power ideal to zero and the constant c to c^p, so
    that project(lift(a)) = a^p.
    """
    result = np.zeros(model.a_shape, dtype=np.int64)
    result[(0,)*model.d] = model.field.frobenius(int(x[0]))
    return result


def random_a_element(model, random, ideal=False):
    "A random element of A, without constant term if *ideal*."
    element = random.randint(0, model.field.q, size=model.a_shape)
    if ideal:
        element[(0,)*model.d] = 0
    return element.astype(np.int64)


def induced_endomorphism(model, lambdas):
    """
    The endomorphism of the model induced by x_i -> lambda_i x_i on A.

    It is k-linear, sends u_i to f(lambda_i) u_i and gamma_q(theta_i) to
    f(lambda_i)^(pq) gamma_q(theta_i).

    Parameters:

    * model : DPAlgebra
    * lambdas : list of d elements of A

    Returns:

    * rho : function
        Maps an element of the model to its image.

    """
    assert len(lambdas) == model.d, \
        "Need {} scalars, got {}".format(model.d, len(lambdas))
    images = [model.mul(lift(model, lam), model.u(i))
              for i, lam in enumerate(lambdas)]
    scalars = [int(model.power(lift(model, lam), model.p)[0])
               for lam in lambdas]
    field = model.field

    def rho(x):
        result = model.zero()
        for index, code in model.terms(x):
            r, q = model.exponent(index)
            value = model.constant(code)
            for i in range(model.d):
                value = model.mul(value, model.power(images[i], int(r[i])))
                if q[i]:
                    scalar = field.power(scalars[i], int(q[i]))
                    value = model.mul(value, model.scale(
                        scalar, model.theta(i, int(q[i]))))
            result = model.add(result, value)
        return result

    return rho


def functoriality_check(model, lambdas):
    """
    Check that the induced endomorphism respects divided powers.

    Verifies gamma_p(rho(u_i)) = lambda_i^p theta_i and
    gamma_m(rho(u_i)) = rho(gamma_m(u_i)) for every m whose divided power
    fits in the model.
    """
    rho = induced_endomorphism(model, lambdas)
    report = Report('functoriality', {'lambdas': [np.asarray(lam).tolist()
                                                  for lam in lambdas]})
    for i, lam in enumerate(lambdas):
        moved = rho(model.u(i))
        expected = model.mul(model.power(lift(model, lam), model.p),
                             model.theta(i))
        report.check(np.array_equal(model.gamma(moved, model.p), expected),
                     {'index': i, 'identity': 'theta'})
        for m in range(1, model.p*model.truncation):
            lhs = model.gamma(moved, m)
            rhs = rho(model.gamma(model.u(i), m))
            report.check(np.array_equal(lhs, rhs),
                         {'index': i, 'order': m, 'identity': 'gamma'})
    return report


def a_mul(model, a, b):
    "Product of two elements of A = k[x]/(x^p)."
    field, p = model.field, model.p
    result = np.zeros(model.a_shape, dtype=np.int64)
    for r in zip(*np.nonzero(a)):
        for s in zip(*np.nonzero(b)):
            t = tuple(int(i + j) for i, j in zip(r, s))
            if max(t) >= p:
                continue
            value = field.mul(int(a[r]), int(b[s]))
            result[t] = field.add(int(result[t]), value)
    return result
