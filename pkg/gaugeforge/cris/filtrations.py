"""
The two filtrations of the divided power model, the Cartier maps between
their graded pieces and the generalized F-zip they form.

The descending filtration J^[r] is spanned by the monomials of weight at
least r, where u^s gamma_q(theta) has weight sum_i (p q_i + s_i). Its
graded piece J^[r]/J^[r+1] is killed by the ideal of A and has the images
of gamma_m1(u_1)...gamma_md(u_d), sum m_i = r, as a basis over k. The
ascending filtration F_r is the A-span of the gamma_q(theta) with
sum q_i <= r.

The graded piece carries two A-module structures. The naive one is the
action through the model and the nice one satisfies
``lambda_naive a = lambda^p ._nice a``, so naive coordinates c become nice
coordinates sigma(c). The Cartier map f_r sends the class of
gamma_m1(u_1)...gamma_md(u_d) to (-1)^r gamma_(pm_1)(u_1)...gamma_(pm_d)(u_d)
and is linear for the nice structure.

All spans are taken over k. Ranks over k are computed over F_p by
restriction of scalars and divided by the degree of k.

**Filtrations**

* :func:`~gaugeforge.cris.filtrations.j_filtration_basis`
* :func:`~gaugeforge.cris.filtrations.f_filtration_basis`
* :class:`~gaugeforge.cris.filtrations.GradedPiece`
* :func:`~gaugeforge.cris.filtrations.graded_piece`
* :func:`~gaugeforge.cris.filtrations.rank_table`
* :func:`~gaugeforge.cris.filtrations.gamma_functor_check`: Gamma^r of the
  cotangent space against J^[r]/J^[r+1]

**Cartier maps**

* :class:`~gaugeforge.cris.filtrations.CartierMap`
* :func:`~gaugeforge.cris.filtrations.cartier_fr`
* :func:`~gaugeforge.cris.filtrations.cartier_report`
* :func:`~gaugeforge.cris.filtrations.cartier_well_defined_check`

**Assembly**

* :func:`~gaugeforge.cris.filtrations.assemble_generalized_fzip`
* :func:`~gaugeforge.cris.filtrations.frobenius_section_check`
* :func:`~gaugeforge.cris.filtrations.truncation_stability_report`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object
import logging

import numpy as np

from .. import constants
from ..utils import (Report, PreconditionError, TruncationOverflow,
                     binomial, compositions, random_state)
from ..witt import linalg
from ..zips.fzip import GeneralizedFZip
from .model import (build_model, lift, project, a_mul, random_a_element)

log = logging.getLogger(__name__)


def j_filtration_basis(model, r):
    """
    Indices of the monomials spanning J^[r].

    Examples:

        >>> model = build_model(2, 1, 2)
        >>> [model.describe(model.monomial(*model.exponent(i)))
        ...  for i in j_filtration_basis(model, 2)]
        ['g1(th1)', 'u1*g1(th1)']

    """
    return np.flatnonzero(model.weights >= r)


def f_filtration_basis(model, r):
    "Indices of the monomials spanning F_r. Empty for r < 0."
    return np.flatnonzero(model.theta_degrees <= r)


def _fp_coordinates(field, codes):
    "Coordinates over F_p of an array of field codes, flattened."
    codes = np.asarray(codes, dtype=np.int64)
    digits = [(codes//field.p**i) % field.p for i in range(field.d)]
    return np.stack(digits, axis=-1).reshape(-1)


def _fp_matrix(model, vectors):
    "Columns: the F_p coordinates of t^c v for each vector v and c < [k:F_p]."
    field = model.field
    columns = [_fp_coordinates(field, field.mul_table[field.p**c, v])
               for v in vectors for c in range(field.d)]
    if not columns:
        return np.zeros((model.size*field.d, 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def _span(model, indices):
    "F_p generators of the span of a set of monomials."
    rows = model.size*model.field.d
    coordinates = [i*model.field.d + c for i in indices
                   for c in range(model.field.d)]
    matrix = np.zeros((rows, len(coordinates)), dtype=np.int64)
    matrix[coordinates, np.arange(len(coordinates))] = 1
    return matrix


def _rank_over_k(model, vectors):
    if not len(vectors):
        return 0
    return linalg.rank_mod_p(_fp_matrix(model, vectors),
                             model.p)//model.field.d


def _check_capacity(model, r):
    capacity = model.p*model.truncation
    if r >= capacity:
        raise TruncationOverflow(
            "Degree {} needs divided powers beyond the truncation order "
            "{}".format(r, model.truncation))


def _sign(model, r):
    "The code of (-1)^r."
    return model.field.power(model.field.neg(1), r)


def _gamma_product(model, orders, times=1):
    "gamma_(times m_1)(u_1) ... gamma_(times m_d)(u_d)."
    result = model.one()
    for i, m in enumerate(orders):
        result = model.mul(result, model.gamma(model.u(i), times*m))
    return result


class GradedPiece(object):
    """
    The graded piece J^[r]/J^[r+1] of the model with its basis.

    Parameters:

    * model : DPAlgebra
    * r : int

    Attributes:

    * orders : list of tuples
        The multi-indices m with sum m_i = r, in the order of the basis.
    * elements : list of 1d-arrays
        The elements gamma_m1(u_1)...gamma_md(u_d).

    """

    def __init__(self, model, r):
        assert r >= 0, "Invalid degree {}".format(r)
        _check_capacity(model, r)
        self.model = model
        self.r = r
        self.orders = list(compositions(r, model.d))
        self.elements = [_gamma_product(model, m) for m in self.orders]
        self._leading = []
        for m, element in zip(self.orders, self.elements):
            terms = [(i, c) for i, c in model.terms(element)
                     if model.weights[i] == r]
            assert len(terms) == 1, \
                "gamma_{} is not a single monomial of weight {}".format(m, r)
            self._leading.append(terms[0])

    @property
    def rank(self):
        "Rank over k of the naive structure, rank over A of the nice one."
        return len(self.orders)

    def naive_coordinates(self, x):
        """
        Coordinates over k of the class of x in J^[r]/J^[r+1].

        Raises :class:`~gaugeforge.utils.PreconditionError` if x is not in
        J^[r].
        """
        model = self.model
        if np.any(model.weights[np.flatnonzero(x)] < self.r):
            raise PreconditionError(
                "Element is not in J^[{}]".format(self.r))
        field = model.field
        return [field.mul(int(x[index]), field.inverse(code))
                for index, code in self._leading]

    def nice_coordinates(self, x):
        "Coordinates of the class of x for the nice A-structure."
        field = self.model.field
        return [field.frobenius(c) for c in self.naive_coordinates(x)]

    def to_dict(self):
        return {'r': self.r, 'rank': self.rank,
                'basis': [self.model.describe(e) for e in self.elements]}


def graded_piece(model, r):
    """
    The graded piece J^[r]/J^[r+1] and its basis.

    Raises :class:`~gaugeforge.utils.TruncationOverflow` if the basis does
    not fit in the model.

    Examples:

        >>> piece = graded_piece(build_model(2, 2), 2)
        >>> piece.rank
        3
        >>> piece.to_dict()['basis']
        ['g1(th1)', 'u1*u2', 'g1(th2)']

    """
    return GradedPiece(model, r)


def rank_table(model, degrees=None):
    """
    The ranks of J^[r]/J^[r+1] over k and of F_r/F_(r-1) over A.

    Both are read from the monomials of the model, for r < R by default.

    Returns:

    * table : list of dicts
        With keys ``'r'``, ``'j_rank'`` and ``'f_rank'``.

    Examples:

        >>> [row['j_rank'] for row in rank_table(build_model(2, 2, 4))]
        [1, 2, 3, 4]

    """
    if degrees is None:
        degrees = range(model.truncation)
    pure = model.u_degrees == 0
    table = []
    for r in degrees:
        table.append({
            'r': r,
            'j_rank': int(np.sum(model.weights == r)),
            'f_rank': int(np.sum(pure & (model.theta_degrees == r)))})
    return table


def gamma_functor_check(model, r):
    """
    Check that Gamma^r I -> J^[r]/J^[r+1] is an isomorphism.

    I = J^[1]/J^[2] is free with basis the classes of u_i and Gamma^r I has
    the basis gamma_m(e) = prod gamma_(m_i)(e_i). Their images are
    multiplied out in the model, reduced modulo J^[r+1] and their rank is
    compared with both the number of monomials of weight r and
    binom(r + d - 1, d - 1).
    """
    _check_capacity(model, r)
    orders = list(compositions(r, model.d))
    weight_r = np.flatnonzero(model.weights == r)
    reduced = []
    for m in orders:
        image = _gamma_product(model, m)
        assert np.all(model.weights[np.flatnonzero(image)] >= r), \
            "gamma_{} is not in J^[{}]".format(m, r)
        vector = model.zero()
        vector[weight_r] = image[weight_r]
        reduced.append(vector)
    rank = _rank_over_k(model, reduced)
    expected = binomial(r + model.d - 1, model.d - 1)
    report = Report('gamma functor', {'r': r, 'rank': rank,
                                      'expected': expected})
    report.check(rank == expected == len(weight_r),
                 {'index': r, 'failed': 'rank', 'rank': rank,
                  'monomials': len(weight_r)})
    if not report.ok:
        log.error("Gamma^%d I has rank %d in J^[%d]/J^[%d] of %r", r, rank,
                  r, r + 1, model)
    return report


class CartierMap(object):
    """
    The Cartier map f_r : J^[r]/J^[r+1] -> F_r/F_(r-1).

    Parameters:

    * model : DPAlgebra
    * r : int

    """

    def __init__(self, model, r):
        self.model = model
        self.r = r
        self.piece = GradedPiece(model, r)
        sign = _sign(model, r)
        self.images = [model.scale(sign, _gamma_product(model, m, model.p))
                       for m in self.piece.orders]

    def __call__(self, x):
        "Image of the class of x in J^[r], a representative in F_r."
        model = self.model
        result = model.zero()
        for coordinate, image in zip(self.piece.nice_coordinates(x),
                                     self.images):
            result = model.add(result, model.scale(coordinate, image))
        return result

    def linearized(self):
        "The A-multiples u^s f_r(basis) spanning the image over k."
        model = self.model
        return [model.mul(lift(model, unit), image)
                for image in self.images
                for unit in _a_units(model)]

    def is_bijective(self):
        """
        True if the images form an A-basis of F_r/F_(r-1).

        The A-multiples of the images must lie in F_r and be independent
        over k modulo F_(r-1) with as many as the k-dimension of the
        graded piece.
        """
        model = self.model
        inside = f_filtration_basis(model, self.r)
        top = np.flatnonzero(model.theta_degrees == self.r)
        vectors = []
        for v in self.linearized():
            if np.any(model.theta_degrees[np.flatnonzero(v)] > self.r):
                return False
            reduced = model.zero()
            reduced[top] = v[top]
            vectors.append(reduced)
        log.debug("Cartier map f_%d into %d of %d monomials", self.r,
                  len(top), len(inside))
        return _rank_over_k(model, vectors) == len(top) == len(vectors)


def _a_units(model):
    "The monomials x^s of A as coefficient arrays."
    for s in np.ndindex(*model.a_shape):
        unit = np.zeros(model.a_shape, dtype=np.int64)
        unit[s] = 1
        yield unit


def cartier_fr(model, r):
    """
    The Cartier map in degree r.

    Raises :class:`~gaugeforge.utils.TruncationOverflow` if
    gamma_(pr)(u) does not fit, that is for r >= R.

    Examples:

        >>> model = build_model(2, 1)
        >>> f1 = cartier_fr(model, 1)
        >>> model.describe(f1(model.u(0)))
        'g1(th1)'
        >>> model.describe(cartier_fr(model, 2)(model.theta(0)))
        'g2(th1)'

    """
    return CartierMap(model, r)


def cartier_report(model):
    "Check that f_r is bijective for every r < R."
    report = Report('cartier', {'truncation': model.truncation})
    for r in range(model.truncation):
        report.check(CartierMap(model, r).is_bijective(),
                     {'index': r, 'failed': 'bijective'})
    return report


def cartier_well_defined_check(model, m, samples=10, seed=None):
    """
    Check e(x, y) = gamma_pm(x + y) - sum gamma_pi(x) gamma_pj(y) in
    F_(m-1) for sampled x, y in the ideal generated by the u_i.

    The sum runs over i + j = m. The containment makes f_r additive.
    """
    assert 1 <= m < model.truncation, \
        "Order {} outside of 1, ..., R - 1".format(m)
    random = random_state(seed)
    p = model.p
    report = Report('cartier well defined', {'m': m, 'samples': samples})
    for sample in range(samples):
        x = lift(model, random_a_element(model, random, ideal=True))
        y = lift(model, random_a_element(model, random, ideal=True))
        error = model.gamma(model.add(x, y), p*m)
        for i in range(m + 1):
            error = model.sub(error, model.mul(model.gamma(x, p*i),
                                               model.gamma(y, p*(m - i))))
        degrees = model.theta_degrees[np.flatnonzero(error)]
        report.check(np.all(degrees <= m - 1),
                     {'index': sample, 'x': model.describe(x),
                      'y': model.describe(y)})
    return report


def assemble_generalized_fzip(model):
    """
    Package (J^[*], F_*, f_*) as a generalized F-zip over F_p.

    The space is the model over F_p. F^r = J^[r] for r up to the largest
    weight plus one, F_r for r = -1, ..., d(R - 1), and phi_r for r < R
    is linearized over the A-multiples of the Cartier images. The twist
    rank is p^d, the dimension of A over k.

    Examples:

        >>> Z = assemble_generalized_fzip(build_model(2, 1, 3))
        >>> Z.graded_ranks()
        [(1, 2), (1, 2), (1, 2)]

    """
    upper = [_span(model, j_filtration_basis(model, r))
             for r in range(model.max_weight + 2)]
    lower = [_span(model, f_filtration_basis(model, r))
             for r in range(-1, model.d*(model.truncation - 1) + 1)]
    phis = [_fp_matrix(model, CartierMap(model, r).linearized())
            for r in range(model.truncation)]
    return GeneralizedFZip(model.p, model.size*model.field.d, upper, lower,
                           phis, twist_rank=model.p**model.d)


def frobenius_section_check(model, samples=10, seed=None):
    """
    Check the section f : A -> model against the projection onto A.

    f must be an injective ring map, the kernel of the projection must be
    J^[1] and the projection of f(a) must be a^p. Witnesses carry
    ``'failed'``.
    """
    random = random_state(seed)
    field = model.field
    report = Report('frobenius section', {'samples': samples})
    basis = [lift(model, unit) for unit in _a_units(model)]
    rank = _rank_over_k(model, basis)
    report.check(rank == model.p**model.d,
                 {'failed': 'injective', 'rank': rank})
    kernel = [i for i in range(model.size)
              if not project(model, model.monomial(*model.exponent(i))).any()]
    report.check(np.array_equal(kernel, j_filtration_basis(model, 1)),
                 {'failed': 'kernel', 'dimension': len(kernel)})
    for sample in range(samples):
        a = random_a_element(model, random)
        b = random_a_element(model, random)
        product = model.mul(lift(model, a), lift(model, b))
        report.check(np.array_equal(product, lift(model, a_mul(model, a, b))),
                     {'failed': 'ring map', 'index': sample})
        total = model.add(lift(model, a), lift(model, b))
        summed = lift(model, field.add_table[a, b])
        report.check(np.array_equal(total, summed),
                     {'failed': 'ring map', 'index': sample})
        power = np.zeros(model.a_shape, dtype=np.int64)
        power[(0,)*model.d] = 1
        for _ in range(model.p):
            power = a_mul(model, power, a)
        report.check(np.array_equal(project(model, lift(model, a)), power),
                     {'failed': 'frobenius', 'index': sample})
    return report


def _canonical(model, x):
    "Terms of x by exponents, independent of the truncation order."
    return sorted((tuple(int(v) for v in model.exponents[i]), code)
                  for i, code in model.terms(x))


def truncation_stability_report(field, d, truncation=None, extra=2):
    """
    Compare the models of order R and R + extra in degrees below R.

    Graded bases, Cartier images, gamma functor ranks and rank tables must
    agree term by term.
    """
    if truncation is None:
        truncation = constants.DEFAULT_TRUNCATION
    small = build_model(field, d, truncation)
    large = build_model(field, d, truncation + extra)
    report = Report('truncation stability', {'truncation': truncation,
                                             'extra': extra})
    for r in range(truncation):
        pieces = [[_canonical(m, e) for e in GradedPiece(m, r).elements]
                  for m in (small, large)]
        report.check(pieces[0] == pieces[1],
                     {'index': r, 'failed': 'graded basis'})
        images = [[_canonical(m, e) for e in CartierMap(m, r).images]
                  for m in (small, large)]
        report.check(images[0] == images[1],
                     {'index': r, 'failed': 'cartier'})
        ranks = [gamma_functor_check(m, r).details['rank']
                 for m in (small, large)]
        report.check(ranks[0] == ranks[1],
                     {'index': r, 'failed': 'gamma functor'})
    report.check(rank_table(small) == rank_table(large,
                                                 range(truncation)),
                 {'failed': 'rank table'})
    return report
