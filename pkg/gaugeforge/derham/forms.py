"""
Polynomial differential forms on smooth affine varieties.

A variety is affine space A^m or a smooth hypersurface V(g) in A^m over
k = F_q. The equation g has coefficients in F_p and comes with a
certificate of smoothness, polynomials a_0, ..., a_m with
a_0 g + sum_i a_i dg/dx_i = 1. Since everything is defined over the prime
field, forms are stored with F_p coefficients and ranks over k are the same
after base change.

A form x^a dx_I has weight |a| + |I|, which d preserves. The truncation
keeps the forms of weight at most the degree D of the variety. On a
hypersurface the forms of V(g) are the quotient of those of A^m by
g Omega^q + dg ^ Omega^(q-1) in the same weights, and every subspace
below is given by ambient representatives together with these relations.

**Varieties**

* :class:`~gaugeforge.derham.forms.AffineVariety`
* :func:`~gaugeforge.derham.forms.affine_space`
* :func:`~gaugeforge.derham.forms.hypersurface`
* :func:`~gaugeforge.derham.forms.certify_smoothness`
* :func:`~gaugeforge.derham.forms.variety_from_dict`

**Forms**

* :class:`~gaugeforge.derham.forms.DifferentialForm`
* :class:`~gaugeforge.derham.forms.FormSpace`
* :func:`~gaugeforge.derham.forms.polynomial_form`
* :func:`~gaugeforge.derham.forms.kaehler_d`
* :func:`~gaugeforge.derham.forms.wedge`
* :func:`~gaugeforge.derham.forms.multiply`
* :func:`~gaugeforge.derham.forms.differential_matrix`
* :func:`~gaugeforge.derham.forms.relation_matrix`
* :func:`~gaugeforge.derham.forms.closed_forms`
* :func:`~gaugeforge.derham.forms.exact_forms`

**Cohomology**

* :class:`~gaugeforge.derham.forms.CohomologySpace`
* :func:`~gaugeforge.derham.forms.de_rham_cohomology`
* :func:`~gaugeforge.derham.forms.de_rham_basis`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object
import itertools
import logging

import numpy as np
from sympy import ZZ, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import ring as polynomial_ring

from .. import constants
from ..utils import (Report, PreconditionError, SchemaError,
                     TruncationOverflow, compositions)
from ..witt.fields import FiniteField
from ..witt import linalg

log = logging.getLogger(__name__)

_NAMES = 'xyzw'


def _variable_names(nvars):
    if nvars <= len(_NAMES):
        return list(_NAMES[:nvars])
    return ['x{}'.format(i + 1) for i in range(nvars)]


def _parse(ring, text):
    "A polynomial of *ring* from a string or an integer."
    try:
        return ring.from_expr(sympify(text))
    except (SympifyError, CoercionFailed, ValueError, TypeError) as error:
        raise SchemaError("Cannot read the polynomial {!r}: {}".format(
            text, error))


class AffineVariety(object):
    """
    A smooth affine variety over F_q with a weight truncation.

    Parameters:

    * field : FiniteField or int
    * nvars : int
        The number m of coordinates.
    * equation : str or None
        The hypersurface equation g, read with integer coefficients mod p.
        None gives the affine space A^m.
    * witness : list of str
        a_0, ..., a_m with a_0 g + sum_i a_i dg/dx_i = 1 mod p. Required
        with *equation*.
    * degree : int
        The weight truncation D.
    * names : list of str
        Coordinate names. Default to x, y, z, w.

    Raises :class:`~gaugeforge.utils.PreconditionError` if the witness does
    not certify smoothness.

    Examples:

        >>> X = AffineVariety(2, 2, 'y - x**2', ['0', '0', '1'])
        >>> X.dim, X.equation_degree
        (1, 2)
        >>> AffineVariety(3, 2).dim
        2

    """

    def __init__(self, field, nvars, equation=None, witness=None,
                 degree=constants.DEFAULT_FORM_DEGREE, names=None):
        if not isinstance(field, FiniteField):
            field = FiniteField(field)
        assert nvars >= 1, "Invalid number of variables {}".format(nvars)
        assert degree >= 0, "Invalid truncation degree {}".format(degree)
        if names is None:
            names = _variable_names(nvars)
        names = [str(name) for name in names]
        assert len(names) == nvars, \
            "Need {} variable names, got {}".format(nvars, names)
        self.field = field
        self.p = field.p
        self.nvars = nvars
        self.names = names
        self.degree = int(degree)
        generated = polynomial_ring(','.join(names), ZZ)
        self.ring = generated[0]
        self.gens = list(generated[1:])
        self.equation = None
        self.witness = None
        self.dim = nvars
        if equation is None:
            return
        self.equation = self.reduce(_parse(self.ring, equation))
        if not self.equation or self.equation_degree < 1:
            raise PreconditionError(
                "The equation {!r} does not define a hypersurface".format(
                    equation))
        if witness is None or len(witness) != nvars + 1:
            raise PreconditionError(
                "A hypersurface needs a smoothness witness of {} "
                "polynomials".format(nvars + 1))
        self.witness = [self.reduce(_parse(self.ring, w)) for w in witness]
        self.dim = nvars - 1
        report = certify_smoothness(self)
        if not report.ok:
            raise PreconditionError(
                "The witness does not certify smoothness of {}: {}".format(
                    equation, report.witnesses))

    @property
    def is_hypersurface(self):
        return self.equation is not None

    @property
    def equation_degree(self):
        "Total degree of g, 0 on affine space."
        if self.equation is None:
            return 0
        return max(sum(monom) for monom in self.equation.keys())

    def reduce(self, poly):
        "The polynomial with its coefficients reduced mod p."
        return self.ring({monom: int(c) % self.p for monom, c in poly.items()
                          if int(c) % self.p})

    def to_dict(self):
        return {'p': self.p, 'd': self.field.d, 'nvars': self.nvars,
                'names': list(self.names), 'degree': self.degree,
                'dim': self.dim,
                'equation': None if self.equation is None
                else str(self.equation.as_expr()),
                'witness': None if self.witness is None
                else [str(w.as_expr()) for w in self.witness]}

    def __eq__(self, other):
        return isinstance(other, AffineVariety) and \
            self.field == other.field and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.field.d, self.nvars, self.degree,
                     self.to_dict()['equation']))

    def __repr__(self):
        if self.equation is None:
            return 'AffineVariety(A^{} over F_{}, degree={})'.format(
                self.nvars, self.field.q, self.degree)
        return 'AffineVariety(V({}) in A^{} over F_{}, degree={})'.format(
            self.equation.as_expr(), self.nvars, self.field.q, self.degree)


def affine_space(field, nvars, degree=constants.DEFAULT_FORM_DEGREE):
    "The affine space A^m truncated at weight *degree*."
    return AffineVariety(field, nvars, degree=degree)


def hypersurface(field, nvars, equation, witness,
                 degree=constants.DEFAULT_FORM_DEGREE, names=None):
    """
    The smooth hypersurface V(g) in A^m.

    Examples:

        >>> X = hypersurface(3, 2, 'x*y - 1', ['-1', 'x', '0'])
        >>> X.is_hypersurface
        True

    """
    return AffineVariety(field, nvars, equation, witness, degree, names)


def certify_smoothness(variety):
    """
    Check the witness a_0 g + sum_i a_i dg/dx_i = 1 mod p.

    Affine space always passes.
    """
    report = Report('smoothness', {'variety': variety.to_dict()})
    if variety.equation is None:
        return report
    g = variety.equation
    total = variety.witness[0]*g
    for gen, a in zip(variety.gens, variety.witness[1:]):
        total += a*g.diff(gen)
    residual = variety.reduce(total - 1)
    report.check(not residual, {'failed': 'jacobian',
                                'residual': str(residual.as_expr())})
    return report


def variety_from_dict(data):
    """
    Build a variety from its JSON description.

    Keys: ``p`` (required), ``d`` (default 1), ``nvars`` or ``names``,
    ``degree`` (default the library default), ``equation`` and ``witness``
    for hypersurfaces.

    Raises :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    if not isinstance(data, dict) or 'p' not in data:
        raise SchemaError("A variety needs at least the key 'p'")
    names = data.get('names')
    nvars = data.get('nvars', len(names) if names else None)
    if not isinstance(nvars, int) or nvars < 1:
        raise SchemaError("Invalid number of variables {!r}".format(nvars))
    witness = data.get('witness')
    if witness is not None and not isinstance(witness, list):
        raise SchemaError("The witness must be a list of polynomials")
    try:
        field = FiniteField(int(data['p']), int(data.get('d', 1)))
    except (AssertionError, ValueError) as error:
        raise SchemaError("Invalid field: {}".format(error))
    return AffineVariety(field, nvars, data.get('equation'), witness,
                         int(data.get('degree',
                                      constants.DEFAULT_FORM_DEGREE)),
                         names)


def _sort_indices(indices):
    "The sorted indices and the sign of the sorting, sign 0 on repeats."
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return 0, ()
    inversions = sum(1 for i, j in itertools.combinations(indices, 2)
                     if i > j)
    return (-1)**inversions, tuple(sorted(indices))


class DifferentialForm(object):
    """
    A q-form sum c x^a dx_I with coefficients in F_p.

    Parameters:

    * variety : AffineVariety
    * q : int
    * terms : dict
        Maps (a, I), with a an exponent tuple and I a tuple of q distinct
        coordinate indices, to an integer. Unsorted I are sorted with the
        sign of the permutation and repeated indices give zero.

    Examples:

        >>> X = affine_space(3, 2)
        >>> DifferentialForm(X, 1, {((2, 0), (1,)): 2}).describe()
        '2*x**2*dy'
        >>> DifferentialForm(X, 2, {((0, 1), (1, 0)): 1}).describe()
        '2*y*dx^dy'

    """

    def __init__(self, variety, q, terms=None):
        assert 0 <= q <= variety.nvars, \
            "Invalid form degree {} on {!r}".format(q, variety)
        self.variety = variety
        self.q = q
        p = variety.p
        coefficients = {}
        for (a, indices), c in (terms or {}).items():
            a = tuple(int(e) for e in a)
            assert len(a) == variety.nvars and min(a) >= 0, \
                "Invalid exponent {}".format(a)
            assert len(indices) == q, \
                "Form of degree {} with indices {}".format(q, indices)
            sign, indices = _sort_indices(indices)
            if sign == 0:
                continue
            key = (a, indices)
            coefficients[key] = (coefficients.get(key, 0) + sign*int(c)) % p
        self.coefficients = {k: c for k, c in coefficients.items() if c}

    @property
    def weight(self):
        "The largest weight |a| + q of a term, -1 for the zero form."
        if not self.coefficients:
            return -1
        return max(sum(a) + self.q for a, _ in self.coefficients)

    def is_zero(self):
        return not self.coefficients

    def _combine(self, other, sign):
        assert self.variety == other.variety and self.q == other.q, \
            "Cannot add forms of degrees {} and {}".format(self.q, other.q)
        terms = dict(self.coefficients)
        for key, c in other.coefficients.items():
            terms[key] = terms.get(key, 0) + sign*c
        return DifferentialForm(self.variety, self.q, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return DifferentialForm(self.variety, self.q,
                                {k: c*v for k, v in self.coefficients.items()})

    def _term(self, a, indices, c):
        factors = [] if c == 1 else [str(c)]
        for name, e in zip(self.variety.names, a):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append('{}**{}'.format(name, e))
        if indices:
            factors.append('^'.join('d' + self.variety.names[i]
                                    for i in indices))
        return '*'.join(factors) if factors else '1'

    def describe(self):
        "The terms by increasing weight."
        if not self.coefficients:
            return '0'
        keys = sorted(self.coefficients,
                      key=lambda k: (sum(k[0]), [-e for e in k[0]], k[1]))
        return ' + '.join(self._term(a, indices, self.coefficients[(a,
                                                                     indices)])
                          for a, indices in keys)

    def __eq__(self, other):
        return isinstance(other, DifferentialForm) and \
            self.variety == other.variety and self.q == other.q and \
            self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'DifferentialForm(q={}, {})'.format(self.q, self.describe())


def polynomial_form(variety, poly):
    """
    The 0-form of a polynomial, given as a string or a ring element.
    """
    if not hasattr(poly, 'items'):
        poly = _parse(variety.ring, poly)
    return DifferentialForm(variety, 0, {(monom, ()): c
                                         for monom, c in poly.items()})


def multiply(variety, poly, form):
    "The product of a polynomial (ring element) and a form."
    terms = {}
    for monom, c in poly.items():
        for (a, indices), b in form.coefficients.items():
            key = (tuple(x + y for x, y in zip(monom, a)), indices)
            terms[key] = terms.get(key, 0) + int(c)*b
    return DifferentialForm(variety, form.q, terms)


def wedge(alpha, beta):
    """
    The exterior product of two forms.

    Examples:

        >>> X = affine_space(3, 2)
        >>> dx = DifferentialForm(X, 1, {((0, 0), (0,)): 1})
        >>> dy = DifferentialForm(X, 1, {((0, 0), (1,)): 1})
        >>> wedge(dy, dx).describe()
        '2*dx^dy'
        >>> wedge(dx, dx).is_zero()
        True

    """
    terms = {}
    for (a, i), c in alpha.coefficients.items():
        for (b, j), e in beta.coefficients.items():
            key = (tuple(x + y for x, y in zip(a, b)), i + j)
            terms[key] = terms.get(key, 0) + c*e
    return DifferentialForm(alpha.variety, alpha.q + beta.q, terms)


def kaehler_d(form):
    """
    The exterior derivative d(x^a dx_I) = sum_j a_j x^(a - e_j) dx_j ^ dx_I.

    d keeps the weight of every term and lowers its coefficient degree by
    one. The form must be below the top degree.

    Examples:

        >>> X = affine_space(2, 1)
        >>> kaehler_d(polynomial_form(X, 'x**2')).is_zero()
        True
        >>> kaehler_d(polynomial_form(X, 'x**3')).describe()
        'x**2*dx'

    """
    variety = form.variety
    assert form.q < variety.nvars, \
        "No forms above degree {}".format(variety.nvars)
    terms = {}
    for (a, indices), c in form.coefficients.items():
        for j, e in enumerate(a):
            if e == 0 or j in indices:
                continue
            lowered = a[:j] + (e - 1,) + a[j + 1:]
            sign, key = _sort_indices((j,) + indices)
            terms[(lowered, key)] = terms.get((lowered, key), 0) + \
                sign*e*c
    return DifferentialForm(variety, form.q + 1, terms)


_spaces = {}


class FormSpace(object):
    """
    The F_p basis x^a dx_I of the q-forms of weight at most *weight* on A^m.

    The basis is ordered by weight first, so the space of a smaller weight
    is a prefix of this one.

    Examples:

        >>> FormSpace(2, 1, 2).basis
        [((0, 0), (0,)), ((0, 0), (1,)), ((1, 0), (0,)), ((1, 0), (1,)), \
((0, 1), (0,)), ((0, 1), (1,))]

    """

    def __init__(self, nvars, q, weight):
        self.nvars = nvars
        self.q = q
        self.weight = weight
        subsets = list(itertools.combinations(range(nvars), q))
        self.basis = [(a, indices)
                      for w in range(q, weight + 1)
                      for a in compositions(w - q, nvars)
                      for indices in subsets]
        self.index = {key: i for i, key in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def vector(self, form):
        "The coordinates of a form. Raises if a term is too heavy."
        vector = np.zeros(self.dim, dtype=np.int64)
        for key, c in form.coefficients.items():
            if key not in self.index:
                raise TruncationOverflow(
                    "Term of weight {} beyond the space of weight {}".format(
                        sum(key[0]) + self.q, self.weight))
            vector[self.index[key]] = c
        return vector

    def form(self, variety, vector):
        "The form with the given coordinates."
        return DifferentialForm(variety, self.q, {
            self.basis[i]: int(c) for i, c in enumerate(vector) if c})

    def transfer(self, vector, other):
        """
        Move coordinates to the space *other* of the same degree.

        Terms that do not fit are dropped, missing ones are zero.
        """
        result = np.zeros(other.dim, dtype=np.int64)
        size = min(self.dim, other.dim)
        result[:size] = np.asarray(vector)[:size]
        return result

    def __repr__(self):
        return 'FormSpace(m={}, q={}, weight={})'.format(self.nvars, self.q,
                                                        self.weight)


def form_space(variety, q, weight):
    "The (cached) form space of the variety's ambient affine space."
    key = (variety.nvars, q, weight)
    if key not in _spaces:
        _spaces[key] = FormSpace(*key)
    return _spaces[key]


def truncation_weight(variety, weight=None):
    """
    The weight bound to use, by default the truncation degree D.

    Raises :class:`~gaugeforge.utils.TruncationOverflow` above D.
    """
    if weight is None:
        return variety.degree
    if weight > variety.degree:
        raise TruncationOverflow(
            "Weight {} needs the truncation degree {}, got {}".format(
                weight, weight, variety.degree))
    return int(weight)


def empty_columns(rows):
    return np.zeros((rows, 0), dtype=np.int64)


def stack_columns(columns, rows):
    if not columns:
        return empty_columns(rows)
    return np.stack(columns, axis=1)


def column_basis(matrix, p):
    "The columns of *matrix* that are independent of the previous ones."
    matrix = np.asarray(matrix, dtype=np.int64) % p
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return matrix[:, :0]
    _, pivots = linalg.rref_mod_p(matrix, p)
    return matrix[:, pivots]


def complement(base, extra, p):
    "Columns of *extra* extending the span of *base* to that of both."
    base = np.asarray(base, dtype=np.int64)
    extra = np.asarray(extra, dtype=np.int64) % p
    combined = np.hstack([base, extra])
    if combined.shape[0] == 0 or extra.shape[1] == 0:
        return extra[:, :0]
    _, pivots = linalg.rref_mod_p(combined, p)
    offset = base.shape[1]
    return extra[:, [c - offset for c in pivots if c >= offset]]


def in_span(matrix, vector, p):
    "True if *vector* is a combination of the columns of *matrix*."
    vector = np.asarray(vector, dtype=np.int64) % p
    if not vector.any():
        return True
    if matrix.shape[1] == 0:
        return False
    return linalg.solve_mod_p(matrix, vector, p) is not None


def kernel_columns(matrix, p):
    "A basis (as columns) of the right null space."
    matrix = np.asarray(matrix, dtype=np.int64)
    return linalg.nullspace_mod_p(matrix, p).T


def differential_matrix(variety, q, weight=None):
    """
    The matrix of d : Omega^q -> Omega^(q+1) in weights <= *weight*.

    On the top degree the target is zero.

    Examples:

        >>> differential_matrix(affine_space(2, 1), 0, 3).tolist()
        [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]]

    """
    weight = truncation_weight(variety, weight)
    source = form_space(variety, q, weight)
    if q >= variety.nvars:
        return np.zeros((0, source.dim), dtype=np.int64)
    target = form_space(variety, q + 1, weight)
    columns = [target.vector(kaehler_d(DifferentialForm(variety, q,
                                                        {key: 1})))
               for key in source.basis]
    return stack_columns(columns, target.dim)


def relation_matrix(variety, q, weight=None):
    """
    Columns spanning g Omega^q + dg ^ Omega^(q-1) in weights <= *weight*.

    Empty on affine space.
    """
    weight = truncation_weight(variety, weight)
    space = form_space(variety, q, weight)
    if variety.equation is None:
        return empty_columns(space.dim)
    g = variety.equation
    rest = weight - variety.equation_degree
    columns = [space.vector(multiply(variety, g, DifferentialForm(
        variety, q, {key: 1}))) for key in form_space(variety, q, rest).basis]
    if q > 0:
        dg = kaehler_d(polynomial_form(variety, g))
        columns += [space.vector(wedge(dg, DifferentialForm(variety, q - 1,
                                                            {key: 1})))
                    for key in form_space(variety, q - 1, rest).basis]
    return stack_columns(columns, space.dim)


def _cycles(variety, q, weight):
    "Ambient representatives of {w : dw in the relations}."
    p = variety.p
    d = differential_matrix(variety, q, weight)
    dim = d.shape[1]
    if q >= variety.nvars:
        return np.eye(dim, dtype=np.int64)
    system = np.hstack([d, relation_matrix(variety, q + 1, weight)])
    return column_basis(kernel_columns(system, p)[:dim], p)


def closed_forms(variety, q, weight=None):
    """
    A basis of the closed q-forms in weights <= *weight*.

    On a hypersurface the columns represent the closed forms modulo the
    relations.

    Examples:

        >>> closed_forms(affine_space(2, 1, 4), 1).shape
        (4, 4)
        >>> closed_forms(affine_space(2, 1, 4), 0).shape
        (5, 3)

    """
    weight = truncation_weight(variety, weight)
    return complement(relation_matrix(variety, q, weight),
                      _cycles(variety, q, weight), variety.p)


def exact_forms(variety, q, weight=None):
    """
    A basis of the exact q-forms d Omega^(q-1) in weights <= *weight*.
    """
    weight = truncation_weight(variety, weight)
    relations = relation_matrix(variety, q, weight)
    if q == 0:
        return relations[:, :0]
    return complement(relations, differential_matrix(variety, q - 1, weight),
                      variety.p)


class CohomologySpace(object):
    """
    A subquotient Z/B of F_p column vectors with chosen representatives.

    Parameters:

    * cycles : 2d-array
        Columns spanning Z.
    * boundaries : 2d-array
        Columns spanning B, contained in Z.
    * p : int

    Examples:

        >>> H = CohomologySpace(np.eye(3, dtype=np.int64),
        ...                     np.array([[1], [1], [0]]), 2)
        >>> H.rank
        2
        >>> H.coordinates([0, 0, 1]).tolist()
        [0, 1]

    """

    def __init__(self, cycles, boundaries, p):
        self.p = p
        self.boundaries = column_basis(boundaries, p)
        self.representatives = complement(self.boundaries, cycles, p)
        self.rank = self.representatives.shape[1]

    @property
    def size(self):
        "The dimension of the ambient space."
        return self.representatives.shape[0]

    def coordinates(self, vector):
        "Coordinates of the class of a cycle in the representative basis."
        system = np.hstack([self.boundaries, self.representatives])
        vector = np.asarray(vector, dtype=np.int64) % self.p
        if system.shape[1] == 0:
            if vector.any():
                raise PreconditionError("The vector is not a cycle")
            return np.zeros(0, dtype=np.int64)
        solution = linalg.solve_mod_p(system, vector, self.p)
        if solution is None:
            raise PreconditionError("The vector is not a cycle")
        return solution[self.boundaries.shape[1]:]

    def matrix(self, images):
        "The matrix whose columns are the coordinates of the given cycles."
        images = np.asarray(images, dtype=np.int64)
        columns = [self.coordinates(images[:, j])
                   for j in range(images.shape[1])]
        if not columns:
            return np.zeros((self.rank, 0), dtype=np.int64)
        return np.stack(columns, axis=1)

    def is_boundary(self, vector):
        return in_span(self.boundaries, vector, self.p)

    def __repr__(self):
        return 'CohomologySpace(rank={}, size={})'.format(self.rank,
                                                          self.size)


def de_rham_cohomology(variety, q, weight=None):
    """
    The truncated de Rham cohomology H^q in weights <= *weight*.

    Examples:

        >>> de_rham_cohomology(affine_space(2, 1, 4), 1).rank
        2

    """
    weight = truncation_weight(variety, weight)
    if q > variety.dim:
        return CohomologySpace(empty_columns(0), empty_columns(0), variety.p)
    boundaries = relation_matrix(variety, q, weight)
    if q > 0:
        boundaries = np.hstack([differential_matrix(variety, q - 1, weight),
                                boundaries])
    cohomology = CohomologySpace(_cycles(variety, q, weight), boundaries,
                                 variety.p)
    log.debug("H^%d_dR of %r in weights <= %d has rank %d", q, variety,
              weight, cohomology.rank)
    return cohomology


def de_rham_basis(variety, q, weight=None):
    """
    Representatives of a basis of H^q as forms.

    Examples:

        >>> X = affine_space(2, 1, 6)
        >>> [w.describe() for w in de_rham_basis(X, 1)]
        ['x*dx', 'x**3*dx', 'x**5*dx']

    """
    weight = truncation_weight(variety, weight)
    space = form_space(variety, q, weight)
    cohomology = de_rham_cohomology(variety, q, weight)
    return [space.form(variety, cohomology.representatives[:, j])
            for j in range(cohomology.rank)]
