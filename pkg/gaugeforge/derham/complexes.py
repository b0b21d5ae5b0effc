"""
The Cartier operator and the de Rham gauge complexes G_1^r(X).

For r < 0, G_1^r(X) is the de Rham complex Omega^0 -> Omega^1 -> ... and
for r >= 0 it is the complex

    sigma Omega^0 -> ... -> sigma Omega^(r-1) -> sigma Z Omega^r
    -> Omega^(r+1) -> ...

where sigma marks the terms whose scalars act through Frobenius, Z Omega^r
are the closed forms and the map out of sigma Z Omega^r is dc, with c the
Cartier operator. f : G^r -> G^(r+1) is the identity on the twisted terms,
the inclusion at the splice and zero above. v : G^(r+1) -> G^r is zero on
the twisted terms, c at the splice and the identity above.

c divides weights by p, so a complex is truncated by a twisted weight T:
twisted terms keep the forms of weight <= T and the others those of weight
<= T // p. On affine space all maps respect the grading given by weight/p
on twisted terms and weight on the others, and the truncated complexes are
direct summands of the full ones.

**Cartier operator**

* :func:`~gaugeforge.derham.complexes.cartier_inverse`
* :func:`~gaugeforge.derham.complexes.cartier_inverse_matrix`
* :class:`~gaugeforge.derham.complexes.CartierOperator`
* :func:`~gaugeforge.derham.complexes.cartier_c`
* :func:`~gaugeforge.derham.complexes.cartier_round_trip_report`

**Gauge complexes**

* :class:`~gaugeforge.derham.complexes.DeRhamGaugeComplex`
* :func:`~gaugeforge.derham.complexes.build_G1`
* :class:`~gaugeforge.derham.complexes.LadderMap`
* :func:`~gaugeforge.derham.complexes.gauge_map_f`
* :func:`~gaugeforge.derham.complexes.gauge_map_v`
* :func:`~gaugeforge.derham.complexes.ladder_report`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object
import collections
import logging

import numpy as np

from ..utils import Report, PreconditionError, TruncationOverflow
from ..witt import linalg
from .forms import (DifferentialForm, CohomologySpace, form_space,
                    truncation_weight, differential_matrix, relation_matrix,
                    closed_forms, multiply, stack_columns, empty_columns,
                    column_basis, kernel_columns, in_span)

log = logging.getLogger(__name__)

TWISTED = 'twisted'
CLOSED = 'closed'
PLAIN = 'plain'

#: A term of a gauge complex: its kind, the ambient form space, columns
#: spanning the term and columns spanning the relations inside it.
Term = collections.namedtuple('Term', ['kind', 'space', 'basis', 'relations'])


def _rank(matrix, p):
    return column_basis(matrix, p).shape[1]


def cartier_inverse(form):
    """
    The representative c^-1(x^a dx_I) = x^(pa + (p-1)1_I) dx_I.

    This is a_0^p a_1^(p-1) ... a_q^(p-1) da_1 ^ ... ^ da_q for a_0 = x^a
    and a_1, ..., a_q the coordinates in I. Coefficients lie in F_p, where
    Frobenius is the identity.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(3, 1)
        >>> dx = DifferentialForm(X, 1, {((0,), (0,)): 1})
        >>> cartier_inverse(dx).describe()
        'x**2*dx'

    """
    p = form.variety.p
    terms = {}
    for (a, indices), c in form.coefficients.items():
        exponent = tuple(p*e + (p - 1 if j in indices else 0)
                         for j, e in enumerate(a))
        terms[(exponent, indices)] = c
    return DifferentialForm(form.variety, form.q, terms)


def cartier_inverse_matrix(variety, q, weight, capacity=None):
    """
    c^-1 from the q-forms of weight <= *weight* to those of weight
    <= *capacity*, by default p w.

    Raises :class:`~gaugeforge.utils.TruncationOverflow` with the required
    capacity if p w exceeds *capacity* or the truncation degree.
    """
    if capacity is None:
        capacity = variety.p*weight
    if variety.p*weight > min(capacity, variety.degree):
        raise TruncationOverflow(
            "c^-1 on weight {} needs capacity {}, the truncation degree is "
            "{}".format(weight, variety.p*weight, variety.degree))
    source = form_space(variety, q, weight)
    target = form_space(variety, q, capacity)
    columns = [target.vector(cartier_inverse(
        DifferentialForm(variety, q, {key: 1}))) for key in source.basis]
    return stack_columns(columns, target.dim)


class CartierOperator(object):
    """
    The Cartier operator c : Z Omega^q -> Omega^q in weights <= W.

    A closed form w of weight <= W is written as c^-1(eta) + d(beta), plus
    relations on a hypersurface, with eta of weight <= W // p, and
    c(w) = eta.

    Parameters:

    * variety : AffineVariety
    * q : int
    * weight : int or None
        The bound W, by default the truncation degree.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(2, 1, 6)
        >>> c = CartierOperator(X, 1)
        >>> c(DifferentialForm(X, 1, {((3,), (0,)): 1})).describe()
        'x*dx'
        >>> c(DifferentialForm(X, 1, {((2,), (0,)): 1})).is_zero()
        True

    """

    def __init__(self, variety, q, weight=None):
        self.variety = variety
        self.q = q
        self.weight = truncation_weight(variety, weight)
        self.target_weight = self.weight//variety.p
        self.source = form_space(variety, q, self.weight)
        self.target = form_space(variety, q, self.target_weight)
        self.inverse_matrix = cartier_inverse_matrix(
            variety, q, self.target_weight, self.weight)
        if q > 0:
            self.exact = differential_matrix(variety, q - 1, self.weight)
        else:
            self.exact = empty_columns(self.source.dim)
        self.relations = relation_matrix(variety, q, self.weight)
        self._system = np.hstack([self.inverse_matrix, self.exact,
                                  self.relations])
        self._d = None
        if q < variety.nvars:
            self._d = differential_matrix(variety, q, self.weight)
            self._next_relations = relation_matrix(variety, q + 1,
                                                   self.weight)

    def is_closed(self, vector):
        if self._d is None:
            return True
        image = self._d.dot(np.asarray(vector, dtype=np.int64))
        return in_span(self._next_relations, image, self.variety.p)

    def apply(self, vector):
        "c on the coordinates of a closed form of weight <= W."
        p = self.variety.p
        vector = np.asarray(vector, dtype=np.int64) % p
        if not self.is_closed(vector):
            raise PreconditionError("c is only defined on closed forms")
        if not vector.any():
            return np.zeros(self.target.dim, dtype=np.int64)
        solution = None
        if self._system.shape[1]:
            solution = linalg.solve_mod_p(self._system, vector, p)
        if solution is None:
            raise TruncationOverflow(
                "The class of a closed {}-form is not reached by c^-1 from "
                "weight {}; raise the truncation degree {}".format(
                    self.q, self.target_weight, self.variety.degree))
        return solution[:self.target.dim]

    def __call__(self, form):
        return self.target.form(self.variety,
                                self.apply(self.source.vector(form)))

    def inverse(self, form):
        "c^-1 of a form of weight <= W // p."
        image = self.inverse_matrix.dot(self.target.vector(form))
        return self.source.form(self.variety, image % self.variety.p)

    def __repr__(self):
        return 'CartierOperator(q={}, weight={})'.format(self.q, self.weight)


def cartier_c(variety, q, weight=None):
    """
    The Cartier operator in degree q.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(3, 1)
        >>> c = cartier_c(X, 1)
        >>> dx = DifferentialForm(X, 1, {((0,), (0,)): 1})
        >>> c(c.inverse(dx)) == dx
        True

    """
    return CartierOperator(variety, q, weight)


def cartier_round_trip_report(variety, q, weight=None):
    """
    Check that c and c^-1 are inverse to each other between Omega^q and H^q.

    Failures are recorded as ``'inverse closed'`` (c^-1 of a form is not
    closed), ``'c after c^-1'``, ``'c^-1 after c'`` (the difference is not
    exact), ``'injective'`` (c^-1 does not embed Omega^q into H^q) and
    ``'semilinear'`` (c(x_j^p w) differs from x_j c(w)). Truncation
    shortfalls are recorded as overflow.
    """
    weight = truncation_weight(variety, weight)
    p = variety.p
    report = Report('cartier round trip', {'q': q, 'weight': weight})
    try:
        c = CartierOperator(variety, q, weight)
    except TruncationOverflow as error:
        report.overflow({'failed': 'capacity', 'message': str(error)})
        return report
    target_relations = relation_matrix(variety, q, c.target_weight)
    boundaries = np.hstack([c.exact, c.relations])
    for j in range(c.target.dim):
        image = c.inverse_matrix[:, j]
        if not report.check(c.is_closed(image), {'index': j,
                                                 'failed': 'inverse closed'}):
            continue
        back = c.apply(image)
        back[j] -= 1
        report.check(in_span(target_relations, back, p),
                     {'index': j, 'failed': 'c after c^-1'})
    rank = _rank(np.hstack([c.inverse_matrix, boundaries]), p) - \
        _rank(boundaries, p)
    report.check(c.target.dim - rank == _rank(target_relations, p),
                 {'failed': 'injective', 'rank': rank})
    report.details['rank'] = rank
    closed = closed_forms(variety, q, weight)
    for j in range(closed.shape[1]):
        omega = closed[:, j]
        try:
            difference = c.inverse_matrix.dot(c.apply(omega)) - omega
        except TruncationOverflow as error:
            report.overflow({'index': j, 'failed': 'capacity',
                             'message': str(error)})
            continue
        report.check(in_span(boundaries, difference, p),
                     {'index': j, 'failed': 'c^-1 after c'})
        form = c.source.form(variety, omega)
        if form.weight > weight - p:
            continue
        for k, gen in enumerate(variety.gens):
            twisted = c.source.vector(multiply(variety, gen**p, form))
            expected = c.target.vector(multiply(
                variety, gen, c.target.form(variety, c.apply(omega))))
            report.check(in_span(target_relations,
                                 c.apply(twisted) - expected, p),
                         {'index': j, 'variable': k, 'failed': 'semilinear'})
    return report


class DeRhamGaugeComplex(object):
    """
    The truncated complex of global sections of G_1^r(X).

    Parameters:

    * variety : AffineVariety
    * r : int
    * weight : int or None
        The twisted weight bound T, by default the truncation degree. The
        untwisted terms keep the weights <= T // p.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(2, 1, 4)
        >>> DeRhamGaugeComplex(X, -1).kinds
        ['plain', 'plain']
        >>> G = DeRhamGaugeComplex(X, 0)
        >>> G.kinds, G.twisted
        (['closed', 'plain'], [True, False])
        >>> DeRhamGaugeComplex(X, 1).kinds
        ['twisted', 'closed']

    """

    def __init__(self, variety, r, weight=None):
        self.variety = variety
        self.r = r
        self.weight = truncation_weight(variety, weight)
        self.plain_weight = self.weight//variety.p
        self.cartier = None
        if 0 <= r <= variety.nvars:
            self.cartier = CartierOperator(variety, r, self.weight)
        self.terms = [self._term(q) for q in range(variety.nvars + 1)]
        self._differentials = []
        for q in range(variety.nvars):
            if self.kind(q) == TWISTED:
                weight_q = self.weight
            else:
                weight_q = self.plain_weight
            self._differentials.append(differential_matrix(variety, q,
                                                           weight_q))

    def kind(self, q):
        "Whether term q is twisted, the closed splice or plain."
        if q < self.r:
            return TWISTED
        if q == self.r:
            return CLOSED
        return PLAIN

    @property
    def kinds(self):
        return [term.kind for term in self.terms]

    @property
    def twisted(self):
        "The twist markers."
        return [term.kind != PLAIN for term in self.terms]

    def _term(self, q):
        variety = self.variety
        kind = self.kind(q)
        weight = self.plain_weight if kind == PLAIN else self.weight
        space = form_space(variety, q, weight)
        relations = relation_matrix(variety, q, weight)
        if kind == CLOSED:
            basis = column_basis(np.hstack([
                relations, closed_forms(variety, q, weight)]), variety.p)
        else:
            basis = np.eye(space.dim, dtype=np.int64)
        return Term(kind, space, basis, relations)

    def differential(self, q, vector):
        "The differential out of term q, on form coordinates."
        p = self.variety.p
        if q >= self.variety.nvars:
            return np.zeros(0, dtype=np.int64)
        vector = np.asarray(vector, dtype=np.int64) % p
        if self.kind(q) == CLOSED:
            vector = self.cartier.apply(vector)
        return self._differentials[q].dot(vector) % p

    def differential_images(self, q):
        "The images of the basis columns of term q."
        basis = self.terms[q].basis
        rows = self.terms[q + 1].space.dim if q < self.variety.nvars else 0
        return stack_columns([self.differential(q, basis[:, j])
                              for j in range(basis.shape[1])], rows)

    def dims(self):
        "The dimension of every term modulo its relations."
        p = self.variety.p
        return [_rank(np.hstack([t.relations, t.basis]), p) -
                _rank(t.relations, p) for t in self.terms]

    def cohomology(self, i):
        """
        H^i of the complex as a :class:`CohomologySpace` of form vectors.
        """
        p = self.variety.p
        if i < 0 or i > self.variety.nvars:
            return CohomologySpace(empty_columns(0), empty_columns(0), p)
        term = self.terms[i]
        if i < self.variety.nvars:
            images = self.differential_images(i)
            system = np.hstack([images, self.terms[i + 1].relations])
            kernel = kernel_columns(system, p)[:term.basis.shape[1]]
            cycles = term.basis.dot(kernel) % p
        else:
            cycles = term.basis
        boundaries = term.relations
        if i > 0:
            boundaries = np.hstack([self.differential_images(i - 1),
                                    boundaries])
        return CohomologySpace(cycles, boundaries, p)

    def complex_report(self):
        "Check d^2 = 0 and that d keeps the relations."
        p = self.variety.p
        report = Report('gauge complex', {'r': self.r, 'weight': self.weight,
                                          'kinds': self.kinds})
        for q in range(self.variety.nvars - 1):
            images = self.differential_images(q)
            for j in range(images.shape[1]):
                report.check(in_span(self.terms[q + 2].relations,
                                     self.differential(q + 1, images[:, j]),
                                     p),
                             {'index': q, 'column': j, 'failed': 'd^2'})
        for q in range(self.variety.nvars):
            relations = self.terms[q].relations
            for j in range(relations.shape[1]):
                report.check(in_span(self.terms[q + 1].relations,
                                     self.differential(q, relations[:, j]),
                                     p),
                             {'index': q, 'column': j,
                              'failed': 'relations'})
        return report

    def to_dict(self):
        return {'r': self.r, 'weight': self.weight,
                'plain_weight': self.plain_weight, 'kinds': self.kinds,
                'dims': self.dims()}

    def __repr__(self):
        return 'DeRhamGaugeComplex(r={}, weight={}, kinds={})'.format(
            self.r, self.weight, self.kinds)


def build_G1(variety, r, weight=None):
    """
    The complex G_1^r(X) truncated at twisted weight *weight*.

    Examples:

        >>> from gaugeforge.derham.forms import affine_space
        >>> X = affine_space(2, 1, 4)
        >>> build_G1(X, 2).kinds
        ['twisted', 'twisted']
        >>> build_G1(X, 0).dims()
        [3, 2]

    """
    complex_ = DeRhamGaugeComplex(variety, r, weight)
    log.debug("Built %r on %r", complex_, variety)
    return complex_


class LadderMap(object):
    """
    f : G^r -> G^(r+1) or v : G^(r+1) -> G^r, termwise on form vectors.

    Parameters:

    * name : 'f' or 'v'
    * source, target : DeRhamGaugeComplex

    """

    def __init__(self, name, source, target):
        assert name in ('f', 'v'), "Unknown ladder map {}".format(name)
        step = 1 if name == 'f' else -1
        assert target.r == source.r + step, \
            "{} cannot map G^{} to G^{}".format(name, source.r, target.r)
        assert source.variety == target.variety, "Different varieties"
        self.name = name
        self.source = source
        self.target = target

    def apply(self, q, vector):
        "The map on term q."
        source, target = self.source.terms[q], self.target.terms[q]
        vector = np.asarray(vector, dtype=np.int64)
        zero = np.zeros(target.space.dim, dtype=np.int64)
        if self.name == 'f':
            if source.kind == PLAIN:
                return zero
            return source.space.transfer(vector, target.space)
        if source.kind == TWISTED:
            return zero
        if source.kind == CLOSED:
            cartier = self.source.cartier
            return cartier.target.transfer(cartier.apply(vector),
                                           target.space)
        return source.space.transfer(vector, target.space)

    def images(self, q):
        "The images of the basis columns of source term q."
        basis = self.source.terms[q].basis
        return stack_columns([self.apply(q, basis[:, j])
                              for j in range(basis.shape[1])],
                             self.target.terms[q].space.dim)

    def on_cohomology(self, i, source, target):
        """
        The matrix of the induced map between cohomology spaces of degree i.
        """
        images = [self.apply(i, source.representatives[:, j])
                  for j in range(source.rank)]
        return target.matrix(stack_columns(images, target.size))

    def __repr__(self):
        return 'LadderMap({}: G^{} -> G^{})'.format(self.name, self.source.r,
                                                   self.target.r)


def gauge_map_f(source, target=None):
    "f : G^r -> G^(r+1), building G^(r+1) at the same weight if needed."
    if target is None:
        target = build_G1(source.variety, source.r + 1, source.weight)
    return LadderMap('f', source, target)


def gauge_map_v(source, target=None):
    "v : G^(r+1) -> G^r for *source* = G^(r+1)."
    if target is None:
        target = build_G1(source.variety, source.r - 1, source.weight)
    return LadderMap('v', source, target)


def _kernel_modulo(images, basis, term_relations, p):
    """
    The dimension of the kernel of a map on a quotient term.

    *images* is a list of (images of the basis, target relations) pairs.
    """
    cols = basis.shape[1]
    blocks = []
    for k, (image, target_relations) in enumerate(images):
        row = [image] + [np.zeros((image.shape[0], r.shape[1]),
                                  dtype=np.int64)
                         for _, r in images]
        row[k + 1] = target_relations
        blocks.append(np.hstack(row))
    kernel = kernel_columns(np.vstack(blocks), p)[:cols]
    trivial = kernel_columns(np.hstack([basis, term_relations]), p)[:cols]
    return _rank(kernel, p) - _rank(trivial, p)


def _commutes(report, name, mapping, q, p):
    "Check that *mapping* commutes with the differentials out of term q."
    source, target = mapping.source, mapping.target
    if q >= source.variety.nvars:
        return
    basis = source.terms[q].basis
    for j in range(basis.shape[1]):
        x = basis[:, j]
        left = mapping.apply(q + 1, source.differential(q, x))
        right = target.differential(q, mapping.apply(q, x))
        report.check(in_span(target.terms[q + 1].relations, left - right, p),
                     {'index': q, 'column': j, 'failed': name + ' chain'})


def ladder_report(variety, r, weight=None):
    """
    Check the gauge structure of G_1 around degree r, term by term.

    With G^(r-1), G^r and G^(r+1) built at the same weight the report
    checks that f and v are maps of complexes, that vf = fv = 0, that
    (f, v) : G^r -> G^(r+1) + G^(r-1) is injective, that f is zero for
    r < 0 and bijective for r >= m, that v : G^r -> G^(r-1) is the
    identity for r < 0 and bijective for r = 0.
    """
    weight = truncation_weight(variety, weight)
    p = variety.p
    before = build_G1(variety, r - 1, weight)
    here = build_G1(variety, r, weight)
    after = build_G1(variety, r + 1, weight)
    f, v = gauge_map_f(here, after), gauge_map_v(here, before)
    f_before, v_after = gauge_map_f(before, here), gauge_map_v(after, here)
    report = Report('de Rham gauge ladder', {'r': r, 'weight': weight,
                                             'dims': here.dims()})
    report.add(here.complex_report())
    for q in range(variety.nvars + 1):
        term = here.terms[q]
        _commutes(report, 'f', f, q, p)
        _commutes(report, 'v', v, q, p)
        for j in range(term.basis.shape[1]):
            x = term.basis[:, j]
            report.check(in_span(term.relations,
                                 v_after.apply(q, f.apply(q, x)), p),
                         {'index': q, 'column': j, 'failed': 'vf'})
            report.check(in_span(term.relations,
                                 f_before.apply(q, v.apply(q, x)), p),
                         {'index': q, 'column': j, 'failed': 'fv'})
        f_images, v_images = f.images(q), v.images(q)
        f_relations = after.terms[q].relations
        v_relations = before.terms[q].relations
        kernel = _kernel_modulo([(f_images, f_relations),
                                 (v_images, v_relations)],
                                term.basis, term.relations, p)
        report.check(kernel == 0, {'index': q, 'failed': 'injective',
                                   'kernel': kernel})
        if r < 0:
            report.check(not (f_images % p).any(),
                         {'index': q, 'failed': 'f zero'})
            report.check(np.array_equal(v_images % p, term.basis % p),
                         {'index': q, 'failed': 'v identity'})
        if r == 0 or r >= variety.nvars:
            images, relations, target = ((v_images, v_relations, before)
                                         if r == 0 else
                                         (f_images, f_relations, after))
            alone = _kernel_modulo([(images, relations)], term.basis,
                                   term.relations, p)
            target_dim = target.dims()[q]
            image_dim = _rank(np.hstack([relations, images]), p) - \
                _rank(relations, p)
            report.check(alone == 0 and image_dim == target_dim,
                         {'index': q, 'failed': 'v bijective' if r == 0
                          else 'f bijective', 'kernel': alone,
                          'image': image_dim, 'target': target_dim})
    if not report.ok:
        log.error("G_1 ladder fails at r = %d on %r: %r", r, variety,
                  report.witnesses[:5])
    return report
