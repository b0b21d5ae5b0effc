"""
Finite commutative F_p-algebras and their perfection.

An algebra of dimension m is stored by its structure constants
``constants[i, j, k]`` (e_i e_j = sum_k c_ijk e_k) and the coordinates of
its unit. The Frobenius x -> x^p is F_p-linear, so everything reduces to
linear algebra modulo p.

**Algebras**

* :class:`~gaugeforge.zips.perfection.FiniteAlgebra`
* :func:`~gaugeforge.zips.perfection.monomial_algebra`: quotients of
  F_p[x_1, ..., x_k] by a monomial ideal
* :func:`~gaugeforge.zips.perfection.monomial_downsets`: all staircases of
  a bounded size
* :func:`~gaugeforge.zips.perfection.field_algebra`
* :func:`~gaugeforge.zips.perfection.product_algebra`
* :func:`~gaugeforge.zips.perfection.algebra_from_dict`

**Perfection**

* :func:`~gaugeforge.zips.perfection.frobenius_images`
* :func:`~gaugeforge.zips.perfection.perfect_core`
* :func:`~gaugeforge.zips.perfection.is_perfect`
* :func:`~gaugeforge.zips.perfection.surjective_frobenius_report`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import itertools
import logging

import numpy as np

from ..utils import Report, SchemaError
from ..witt import linalg
from ..witt.fields import FiniteField

log = logging.getLogger(__name__)


class FiniteAlgebra(object):
    """
    A finite dimensional commutative algebra over F_p.

    Parameters:

    * p : int
    * constants : 3d-array (m, m, m)
        The structure constants.
    * unit : 1d-array (m,)
        Coordinates of 1.
    * names : list of str or None
        Names of the basis vectors, used in reports only.

    Examples:

        >>> A = monomial_algebra(2, [(0,), (1,), (2,)])
        >>> A.dim
        3
        >>> A.power(A.basis(1), 2).tolist()
        [0, 0, 1]

    """

    def __init__(self, p, constants, unit, names=None):
        constants = np.asarray(constants, dtype=np.int64) % p
        unit = np.asarray(unit, dtype=np.int64) % p
        dim = unit.shape[0]
        if constants.shape != (dim, dim, dim):
            raise ValueError(
                "Structure constants of shape {} for dimension {}".format(
                    constants.shape, dim))
        self.p = p
        self.dim = dim
        self.constants = constants
        self.unit = unit
        self.names = list(names) if names is not None else \
            ['e{}'.format(i) for i in range(dim)]

    def basis(self, i):
        x = np.zeros(self.dim, dtype=np.int64)
        x[i] = 1
        return x

    def mul(self, x, y):
        return np.einsum('i,j,ijk->k', x, y, self.constants) % self.p

    def power(self, x, e):
        result = self.unit.copy()
        base = np.asarray(x, dtype=np.int64) % self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius_matrix(self):
        "Columns are the coordinates of e_i^p."
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return np.stack([self.power(self.basis(i), self.p)
                         for i in range(self.dim)], axis=1)

    def is_unital(self):
        "True if the unit acts as the identity on every basis vector."
        return all(np.array_equal(self.mul(self.unit, self.basis(i)),
                                  self.basis(i)) for i in range(self.dim))

    def to_dict(self):
        return {'p': self.p, 'constants': self.constants.tolist(),
                'unit': self.unit.tolist(), 'names': self.names}

    def __repr__(self):
        return 'FiniteAlgebra(p={}, dim={})'.format(self.p, self.dim)


def algebra_from_dict(data):
    """
    Build an algebra from ``{"p", "constants", "unit"}``.

    Raises :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    try:
        return FiniteAlgebra(int(data['p']), data['constants'], data['unit'],
                             data.get('names'))
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError("Invalid algebra document: {}".format(err))


def monomial_algebra(p, staircase):
    """
    F_p[x_1, ..., x_k] modulo the monomials outside *staircase*.

    Parameters:

    * p : int
    * staircase : list of tuples
        Exponent vectors closed under going down, containing 0.

    """
    monomials = sorted(set(tuple(m) for m in staircase))
    index = dict((m, i) for i, m in enumerate(monomials))
    assert monomials and not any(monomials[0]), \
        "The staircase must contain the constant monomial"
    for m in monomials:
        for i in range(len(m)):
            if m[i]:
                lower = m[:i] + (m[i] - 1,) + m[i + 1:]
                assert lower in index, \
                    "{} is in the staircase but {} is not".format(m, lower)
    dim = len(monomials)
    constants = np.zeros((dim, dim, dim), dtype=np.int64)
    for a, b in itertools.product(monomials, repeat=2):
        product = tuple(x + y for x, y in zip(a, b))
        if product in index:
            constants[index[a], index[b], index[product]] = 1
    unit = np.zeros(dim, dtype=np.int64)
    unit[index[monomials[0]]] = 1
    names = ['x^' + ''.join(str(e) for e in m) for m in monomials]
    return FiniteAlgebra(p, constants, unit, names)


def monomial_downsets(variables, max_size):
    """
    All staircases in N^variables with at most *max_size* monomials.

    Examples:

        >>> len(list(monomial_downsets(1, 4)))
        4
        >>> len(list(monomial_downsets(2, 4)))
        11

    """
    origin = (0,)*variables
    start = frozenset([origin])
    seen = set([start])
    layer = [start]
    while layer:
        following = []
        for current in layer:
            yield sorted(current)
            if len(current) == max_size:
                continue
            for corner in _addable(current, variables):
                grown = current | frozenset([corner])
                if grown not in seen:
                    seen.add(grown)
                    following.append(grown)
        layer = following


def _addable(staircase, variables):
    "Monomials whose removal leaves a staircase, that are not in it yet."
    candidates = set()
    for m in staircase:
        for i in range(variables):
            candidates.add(m[:i] + (m[i] + 1,) + m[i + 1:])
    for m in sorted(candidates - staircase):
        below = [m[:i] + (m[i] - 1,) + m[i + 1:]
                 for i in range(variables) if m[i]]
        if all(x in staircase for x in below):
            yield m


def field_algebra(field):
    """
    The finite field F_q as an F_p-algebra on the basis 1, t, ..., t^(d-1).
    """
    p, d = field.p, field.d
    constants = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            code = field.mul(p**i, p**j)
            constants[i, j] = field.coordinates(code)
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    return FiniteAlgebra(p, constants, unit,
                         ['t^{}'.format(i) for i in range(d)])


def product_algebra(first, second):
    "The product algebra with componentwise operations."
    assert first.p == second.p, "Algebras in different characteristics"
    m, k = first.dim, second.dim
    constants = np.zeros((m + k,)*3, dtype=np.int64)
    constants[:m, :m, :m] = first.constants
    constants[m:, m:, m:] = second.constants
    unit = np.concatenate([first.unit, second.unit])
    return FiniteAlgebra(first.p, constants, unit,
                         first.names + [n + "'" for n in second.names])


def _column_basis(matrix, p):
    "Independent columns spanning the column space modulo p."
    if matrix.shape[1] == 0:
        return matrix
    _, pivots = linalg.rref_mod_p(matrix, p)
    return matrix[:, pivots]


def frobenius_images(algebra):
    """
    Dimensions of A, phi(A), phi^2(A), ... up to the first repetition.

    Examples:

        >>> frobenius_images(monomial_algebra(2, [(i,) for i in range(4)]))
        [4, 2, 1]

    """
    dims = [algebra.dim]
    for _, image in _iterate_images(algebra):
        dims.append(image.shape[1])
    return dims


def _iterate_images(algebra):
    "Bases of phi^k(A) while the dimension drops."
    p = algebra.p
    frob = algebra.frobenius_matrix()
    current = np.eye(algebra.dim, dtype=np.int64)
    step = 0
    while True:
        image = _column_basis(frob.dot(current) % p, p)
        if image.shape[1] == current.shape[1]:
            return
        step += 1
        yield step, image
        current = image


def perfect_core(algebra):
    """
    The perfect subalgebra A_per, intersection of the images phi^k(A).

    The images decrease and stabilise, A_per is the stable one and phi is
    bijective on it. The result is an algebra on a basis of A_per.

    Returns:

    * core : FiniteAlgebra
    * embedding : 2d-array (dim A, dim A_per)
        Coordinates in A of the basis of the core.

    Examples:

        >>> core, embedding = perfect_core(monomial_algebra(3, [(0,), (1,),
        ...                                                     (2,)]))
        >>> core.dim, embedding.ravel().tolist()
        (1, [1, 0, 0])

    """
    p = algebra.p
    basis = np.eye(algebra.dim, dtype=np.int64)
    for step, image in _iterate_images(algebra):
        log.debug("Frobenius image %d of %r has dimension %d", step, algebra,
                  image.shape[1])
        basis = image
    size = basis.shape[1]
    constants = np.zeros((size, size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            product = algebra.mul(basis[:, i], basis[:, j])
            constants[i, j] = _coordinates(basis, product, p)
    unit = _coordinates(basis, algebra.unit, p)
    core = FiniteAlgebra(p, constants, unit)
    return core, basis


def _coordinates(basis, x, p):
    solution = linalg.solve_mod_p(basis, x, p)
    assert solution is not None, \
        "{} is not in the span of the basis".format(x.tolist())
    return solution


def is_perfect(algebra):
    """
    True if the Frobenius of the algebra is bijective.

    Examples:

        >>> is_perfect(field_algebra(FiniteField(2, 2)))
        True
        >>> is_perfect(monomial_algebra(2, [(0,), (1,)]))
        False

    """
    return linalg.rank_mod_p(algebra.frobenius_matrix(),
                             algebra.p) == algebra.dim


def surjective_frobenius_report(algebra):
    """
    Check that a surjective Frobenius is injective.

    Surjectivity is read from the rank and injectivity from the null space,
    independently. Algebras with a non surjective Frobenius pass trivially.
    """
    frob = algebra.frobenius_matrix()
    p = algebra.p
    surjective = linalg.rank_mod_p(frob, p) == algebra.dim
    injective = linalg.nullspace_mod_p(frob, p).shape[0] == 0
    report = Report('surjective frobenius', {'dim': algebra.dim,
                                             'surjective': surjective})
    report.check(injective or not surjective, {'names': algebra.names})
    return report
