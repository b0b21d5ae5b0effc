"""
Finitely generated modules over W_n(F_q) and (semi)linear maps between them.

Every module is kept in canonical form ⊕ W_{e_i}(F_q) with e_1 >= ... >= e_r,
so two modules are isomorphic exactly when their divisor lists agree. An
element is an int64 array of shape (r, d) whose i-th row is reduced modulo
p^(e_i). A map is given by the matrix of images of the generators and a
Frobenius twist s, acting as x -> A sigma^s(x).

**Modules and maps**

* :class:`~gaugeforge.witt.modules.WnModule`
* :class:`~gaugeforge.witt.modules.SemilinearMap`
* :func:`~gaugeforge.witt.modules.direct_sum`
* :func:`~gaugeforge.witt.modules.zero_map`
* :func:`~gaugeforge.witt.modules.identity_map`
* :func:`~gaugeforge.witt.modules.scalar_map`
* :func:`~gaugeforge.witt.modules.module_tensor`

**Constructions**

* :func:`~gaugeforge.witt.modules.kernel`
* :func:`~gaugeforge.witt.modules.image`
* :func:`~gaugeforge.witt.modules.cokernel`
* :func:`~gaugeforge.witt.modules.submodule`
* :func:`~gaugeforge.witt.modules.smith_decompose`
* :func:`~gaugeforge.witt.modules.span_contains`
* :func:`~gaugeforge.witt.modules.solve`

**Enumeration oracles**

* :func:`~gaugeforge.witt.modules.enumerate_kernel`
* :func:`~gaugeforge.witt.modules.enumerate_image`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import itertools
import logging

import numpy as np

from .. import constants
from . import linalg

log = logging.getLogger(__name__)


def transpose(matrix):
    "Swap the row and column axes of a (rows, cols, d) matrix."
    return np.transpose(np.asarray(matrix, dtype=np.int64), (1, 0, 2))


class WnModule(object):
    """
    The module ⊕_i W_{e_i}(F_q) over a chain ring.

    Parameters:

    * ring : ChainRing
        The coefficient ring W_n(F_q).
    * divisors : list of int
        Exponents 1 <= e_i <= n. They are sorted decreasingly.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 2)
        >>> M = WnModule(R, [1, 2])
        >>> M.divisors
        (2, 1)
        >>> M.length
        3
        >>> M.size
        8

    """

    def __init__(self, ring, divisors):
        divisors = tuple(sorted((int(e) for e in divisors), reverse=True))
        for e in divisors:
            assert 1 <= e <= ring.n, \
                "Invalid divisor {}. Must be in [1, {}].".format(e, ring.n)
        self.ring = ring
        self.divisors = divisors

    @classmethod
    def free(cls, ring, rank):
        "The free module W_n^rank."
        return cls(ring, [ring.n]*rank)

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @property
    def rank(self):
        "Number of cyclic summands (the number of generators)."
        return len(self.divisors)

    @property
    def length(self):
        "The W-length sum(e_i)."
        return sum(self.divisors)

    @property
    def size(self):
        "Number of elements, q^length."
        return self.ring.field.q**self.length

    def is_zero(self):
        return self.rank == 0

    def is_free(self):
        "True if every summand is W_n."
        return all(e == self.ring.n for e in self.divisors)

    def relations(self):
        "The diagonal matrix diag(p^e_i) whose columns present the module."
        return self.ring.diagonal([self.ring.p_power(e)
                                   for e in self.divisors])

    def reduce(self, x):
        "Canonical representative of an element (or matrix with rows here)."
        x = np.array(x, dtype=np.int64) % self.ring.modulus
        for i, e in enumerate(self.divisors):
            x[i] = x[i] % self.ring.p**e
        return x

    def zero_element(self):
        return np.zeros((self.rank, self.ring.d), dtype=np.int64)

    def generator(self, i):
        x = self.zero_element()
        x[i, 0] = 1
        return x

    def is_zero_element(self, x):
        return not self.reduce(x).any()

    def elements(self):
        "Iterate over all elements (enumeration oracle)."
        assert self.size <= constants.MAX_ENUMERATION, \
            "Module of size {} is too large to enumerate".format(self.size)
        pieces = [list(self.ring.elements(e)) for e in self.divisors]
        for combo in itertools.product(*pieces):
            if combo:
                yield np.array(combo, dtype=np.int64)
            else:
                yield self.zero_element()

    def random_element(self, rng):
        x = self.zero_element()
        for i, e in enumerate(self.divisors):
            x[i] = self.ring.random(rng, e)
        return x

    def key(self, x):
        "A hashable form of an element."
        return tuple(int(c) for c in self.reduce(x).ravel())

    def isomorphic(self, other):
        return self.ring == other.ring and self.divisors == other.divisors

    def __eq__(self, other):
        return isinstance(other, WnModule) and self.isomorphic(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring, self.divisors))

    def __repr__(self):
        return 'WnModule({}, {})'.format(self.ring, list(self.divisors))

    def to_dict(self):
        return {'context': self.ring.context, 'divisors': list(self.divisors)}


class SemilinearMap(object):
    """
    A map x -> A sigma^s(x) between two modules.

    Parameters:

    * matrix : array (codomain.rank, domain.rank, d)
        Column j is the image of the j-th generator of the domain.
    * domain, codomain : WnModule
    * twist : int
        The Frobenius power s. Zero gives a linear map.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 2)
        >>> M = WnModule.free(R, 1)
        >>> p = scalar_map(M, 2)
        >>> p.compose(p).is_zero()
        True
        >>> kernel(p)[0].divisors
        (1,)

    """

    def __init__(self, matrix, domain, codomain, twist=0):
        assert domain.ring == codomain.ring, "Modules over different rings"
        ring = domain.ring
        if matrix is None or np.size(matrix) == 0:
            matrix = ring.zeros(codomain.rank, domain.rank)
        matrix = np.asarray(matrix, dtype=np.int64)
        assert matrix.shape == (codomain.rank, domain.rank, ring.d), \
            "Matrix of shape {} does not fit {} -> {}".format(
                matrix.shape, domain, codomain)
        self.ring = ring
        self.domain = domain
        self.codomain = codomain
        self.twist = int(twist)
        self.matrix = codomain.reduce(matrix)

    def is_well_defined(self):
        """
        True if p^e_j times column j vanishes in the codomain for every j.
        """
        ring = self.ring
        for j, e in enumerate(self.domain.divisors):
            col = ring.scale(ring.p_power(e), self.matrix[:, j])
            if not self.codomain.is_zero_element(col):
                return False
        return True

    def apply(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.domain.rank == 0:
            return self.codomain.zero_element()
        y = self.ring.matvec(self.matrix, self.ring.sigma(x, self.twist))
        return self.codomain.reduce(y)

    def compose(self, other):
        "The composite self ∘ other (other is applied first)."
        assert other.codomain == self.domain, \
            "Cannot compose {} after {}".format(self, other)
        ring = self.ring
        inner = ring.sigma(other.matrix, self.twist)
        matrix = ring.matmul(self.matrix, inner)
        return SemilinearMap(matrix, other.domain, self.codomain,
                             self.twist + other.twist)

    def __add__(self, other):
        assert (self.domain == other.domain and
                self.codomain == other.codomain and
                self.twist == other.twist), "Incompatible maps"
        return SemilinearMap(self.matrix + other.matrix, self.domain,
                             self.codomain, self.twist)

    def __sub__(self, other):
        return self + other.scaled(self.ring.from_integer(-1))

    def scaled(self, x):
        "The map multiplied by the ring element x on the left."
        return SemilinearMap(self.ring.scale(x, self.matrix), self.domain,
                             self.codomain, self.twist)

    def untwisted(self):
        "The linear map with the same matrix."
        return SemilinearMap(self.matrix, self.domain, self.codomain, 0)

    def is_zero(self):
        return not self.matrix.any()

    def equals(self, other):
        return (self.domain == other.domain and
                self.codomain == other.codomain and
                self.twist == other.twist and
                np.array_equal(self.matrix, other.matrix))

    def is_injective(self):
        return kernel(self)[0].is_zero()

    def is_surjective(self):
        return cokernel(self)[0].is_zero()

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def inverse(self):
        """
        The inverse of a bijective map (twist -s).

        Raises ``ValueError`` if the map is not bijective.
        """
        if self.domain != self.codomain or not self.is_bijective():
            raise ValueError("Map is not bijective")
        ring = self.ring
        # column i solves A sigma^s(x) = e_i
        columns = []
        for i in range(self.codomain.rank):
            y = solve(self.untwisted(), self.codomain.generator(i))
            columns.append(ring.sigma(y, -self.twist))
        matrix = np.stack(columns, axis=1) if columns else None
        return SemilinearMap(matrix, self.codomain, self.domain, -self.twist)

    def __repr__(self):
        return 'SemilinearMap({} -> {}, twist={})'.format(
            list(self.domain.divisors), list(self.codomain.divisors),
            self.twist)

    def to_dict(self):
        return {'domain': list(self.domain.divisors),
                'codomain': list(self.codomain.divisors),
                'twist': self.twist,
                'matrix': self.matrix.tolist()}


def zero_map(domain, codomain):
    return SemilinearMap(None, domain, codomain)


def identity_map(module):
    return SemilinearMap(module.ring.identity(module.rank), module, module)


def scalar_map(module, x, codomain=None):
    """
    Multiplication by the ring element x (an int or a coordinate vector).

    If *codomain* is given, the generators of *module* are sent to x times
    the generators of *codomain* (both must have the same rank).
    """
    ring = module.ring
    if not isinstance(x, np.ndarray):
        x = ring.from_integer(x)
    if codomain is None:
        codomain = module
    assert codomain.rank == module.rank, "Ranks differ"
    return SemilinearMap(ring.scalar_matrix(module.rank, x), module, codomain)


def direct_sum(*modules):
    """
    The direct sum of modules with its injections and projections.

    Returns:

    * total : WnModule
    * injections : list of SemilinearMap
    * projections : list of SemilinearMap

    """
    assert modules, "Need at least one module"
    ring = modules[0].ring
    labels = []
    for k, module in enumerate(modules):
        for i, e in enumerate(module.divisors):
            labels.append((e, k, i))
    # canonical order: decreasing divisor, stable on the input order
    order = sorted(range(len(labels)), key=lambda t: -labels[t][0])
    total = WnModule(ring, [labels[t][0] for t in order])
    position = {}
    for row, t in enumerate(order):
        position[labels[t][1:]] = row
    injections, projections = [], []
    for k, module in enumerate(modules):
        inj = ring.zeros(total.rank, module.rank)
        proj = ring.zeros(module.rank, total.rank)
        for i in range(module.rank):
            row = position[(k, i)]
            inj[row, i, 0] = 1
            proj[i, row, 0] = 1
        injections.append(SemilinearMap(inj, module, total))
        projections.append(SemilinearMap(proj, total, module))
    return total, injections, projections


def block_map(blocks, domains, codomains):
    """
    The map between direct sums given by a grid of blocks.

    *blocks[i][j]* is a map domains[j] -> codomains[i] or None for zero.
    All blocks must share one twist.
    """
    source, source_inj, source_proj = direct_sum(*domains)
    target, target_inj, target_proj = direct_sum(*codomains)
    twist = None
    total = zero_map(source, target)
    for i, row in enumerate(blocks):
        for j, block in enumerate(row):
            if block is None:
                continue
            if twist is None:
                twist = block.twist
                total = SemilinearMap(None, source, target, twist)
            assert block.twist == twist, "Blocks with different twists"
            # inj_i ∘ block ∘ proj_j with linear injections/projections
            piece = target_inj[i].compose(block).compose(source_proj[j])
            total = total + piece
    return total


def submodule(module, generators):
    """
    The submodule generated by the columns of *generators*.

    Returns:

    * sub : WnModule
        The submodule in canonical form.
    * embedding : SemilinearMap
        The inclusion sub -> module.

    """
    ring = module.ring
    if generators is not None:
        generators = np.asarray(generators, dtype=np.int64)
    if generators is None or generators.ndim != 3 or \
            generators.shape[1] == 0 or module.rank == 0:
        sub = WnModule.zero(ring)
        return sub, zero_map(sub, module)
    count = generators.shape[1]
    stacked = np.concatenate([generators, module.relations()], axis=1)
    relations = linalg.kernel_generators(ring, stacked)[:count]
    divisors, _, section = linalg.quotient(ring, relations, count)
    sub = WnModule(ring, divisors)
    embedding = SemilinearMap(ring.matmul(generators, section), sub, module)
    return sub, embedding


def kernel(morphism):
    """
    The kernel of a (semi)linear map.

    Semilinear maps are untwisted first, the kernel of x -> A sigma^s(x) is
    sigma^(-s) of the kernel of A.

    Returns:

    * ker : WnModule
    * embedding : SemilinearMap
        Linear inclusion ker -> domain.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 2)
        >>> M = WnModule.free(R, 1)
        >>> ker, emb = kernel(scalar_map(M, 2))
        >>> ker.divisors, int(emb.matrix[0, 0, 0])
        ((1,), 2)

    """
    ring = morphism.ring
    domain, codomain = morphism.domain, morphism.codomain
    if domain.rank == 0:
        return submodule(domain, None)
    stacked = np.concatenate([morphism.matrix, codomain.relations()], axis=1)
    generators = linalg.kernel_generators(ring, stacked)[:domain.rank]
    # the columns must also respect the relations of the domain
    ker, embedding = submodule(domain, generators)
    if morphism.twist:
        embedding = SemilinearMap(ring.sigma(embedding.matrix,
                                             -morphism.twist),
                                  ker, domain)
    return ker, embedding


def image(morphism):
    """
    The image of a (semi)linear map with its inclusion into the codomain.
    """
    return submodule(morphism.codomain, morphism.matrix)


def cokernel(morphism):
    """
    The cokernel of a (semi)linear map.

    Returns:

    * coker : WnModule
    * projection : SemilinearMap
        The quotient map codomain -> coker.
    * section : array
        Lifts to the codomain of the generators of coker (as columns).

    """
    ring = morphism.ring
    codomain = morphism.codomain
    if codomain.rank == 0:
        coker = WnModule.zero(ring)
        return coker, zero_map(codomain, coker), ring.zeros(0, 0)
    stacked = np.concatenate([morphism.matrix, codomain.relations()], axis=1)
    divisors, projection, section = linalg.quotient(ring, stacked,
                                                    codomain.rank)
    coker = WnModule(ring, divisors)
    return coker, SemilinearMap(projection, codomain, coker), section


def quotient_by(module, generators):
    """
    The quotient of a module by the submodule spanned by *generators*.

    Returns the same triple as :func:`~gaugeforge.witt.modules.cokernel`.
    """
    ring = module.ring
    generators = np.asarray(generators, dtype=np.int64)
    if generators.ndim != 3 or generators.shape[1] == 0:
        generators = ring.zeros(module.rank, 0)
    sub = WnModule.free(ring, generators.shape[1])
    return cokernel(SemilinearMap(generators, sub, module))


def smith_decompose(ring, matrix):
    """
    Elementary divisors p^v of a matrix (0 for the missing ones).

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 2)
        >>> smith_decompose(R, R.from_integers([[1, 0], [0, 2]]))
        [1, 2]
        >>> smith_decompose(R, R.from_integers([[2, 0], [0, 0]]))
        [2, 0]

    """
    matrix = np.asarray(matrix, dtype=np.int64)
    size = min(matrix.shape[:2])
    _, vals, _, _ = linalg.smith(ring, matrix)
    return [ring.p**v for v in vals] + [0]*(size - len(vals))


def _span_rows(module, generators):
    generators = np.asarray(generators, dtype=np.int64)
    if generators.ndim != 3:
        generators = module.ring.zeros(module.rank, 0)
    stacked = np.concatenate([generators, module.relations()], axis=1)
    return transpose(stacked)


def span_contains(module, generators, elements):
    """
    True if the columns of *elements* lie in the span of *generators*.
    """
    ring = module.ring
    if module.rank == 0:
        return True
    base = _span_rows(module, generators)
    both = np.concatenate([base, transpose(elements)], axis=0)
    return linalg.same_row_span(ring, base, both)


def same_span(module, first, second):
    "True if two generator matrices span the same submodule."
    return (span_contains(module, first, second) and
            span_contains(module, second, first))


def solve(morphism, target):
    """
    An element x with A x = target in the codomain (the twist is ignored).

    Raises ``ValueError`` if *target* is not in the image.
    """
    ring = morphism.ring
    domain, codomain = morphism.domain, morphism.codomain
    target = codomain.reduce(target)
    stacked = np.concatenate([morphism.matrix, codomain.relations()], axis=1)
    u, vals, v, _ = linalg.smith(ring, stacked)
    y = ring.matvec(u, target)
    z = np.zeros((stacked.shape[1], ring.d), dtype=np.int64)
    for i in range(y.shape[0]):
        if i < len(vals):
            if ring.valuation(y[i]) < vals[i]:
                raise ValueError("Element is not in the image")
            z[i] = ring.divide_p(y[i], vals[i])
        elif not ring.is_zero(y[i]):
            raise ValueError("Element is not in the image")
    x = ring.matvec(v, z)[:domain.rank]
    return domain.reduce(x)


def enumerate_kernel(morphism):
    "All elements of the kernel, found by brute force."
    return [x for x in morphism.domain.elements()
            if morphism.codomain.is_zero_element(morphism.apply(x))]


def enumerate_image(morphism):
    "The set of keys of all image elements, found by brute force."
    codomain = morphism.codomain
    return set(codomain.key(morphism.apply(x))
               for x in morphism.domain.elements())


def random_map(domain, codomain, rng, twist=0):
    """
    A random well defined map domain -> codomain.

    Entry (i, j) is drawn from p^max(f_i - e_j, 0) W_n so that the image of
    the j-th generator is killed by p^e_j.
    """
    ring = domain.ring
    matrix = ring.zeros(codomain.rank, domain.rank)
    for i, f in enumerate(codomain.divisors):
        for j, e in enumerate(domain.divisors):
            shift = max(f - e, 0)
            entry = ring.random(rng)
            matrix[i, j] = ring.mul(ring.p_power(shift), entry)
    return SemilinearMap(matrix, domain, codomain, twist)


def random_invertible(ring, size, rng):
    "A random invertible matrix, product of unit triangular factors."
    lower = ring.identity(size)
    upper = ring.identity(size)
    for i in range(size):
        for j in range(size):
            if i > j:
                lower[i, j] = ring.random(rng)
            elif i < j:
                upper[i, j] = ring.random(rng)
    diagonal = ring.identity(size)
    for i in range(size):
        unit = ring.random(rng)
        while not ring.is_unit(unit):
            unit = ring.random(rng)
        diagonal[i, i] = unit
    return ring.matmul(ring.matmul(lower, diagonal), upper)


def module_tensor(first, second):
    """
    The tensor product over W_n, ⊕ W_min(e_i, f_j).

    >>> from gaugeforge.witt.chainring import ChainRing
    >>> R = ChainRing(2, 2)
    >>> module_tensor(WnModule(R, [2, 1]), WnModule(R, [1])).divisors
    (1, 1)

    """
    return WnModule(first.ring, [min(e, f) for e in first.divisors
                                 for f in second.divisors])
