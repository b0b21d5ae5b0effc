"""
Tests for modules in canonical form and their (semi)linear maps.
"""
from __future__ import absolute_import, division
import numpy as np
import numpy.testing as npt
from pytest import raises

from ..fields import FiniteField
from ..chainring import ChainRing
from ..modules import (WnModule, SemilinearMap, kernel, image, cokernel,
                       submodule, smith_decompose, direct_sum, scalar_map,
                       identity_map, zero_map, span_contains, same_span,
                       solve, enumerate_kernel, enumerate_image, random_map,
                       random_invertible, block_map, quotient_by)


def _modules(ring):
    "All modules of rank <= 2 over a ring."
    result = [WnModule.zero(ring)]
    for e in range(1, ring.n + 1):
        result.append(WnModule(ring, [e]))
        for f in range(1, e + 1):
            result.append(WnModule(ring, [e, f]))
    return result


def test_multiplication_by_p():
    "p on W_2(F_2) has kernel, image and cokernel W_1"
    R = ChainRing(2, 2)
    M = WnModule.free(R, 1)
    p = scalar_map(M, 2)
    assert kernel(p)[0].divisors == (1,)
    assert image(p)[0].divisors == (1,)
    assert cokernel(p)[0].divisors == (1,)
    assert len(enumerate_kernel(p)) == 2
    assert len(enumerate_image(p)) == 2


def test_identity_map():
    "The identity has zero kernel and cokernel"
    R = ChainRing(FiniteField(2, 2), 2)
    M = WnModule(R, [2, 1])
    ident = identity_map(M)
    assert kernel(ident)[0].is_zero()
    assert cokernel(ident)[0].is_zero()
    assert ident.is_bijective()


def test_diagonal_example():
    "diag(1, p) over W_2 has divisors (1, p) and cokernel W_1"
    R = ChainRing(2, 2)
    M = WnModule.free(R, 2)
    a = SemilinearMap(R.from_integers([[1, 0], [0, 2]]), M, M)
    assert smith_decompose(R, a.matrix) == [1, 2]
    assert cokernel(a)[0].divisors == (1,)


def test_rank_nullity_and_oracle():
    "Kernel and image agree with enumeration and their lengths add up"
    rng = np.random.RandomState(0)
    for field, n in [(FiniteField(2), 2), (FiniteField(3), 2),
                     (FiniteField(2), 3)]:
        R = ChainRing(field, n)
        modules = _modules(R)
        for _ in range(30):
            dom = modules[rng.randint(len(modules))]
            cod = modules[rng.randint(len(modules))]
            if dom.size*max(cod.size, 1) > 5000:
                continue
            a = random_map(dom, cod, rng)
            assert a.is_well_defined()
            ker, emb = kernel(a)
            im, inc = image(a)
            coker, proj, _ = cokernel(a)
            assert ker.length + im.length == dom.length
            assert im.length + coker.length == cod.length
            assert len(enumerate_kernel(a)) == ker.size
            assert len(enumerate_image(a)) == im.size
            assert emb.is_injective() and inc.is_injective()
            assert a.compose(emb).is_zero()
            assert proj.compose(a).is_zero()
            assert proj.is_surjective()


def test_kernel_of_zero_domain():
    "Maps out of the zero module have zero kernel"
    R = ChainRing(2, 2)
    Z = WnModule.zero(R)
    for cod in [Z, WnModule.free(R, 2), WnModule(R, [2, 1])]:
        ker, emb = kernel(zero_map(Z, cod))
        assert ker.is_zero()
        assert emb.domain == ker and emb.codomain == Z
        assert zero_map(Z, cod).is_injective()
    sub, emb = submodule(WnModule.free(R, 1), None)
    assert sub.is_zero()


def test_semilinear_kernel():
    "The kernel of a twisted map is sigma^-s of the linear kernel"
    rng = np.random.RandomState(1)
    R = ChainRing(FiniteField(2, 2), 2)
    M = WnModule(R, [2, 1])
    for _ in range(10):
        a = random_map(M, M, rng, twist=1)
        ker, emb = kernel(a)
        assert a.compose(emb).is_zero()
        assert len(enumerate_kernel(a)) == ker.size
        assert image(a)[0] == image(a.untwisted())[0]


def test_composition_law():
    "Twists add and the matrix is A sigma^s(B)"
    rng = np.random.RandomState(2)
    R = ChainRing(FiniteField(3, 2), 2)
    M = WnModule.free(R, 2)
    a = random_map(M, M, rng, twist=1)
    b = random_map(M, M, rng, twist=1)
    ab = a.compose(b)
    assert ab.twist == 2
    for _ in range(5):
        x = M.random_element(rng)
        npt.assert_array_equal(ab.apply(x), a.apply(b.apply(x)))


def test_inverse_map():
    "Inverting a bijective semilinear map"
    rng = np.random.RandomState(3)
    R = ChainRing(FiniteField(2, 2), 3)
    M = WnModule.free(R, 2)
    a = SemilinearMap(random_invertible(R, 2, rng), M, M, twist=1)
    inv = a.inverse()
    assert inv.twist == -1
    for _ in range(5):
        x = M.random_element(rng)
        npt.assert_array_equal(inv.apply(a.apply(x)), x)
    with raises(ValueError):
        scalar_map(M, 2).inverse()


def test_smith_decompose_invariant():
    "Elementary divisors do not change under unimodular changes"
    rng = np.random.RandomState(4)
    R = ChainRing(2, 3)
    for _ in range(10):
        a = rng.randint(0, 8, size=(3, 3, 1))
        a[:, 0] = R.scale(R.p_power(1), a[:, 0])
        u = random_invertible(R, 3, rng)
        v = random_invertible(R, 3, rng)
        assert smith_decompose(R, a) == \
            smith_decompose(R, R.matmul(R.matmul(u, a), v))


def test_direct_sum():
    "Injections and projections of a direct sum"
    R = ChainRing(2, 2)
    A = WnModule(R, [1])
    B = WnModule(R, [2])
    total, inj, proj = direct_sum(A, B)
    assert total.divisors == (2, 1)
    for i in range(2):
        for j in range(2):
            composite = proj[i].compose(inj[j])
            if i == j:
                assert composite.equals(identity_map([A, B][i]))
            else:
                assert composite.is_zero()
    pa = scalar_map(A, 1)
    block = block_map([[pa, None], [None, scalar_map(B, 2)]], [A, B], [A, B])
    assert cokernel(block)[0].divisors == (1,)


def test_submodules():
    "Span containment and equality"
    R = ChainRing(2, 2)
    M = WnModule(R, [2, 1])
    gens = R.from_integers([[2], [1]])
    sub, emb = submodule(M, gens)
    assert sub.divisors == (1,)
    assert span_contains(M, gens, R.zeros(2, 1))
    assert span_contains(M, gens, R.from_integers([[2], [1]]))
    assert not span_contains(M, gens, R.from_integers([[1], [0]]))
    assert same_span(M, gens, R.from_integers([[2], [3]]))
    coker, proj, _ = quotient_by(M, gens)
    assert coker.divisors == (2,)


def test_solve():
    "Preimages of image elements"
    rng = np.random.RandomState(5)
    R = ChainRing(3, 2)
    M = WnModule(R, [2, 1])
    for _ in range(10):
        a = random_map(M, M, rng)
        x = M.random_element(rng)
        y = a.apply(x)
        z = solve(a, y)
        npt.assert_array_equal(a.apply(z), y)
    with raises(ValueError):
        solve(zero_map(M, M), M.generator(0))


def test_module_validation():
    "Divisors outside [1, n] are rejected"
    R = ChainRing(2, 2)
    with raises(AssertionError):
        WnModule(R, [3])
    with raises(AssertionError):
        WnModule(R, [0])
    assert WnModule(R, [1, 2]) == WnModule(R, [2, 1])
