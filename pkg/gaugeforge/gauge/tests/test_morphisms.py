"""
Tests for gauge morphisms, Hom modules, free covers and tensor products.
"""
from __future__ import absolute_import, division
from pytest import raises

from ...utils import TruncationOverflow, PreconditionError, random_state
from ...witt.chainring import ChainRing
from ...witt.fields import FiniteField
from ...witt.modules import module_tensor
from ..core import (free_gauge, zero_gauge, p_multiple_gauge, truncate_leq0,
                    validate_gauge, fingerprint, is_coeffective)
from ..morphisms import (GaugeMorphism, validate_morphism, identity, kernel,
                         cokernel, hom_count, enumerate_morphisms, isomorphic,
                         free_cover, tensor, random_gauge, random_chain)


def test_identity_morphism():
    "The identity is a valid isomorphism with trivial kernel and cokernel"
    G = p_multiple_gauge(ChainRing(2, 2))
    ident = identity(G)
    assert validate_morphism(ident).ok
    assert ident.is_isomorphism()
    ker, _ = kernel(ident)
    coker, _ = cokernel(ident)
    assert ker.is_zero() and coker.is_zero()


def test_hom_from_free_gauge_counts_elements():
    "Hom(W_n(i), M) has as many elements as M^-i"
    rng = random_state(1)
    for ring in [ChainRing(2, 1), ChainRing(2, 2), ChainRing(3, 1)]:
        for _ in range(3):
            M = random_gauge(ring, rng)
            for i in range(-2, 3):
                assert hom_count(free_gauge(ring, i), M) == \
                    M.component(-i).size


def test_enumerated_morphisms_are_valid():
    "Every enumerated morphism commutes with f and v"
    ring = ChainRing(2, 1)
    M = random_gauge(ring, random_state(2))
    N = random_gauge(ring, random_state(3))
    count = 0
    for alpha in enumerate_morphisms(M, N):
        assert validate_morphism(alpha).ok
        count += 1
    assert count == hom_count(M, N)


def test_enumeration_limit():
    "Enumerating a Hom set above the limit raises"
    ring = ChainRing(2, 2)
    G = free_gauge(ring, 0, 2)
    with raises(TruncationOverflow):
        list(enumerate_morphisms(G, G, limit=10))


def test_truncation_adjunction():
    "Hom(N, M_<=0) = Hom(N, M) for coeffective N"
    ring = ChainRing(2, 1)
    rng = random_state(5)
    coeffective = [free_gauge(ring, 0), free_gauge(ring, 1),
                   free_gauge(ring, 2, 2)]
    for _ in range(3):
        M = random_gauge(ring, rng)
        T = truncate_leq0(M)
        for N in coeffective:
            assert is_coeffective(N)
            assert hom_count(N, T) == hom_count(N, M)


def test_free_cover_surjective():
    "The free cover is a valid surjection with kernel of complementary length"
    rng = random_state(7)
    for ring in [ChainRing(2, 2), ChainRing(FiniteField(2, 2), 1)]:
        for _ in range(4):
            M = random_gauge(ring, rng)
            F, cover, degrees = free_cover(M)
            assert validate_gauge(F).ok
            assert validate_morphism(cover).ok
            coker, _ = cokernel(cover)
            assert coker.is_zero()
            ker, embedding = kernel(cover)
            assert validate_gauge(ker).ok
            assert validate_morphism(embedding).ok
            lo, hi = cover.window
            for r in range(lo, hi + 1):
                assert ker.component(r).length == \
                    F.component(r).length - M.component(r).length


def test_free_cover_of_free_gauge():
    "The free cover of a free gauge is an isomorphism"
    ring = ChainRing(2, 2)
    G = free_gauge(ring, -1, 2)
    _, cover, degrees = free_cover(G)
    assert degrees == [1, 1]
    assert cover.is_isomorphism()


def test_cover_of_p_multiple_not_injective():
    "N -> pN -> pN needs generators in degrees 0 and 2 and is not free"
    ring = ChainRing(2, 2)
    G = p_multiple_gauge(ring)
    _, cover, degrees = free_cover(G)
    assert degrees == [0, 2]
    assert not cover.is_isomorphism()


def test_isomorphic():
    "Isomorphism is detected through fingerprints and Hom sets"
    ring = ChainRing(2, 1)
    assert isomorphic(free_gauge(ring, 0), free_gauge(ring, 0)) is True
    assert isomorphic(free_gauge(ring, 0), free_gauge(ring, 1)) is False
    G = p_multiple_gauge(ChainRing(2, 2))
    wide = G.window(-1, 4)
    assert isomorphic(G, wide) is True
    assert fingerprint(G) == fingerprint(wide)


def test_tensor_of_twists():
    "k(i) tensor k(j) is k(i + j)"
    ring = ChainRing(2, 1)
    for i in range(-1, 2):
        for j in range(-1, 2):
            product = tensor(free_gauge(ring, i), free_gauge(ring, j))
            assert validate_gauge(product).ok
            assert isomorphic(product, free_gauge(ring, i + j)) is True


def test_tensor_unit():
    "Tensoring with W_n(0) on either side gives back the gauge"
    rng = random_state(11)
    for ring in [ChainRing(2, 1), ChainRing(2, 2)]:
        unit = free_gauge(ring, 0)
        for _ in range(3):
            M = random_gauge(ring, rng)
            for product in [tensor(M, unit), tensor(unit, M)]:
                assert validate_gauge(product).ok
                assert fingerprint(product) == fingerprint(M)


def test_tensor_ends():
    "The ends of a tensor product are the tensor products of the ends"
    rng = random_state(13)
    ring = ChainRing(2, 2)
    for _ in range(4):
        M = random_gauge(ring, rng)
        N = random_gauge(ring, rng)
        product = tensor(M, N)
        assert validate_gauge(product).ok
        low = module_tensor(M.minus_infinity, N.minus_infinity)
        high = module_tensor(M.plus_infinity, N.plus_infinity)
        assert product.minus_infinity.length == low.length
        assert product.plus_infinity.length == high.length


def test_tensor_context_mismatch():
    "Gauges over different rings cannot be tensored"
    with raises(PreconditionError):
        tensor(free_gauge(ChainRing(2, 1), 0), free_gauge(ChainRing(2, 2), 0))


def test_tensor_with_zero():
    "Tensoring with the zero gauge gives zero"
    ring = ChainRing(3, 1)
    M = random_chain(ring, random_state(0), -1, 1)
    assert tensor(zero_gauge(ring), M).is_zero()
    assert tensor(M, zero_gauge(ring)).is_zero()


def test_morphism_window_checks():
    "Morphism maps must fit the window"
    ring = ChainRing(2, 1)
    G = free_gauge(ring, 0)
    with raises(ValueError):
        GaugeMorphism(G, G, (0, 1), identity(G).maps)
