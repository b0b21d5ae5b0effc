"""
Tests for virtual crystals, the standard construction and its inverse.
"""
from __future__ import absolute_import, division
import numpy as np
import pytest
from pytest import raises

from ...utils import PreconditionError, SchemaError, random_state
from ...witt.chainring import ChainRing
from ...witt.fields import FiniteField
from ...witt.modules import random_invertible, SemilinearMap
from ...witt.linalg import inverse
from ..core import free_gauge, tate_twist, p_multiple_gauge
from ..phi import validate_phi_gauge, phi_gauges_isomorphic, PhiGauge
from ..rigidity import is_free_W_gauge, quasi_rigid_lengths
from ..crystal import (VirtualCrystal, hodge_interval, standard_construction,
                       reconstruct_crystal, crystals_conjugate,
                       lattice_component, crystal_from_dict,
                       random_crystal)


@pytest.fixture
def swap_crystal():
    "phi = [[0, p], [1, 0]] sigma over W_4(F_2)"
    ring = ChainRing(2, 4)
    return VirtualCrystal(ring, ring.from_integers([[0, 2], [1, 0]]))


def test_hodge_interval_examples(swap_crystal):
    "Hodge intervals of the identity, a twist and the swap crystal"
    ring = ChainRing(3, 3)
    assert hodge_interval(VirtualCrystal(ring, ring.identity(2))) == (0, 0)
    twisted = VirtualCrystal(ring, ring.identity(1), scale=-2)
    assert hodge_interval(twisted) == (-2, -2)
    assert hodge_interval(swap_crystal) == (0, 1)


def test_singular_crystal():
    "A matrix singular at the working precision is rejected"
    ring = ChainRing(2, 3)
    with raises(PreconditionError):
        VirtualCrystal(ring, ring.from_integers([[1, 0], [0, 0]]))


def test_identity_crystal_gives_free_gauge():
    "The identity crystal of rank m gives W_n(0)^m with bijective phi"
    ring = ChainRing(FiniteField(2, 2), 3)
    G = standard_construction(VirtualCrystal(ring, ring.identity(2)), 2)
    assert G.gauge.same_as(free_gauge(ChainRing(FiniteField(2, 2), 2), 0, 2))
    assert validate_phi_gauge(G).ok


def test_twist_crystal_gives_twist():
    "phi = p^-i sigma on rank one gives W_n(i)"
    ring = ChainRing(5, 3)
    for i in range(-2, 3):
        C = VirtualCrystal(ring, ring.identity(1), scale=-i)
        G = standard_construction(C, 2)
        assert G.gauge.same_as(free_gauge(ChainRing(5, 2), i))


def test_swap_crystal_components(swap_crystal):
    "M^1 of the swap crystal is pZ + Z, matching a brute force search"
    G, basis = standard_construction(swap_crystal, 2, certificate=True)
    ring = G.ring
    assert G.interval == (0, 1)
    assert validate_phi_gauge(G).ok
    npt_f = G.gauge.f(0).matrix[..., 0]
    assert sorted(np.diag(npt_f).tolist()) == [1, 2]
    # lattice vectors of M^1: basis * diag(p^c) * z
    depth = np.diag(G.gauge.v(0).matrix[..., 0])
    members = set()
    for z0 in range(4):
        for z1 in range(4):
            y = ring.from_integers([[depth[0]*z0], [depth[1]*z1]])[:, 0]
            members.add(tuple(ring.matvec(basis, y).reshape(-1)))
    assert members == lattice_component(swap_crystal, 1, 2)
    assert lattice_component(swap_crystal, 0, 2) == set(
        (a, b) for a in range(4) for b in range(4))


def test_precision_contract(swap_crystal):
    "The standard construction refuses a precision below n + (b - a) + 1"
    standard_construction(swap_crystal, 2)
    with raises(PreconditionError):
        standard_construction(swap_crystal, 3)


def test_standard_construction_free():
    "Standard constructions are free gauges with bijective phi"
    rng = random_state(0)
    for field in [FiniteField(2), FiniteField(3), FiniteField(2, 2)]:
        for _ in range(3):
            C = random_crystal(field, 6, 2, rng)
            G = standard_construction(C, 2)
            assert validate_phi_gauge(G).ok
            assert is_free_W_gauge(G.gauge)
            a, b = hodge_interval(C)
            assert G.interval == (a, b)


def test_rank_two_mod_p_length(swap_crystal):
    "The rigid gauge of a rank two crystal modulo p has constant length two"
    G = standard_construction(swap_crystal, 1)
    report = quasi_rigid_lengths(G.gauge)
    assert report.details['length'] == 2


def test_twist_compatibility():
    "Multiplying phi by p^i twists the gauge by -i"
    rng = random_state(1)
    C = random_crystal(FiniteField(3), 6, 2, rng)
    base = standard_construction(C, 2)
    for i in [-2, 1, 3]:
        shifted = standard_construction(C.multiplied(i), 2)
        assert shifted.gauge.same_as(tate_twist(base.gauge, -i))


def test_reconstruct_round_trip_certificate():
    "Reconstructing a crystal gives back a conjugate matrix"
    rng = random_state(2)
    for field in [FiniteField(2), FiniteField(3), FiniteField(2, 2)]:
        for _ in range(3):
            C = random_crystal(field, 6, 2, rng)
            G, basis = standard_construction(C, 2, certificate=True)
            rebuilt, twist, alpha = reconstruct_crystal(G, certificate=True)
            assert twist == hodge_interval(C)[0]
            ring = G.ring
            h = ring.matmul(basis, alpha)
            report = crystals_conjugate(C, rebuilt, 2, certificate=h)
            assert report.ok
            assert report.details['method'] == 'certificate'


def test_reconstruct_free_gauge_twist():
    "W_n(i) with phi = sigma reconstructs to p^-i sigma"
    ring = ChainRing(3, 2)
    for i in range(-2, 3):
        G = standard_construction(
            VirtualCrystal(ChainRing(3, 4), ChainRing(3, 4).identity(1),
                           scale=-i), 2)
        crystal, twist = reconstruct_crystal(G)
        assert twist == -i
        assert hodge_interval(crystal) == (-i, -i)
        assert crystal.matrix[0, 0, 0] % 3 == 1
        assert G.gauge.same_as(free_gauge(ring, i))


def test_reconstruct_rejects_non_free():
    "A phi-gauge that is not free cannot be reconstructed"
    gauge = p_multiple_gauge(ChainRing(2, 2))
    phi = SemilinearMap(gauge.ring.identity(1), gauge.plus_infinity,
                        gauge.minus_infinity, 1)
    with raises(PreconditionError):
        reconstruct_crystal(PhiGauge(gauge, phi))


def test_round_trip_phi_gauge():
    "standard_construction(reconstruct(G)) is isomorphic to G"
    rng = random_state(3)
    for _ in range(3):
        C = random_crystal(FiniteField(2), 4, 2, rng, top=1)
        G = standard_construction(C, 1)
        rebuilt, _ = reconstruct_crystal(G)
        again = standard_construction(rebuilt, 1)
        result, witness = phi_gauges_isomorphic(G, again)
        assert result is True
        assert witness.is_isomorphism()


def test_conjugacy_exhaustive():
    "Over F_2 conjugate crystals are found by exhaustive search"
    rng = random_state(4)
    ring = ChainRing(2, 4)
    C = VirtualCrystal(ring, ring.from_integers([[0, 2], [1, 0]]))
    h = random_invertible(ring, 2, rng)
    conj = ring.matmul(inverse(ring, h), ring.matmul(C.matrix, ring.sigma(h)))
    D = VirtualCrystal(ring, conj)
    report = crystals_conjugate(C, D, 2)
    assert report.ok
    assert report.details['method'] == 'exhaustive'


def test_conjugacy_lifting():
    "Over F_3 conjugate crystals are found by lifting solutions mod p"
    rng = random_state(5)
    ring = ChainRing(3, 4)
    C = VirtualCrystal(ring, ring.from_integers([[0, 3], [1, 0]]))
    h = random_invertible(ring, 2, rng)
    conj = ring.matmul(inverse(ring, h), ring.matmul(C.matrix, ring.sigma(h)))
    report = crystals_conjugate(C, VirtualCrystal(ring, conj), 2)
    assert report.ok
    assert report.details['method'] == 'lifting'


def test_conjugacy_search_limit():
    "Too many solutions modulo p leave the search undecided with a warning"
    ring = ChainRing(3, 3)
    C = VirtualCrystal(ring, ring.identity(2))
    with pytest.warns(RuntimeWarning):
        report = crystals_conjugate(C, C, 2, limit=10)
    assert report.status == 'undecided'


def test_not_conjugate():
    "Different elementary divisors rule out conjugacy"
    ring = ChainRing(3, 4)
    C = VirtualCrystal(ring, ring.identity(2))
    D = VirtualCrystal(ring, ring.from_integers([[1, 0], [0, 3]]))
    report = crystals_conjugate(C, D, 2)
    assert report.status == 'violated'


def test_crystal_json():
    "Crystals are read from their JSON form"
    ring = ChainRing(FiniteField(2, 2), 4)
    C = VirtualCrystal(ring, ring.from_integers([[0, 2], [1, 0]]), scale=1)
    back = crystal_from_dict(C.to_dict())
    assert back.scale == 1
    np.testing.assert_array_equal(back.matrix, C.matrix)
    with raises(SchemaError):
        crystal_from_dict({'rank': 2, 'phi': [[1, 0], [0, 1]]})
    plain = crystal_from_dict({'context': {'p': 3}, 'rank': 1,
                               'precision': 3, 'phi': [[1]]})
    assert hodge_interval(plain) == (0, 0)
