"""
Tests for Dieudonne modules attached to phi-gauges.
"""
from __future__ import absolute_import, division
from pytest import raises

from ...utils import PreconditionError, random_state
from ...witt.chainring import ChainRing
from ...witt.fields import FiniteField
from ...witt.modules import WnModule, SemilinearMap, scalar_map
from ..core import free_gauge, p_multiple_gauge, fingerprint, validate_gauge
from ..phi import PhiGauge, validate_phi_gauge
from ..dieudonne import (DieudonneModule, validate_dieudonne, to_dieudonne,
                         from_dieudonne, find_forgotten_pair,
                         random_dieudonne)


def identity_phi(gauge):
    "phi = sigma from the top component to the bottom one"
    return PhiGauge(gauge, SemilinearMap(
        gauge.ring.identity(gauge.plus_infinity.rank), gauge.plus_infinity,
        gauge.minus_infinity, 1))


def semilinear(module, x, twist):
    "Multiplication by x composed with sigma^twist"
    return SemilinearMap(scalar_map(module, x).matrix, module, module, twist)


def test_multiplicative_and_etale():
    "F = p sigma, V = sigma^-1 and F = sigma, V = p sigma^-1 round trip"
    ring = ChainRing(FiniteField(3, 2), 2)
    M = WnModule.free(ring, 1)
    for F, V in [(3, 1), (1, 3)]:
        D = DieudonneModule(M, semilinear(M, F, 1), semilinear(M, V, -1))
        assert validate_dieudonne(D).ok
        G = from_dieudonne(D)
        assert G.interval == (-1, 0)
        assert validate_phi_gauge(G).ok
        assert to_dieudonne(G).same_as(D)


def test_zero_module_round_trip():
    "The zero Dieudonne module comes from the zero phi-gauge"
    ring = ChainRing(2, 2)
    zero = WnModule.zero(ring)
    D = DieudonneModule(zero, SemilinearMap(ring.zeros(0, 0), zero, zero, 1),
                        SemilinearMap(ring.zeros(0, 0), zero, zero, -1))
    G = from_dieudonne(D)
    assert G.gauge.is_zero()
    assert to_dieudonne(G).same_as(D)


def test_weight_two():
    "N -> pN -> pN with phi = sigma has F = V = p and FV = p^2"
    ring = ChainRing(3, 3)
    G = identity_phi(p_multiple_gauge(ring))
    D = to_dieudonne(G)
    assert D.weight == 2
    assert validate_dieudonne(D).ok
    assert int(D.frobenius.matrix[0, 0, 0]) == 3
    assert int(D.verschiebung.matrix[0, 0, 0]) == 3


def test_bad_axioms():
    "F = V = 1 fails FV = p"
    ring = ChainRing(2, 2)
    M = WnModule.free(ring, 1)
    D = DieudonneModule(M, semilinear(M, 1, 1), semilinear(M, 1, -1))
    report = validate_dieudonne(D)
    assert not report.ok
    assert set(w['relation'] for w in report.witnesses) == {'FV', 'VF'}
    with raises(PreconditionError):
        from_dieudonne(D)


def test_preconditions():
    "Weight zero windows, non-bijective phi and weight two inputs are refused"
    ring = ChainRing(2, 2)
    with raises(PreconditionError):
        to_dieudonne(identity_phi(free_gauge(ring, 0)))
    gauge = p_multiple_gauge(ring)
    broken = PhiGauge(gauge, SemilinearMap(None, gauge.plus_infinity,
                                          gauge.minus_infinity, 1))
    with raises(PreconditionError):
        to_dieudonne(broken)
    with raises(PreconditionError):
        from_dieudonne(to_dieudonne(identity_phi(p_multiple_gauge(
            ChainRing(3, 3)))))
    with raises(ValueError):
        M = WnModule.free(ring, 1)
        DieudonneModule(M, semilinear(M, 2, -1), semilinear(M, 1, -1))


def test_forgotten_pair_weight_two():
    "In weight two distinct phi-gauges can share their Dieudonne module"
    ring = ChainRing(2, 1)
    pair = find_forgotten_pair(ring, 2)
    assert pair is not None
    first, second = pair
    assert validate_gauge(first.gauge).ok
    assert validate_gauge(second.gauge).ok
    assert to_dieudonne(first).same_as(to_dieudonne(second))
    assert fingerprint(first.gauge) != fingerprint(second.gauge)


def test_no_forgotten_pair_weight_one():
    "In weight one the Dieudonne module determines the phi-gauge"
    assert find_forgotten_pair(ChainRing(2, 1), 1) is None
    assert find_forgotten_pair(ChainRing(3, 1), 1) is None
    with raises(PreconditionError):
        find_forgotten_pair(ChainRing(2, 2))


def test_random_weight_one_round_trip():
    "Random weight one modules satisfy FV = VF = p and survive the round trip"
    rng = random_state(5)
    for field in [FiniteField(2), FiniteField(3), FiniteField(2, 2)]:
        ring = ChainRing(field, 2)
        for rank in [1, 2, 3]:
            D = random_dieudonne(ring, rank, rng)
            assert validate_dieudonne(D).ok
            G = from_dieudonne(D)
            assert validate_phi_gauge(G).ok
            assert to_dieudonne(G).same_as(D)
