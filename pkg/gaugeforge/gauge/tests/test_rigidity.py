"""
Tests for strictness, quasi-rigidity and the freeness deciders.
"""
from __future__ import absolute_import, division
import itertools

from pytest import raises

from ...utils import PreconditionError, random_state
from ...witt.chainring import ChainRing
from ...witt.fields import FiniteField
from ...witt.modules import WnModule, scalar_map, zero_map
from ..core import (Gauge, free_gauge, zero_gauge, p_multiple_gauge,
                    direct_sum, validate_gauge)
from ..morphisms import random_chain
from ..rigidity import (is_strict, is_quasi_rigid, is_rigid,
                        quasi_rigid_lengths, quotient_criterion,
                        dual_quotient_criterion, is_free_k_gauge,
                        is_free_W_gauge, freeness_report, free_decomposition,
                        free_sum, free_component_gauges)


def vanishing_above_zero():
    "The k-gauge with M^r = k for r <= 0 and 0 above"
    ring = ChainRing(2, 1)
    k = WnModule.free(ring, 1)
    zero = WnModule.zero(ring)
    return Gauge(ring, (0, 1), [k, zero], [zero_map(k, zero)],
                 [zero_map(zero, k)])


def free_chain_gauges(ring):
    "All gauges over W_2(F_2) with free components of total length <= 4"
    module = WnModule.free(ring, 1)
    yield free_gauge(ring, 0)
    yield free_gauge(ring, 0, 2)
    yield free_gauge(ring, 1, 2)
    steps = [(1, 2), (3, 2), (2, 1), (2, 3)]
    for f, v in steps:
        yield Gauge(ring, (0, 1), [module, module],
                    [scalar_map(module, f)], [scalar_map(module, v)])


def test_k0_rigid():
    "k(0) and the zero gauge are rigid"
    ring = ChainRing(2, 1)
    assert is_rigid(free_gauge(ring, 0))
    assert is_rigid(zero_gauge(ring))


def test_p_multiple_mod_p_not_rigid():
    "N -> pN -> pN modulo p is quasi-rigid but not strict"
    G = p_multiple_gauge(ChainRing(2, 2)).reduce_mod_p()
    assert not is_strict(G)
    assert is_quasi_rigid(G)
    assert not is_rigid(G)


def test_rigidity_needs_k():
    "Rigidity over W_2 is a precondition violation"
    G = free_gauge(ChainRing(2, 2), 0)
    with raises(PreconditionError):
        is_strict(G)
    with raises(PreconditionError):
        is_quasi_rigid(G)
    with raises(PreconditionError):
        quotient_criterion(G)


def test_quasi_rigid_lengths():
    "Quasi-rigid gauges have constant length"
    ring = ChainRing(2, 1)
    assert quasi_rigid_lengths(free_gauge(ring, 0, 3)).details['length'] == 3
    G = direct_sum(free_gauge(ring, 0), free_gauge(ring, 1))
    report = quasi_rigid_lengths(G)
    assert report.ok
    assert report.details['lengths'] == [2, 2]
    with raises(PreconditionError):
        quasi_rigid_lengths(vanishing_above_zero())


def test_free_k_gauges():
    "Free k-gauges pass the quotient criterion, N -> pN -> pN does not"
    ring = ChainRing(3, 1)
    G = direct_sum(free_gauge(ring, 0), free_gauge(ring, -1, 2),
                   free_gauge(ring, 2))
    assert is_free_k_gauge(G)
    assert is_rigid(G)
    bad = p_multiple_gauge(ChainRing(3, 2)).reduce_mod_p()
    report = quotient_criterion(bad)
    assert not report.ok
    assert 0 in report.violated_indices()


def test_dual_criterion_alone_insufficient():
    "A gauge can satisfy the dual criterion without being free"
    G = vanishing_above_zero()
    assert dual_quotient_criterion(G).ok
    assert not quotient_criterion(G).ok
    assert not is_free_k_gauge(G)


def test_criteria_agree_on_free_components():
    "Both criteria agree on small W_2(F_2)-gauges with free components"
    ring = ChainRing(2, 2)
    for G in free_chain_gauges(ring):
        reduced = G.reduce_mod_p()
        assert quotient_criterion(reduced).ok == \
            dual_quotient_criterion(reduced).ok


def test_free_component_enumeration():
    "The enumeration yields valid gauges on which both criteria agree"
    gauges = list(free_component_gauges(ChainRing(2, 2), max_rank=1))
    assert [G.interval for G in gauges] == \
        [(0, 0)] + [(0, 1)]*4 + [(0, 2)]*4
    for G in gauges:
        assert validate_gauge(G).ok
        reduced = G.reduce_mod_p()
        assert quotient_criterion(reduced).ok == \
            dual_quotient_criterion(reduced).ok
    # fv = vf = 0 over F_3 leaves the pairs with f = 0 or v = 0
    assert len(list(free_component_gauges(ChainRing(3, 1), 1))) == 6 + 9
    with raises(AssertionError):
        list(free_component_gauges(ChainRing(FiniteField(2, 2), 1)))


def test_free_components_include_non_free_gauges():
    "W -> W -> W with f = (1, p) and v = (p, 1) is listed and is not free"
    ring = ChainRing(2, 2)
    M = WnModule.free(ring, 1)
    fixture = Gauge(ring, (0, 2), [M, M, M],
                    [scalar_map(M, 1), scalar_map(M, 2)],
                    [scalar_map(M, 2), scalar_map(M, 1)])
    assert validate_gauge(fixture).ok
    assert not is_free_W_gauge(fixture)
    reduced = fixture.reduce_mod_p()
    assert not quotient_criterion(reduced).ok
    assert not dual_quotient_criterion(reduced).ok
    gauges = list(free_component_gauges(ring, max_rank=1))
    assert any(G.same_as(fixture) for G in gauges)
    verdicts = set(is_free_W_gauge(G) for G in gauges)
    assert verdicts == set([True, False])


def test_p_multiple_not_free():
    "N -> pN -> pN has free components but is not a free gauge"
    G = p_multiple_gauge(ChainRing(2, 2))
    report = freeness_report(G)
    assert not report.ok
    assert report.witnesses[0]['failed'] == 'criterion'
    with raises(PreconditionError):
        free_decomposition(G)


def test_non_free_components():
    "Components that are not free rule out freeness"
    ring = ChainRing(2, 2)
    G = random_chain(ring, random_state(0), 0, 1, divisor=1)
    report = freeness_report(G)
    assert report.witnesses[0]['failed'] == 'component'
    assert not is_free_W_gauge(G)


def test_short_interval_free():
    "Gauges on an interval of length one with free components are free"
    rng = random_state(3)
    for ring in [ChainRing(2, 2), ChainRing(3, 3)]:
        for _ in range(5):
            G = direct_sum(random_chain(ring, rng, 0, 1),
                           random_chain(ring, rng, 0, 1))
            assert is_free_W_gauge(G)
            multiplicities, free, iso = free_decomposition(G)
            assert iso.is_isomorphism()
            assert sum(multiplicities.values()) == 2
            assert set(multiplicities) <= {0, -1}


def test_free_sum_round_trip():
    "The multiplicities of a sum of W_2(i)^d_i are recovered"
    ring = ChainRing(2, 2)
    for dims in itertools.product(range(3), repeat=3):
        multiplicities = dict((i, d) for i, d in zip([-1, 0, 2], dims)
                              if d)
        if not multiplicities:
            continue
        G = free_sum(ring, multiplicities)
        assert is_free_W_gauge(G)
        assert free_decomposition(G)[0] == multiplicities
