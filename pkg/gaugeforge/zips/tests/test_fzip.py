"""
Tests for F-zips, their extraction from phi-gauges and generalized F-zips.
"""
from __future__ import absolute_import, division
import numpy as np
from pytest import raises

from ...utils import PreconditionError, SchemaError
from ...witt.chainring import ChainRing
from ...witt.fields import FiniteField
from ...witt.modules import WnModule, SemilinearMap
from ...gauge.core import free_gauge, p_multiple_gauge, direct_sum
from ...gauge.phi import PhiGauge
from ...gauge.crystal import VirtualCrystal, standard_construction
from ...gauge.rigidity import quasi_rigid_lengths
from ..fzip import (FZip, GeneralizedFZip, validate_fzip,
                    validate_generalized_fzip, graded_dimensions, tate_fzip,
                    fzip_direct_sum, fzip_from_dict, zip_gauge_report,
                    gauge_to_fzip)


def identity_phi(gauge):
    "phi = sigma from the top component to the bottom one"
    return PhiGauge(gauge, SemilinearMap(
        gauge.ring.identity(gauge.plus_infinity.rank), gauge.plus_infinity,
        gauge.minus_infinity, 1))


def axioms(report):
    return set(w['axiom'] for w in report.witnesses)


def test_tate_fzip_valid():
    "Tate F-zips are valid with one jump of the rank"
    ring = ChainRing(FiniteField(2, 2), 1)
    for weight in [-1, 0, 3]:
        Z = tate_fzip(ring, weight, rank=2)
        assert validate_fzip(Z).ok
        assert graded_dimensions(Z) == {weight: (2, 2)}


def test_dimension_mismatch():
    "A lower filtration that is too small breaks the dimension count"
    ring = ChainRing(3, 1)
    module_dim = 2
    ident = ring.identity(module_dim)
    zero = ring.zeros(module_dim, 0)
    module = WnModule.free(ring, module_dim)
    phi = SemilinearMap(ident, module, module, 1)
    Z = FZip(ring, module_dim, (0, 0), [ident, zero], [zero, ident[:, :1]],
             [phi])
    report = validate_fzip(Z)
    assert not report.ok
    assert {'dimension', 'lower exhaustive'} <= axioms(report)


def test_bad_phi():
    "A zero phi is not bijective on the graded pieces"
    ring = ChainRing(2, 1)
    Z = tate_fzip(ring, 1)
    broken = FZip(ring, 1, Z.interval, Z.upper, Z.lower,
                  [SemilinearMap(None, Z.module, Z.module, 1)])
    report = validate_fzip(broken)
    assert axioms(report) == {'phi bijective'}
    assert report.violated_indices() == [1]


def test_fzip_of_k0():
    "k(0) gives C^0 = all, C^1 = 0, D_-1 = 0, D_0 = all and phi_0 = sigma"
    ring = ChainRing(FiniteField(2, 2), 1)
    Z = gauge_to_fzip(identity_phi(free_gauge(ring, 0)))
    assert Z.interval == (0, 0)
    assert validate_fzip(Z).ok
    np.testing.assert_array_equal(Z.upper_step(0), ring.identity(1))
    assert Z.upper_step(1).shape[1] == 0
    assert Z.lower_step(-1).shape[1] == 0
    np.testing.assert_array_equal(Z.phi(0).matrix, ring.identity(1))


def test_fzip_of_free_twists():
    "W_1(i) is sent to the Tate F-zip of weight -i"
    ring = ChainRing(3, 1)
    for i in [-2, 1, 2]:
        Z = gauge_to_fzip(identity_phi(free_gauge(ring, i)))
        assert validate_fzip(Z).ok
        assert graded_dimensions(Z) == {-i: (1, 1)}


def test_fzip_of_sum():
    "k(0) + k(1) gives one graded piece in degrees -1 and 0"
    ring = ChainRing(2, 1)
    G = identity_phi(direct_sum(free_gauge(ring, 0), free_gauge(ring, 1)))
    Z = gauge_to_fzip(G)
    assert validate_fzip(Z).ok
    dims = graded_dimensions(Z)
    assert dims == {-1: (1, 1), 0: (1, 1)}
    assert sum(up for up, _ in dims.values()) == Z.dim
    summed = fzip_direct_sum(tate_fzip(ring, 0), tate_fzip(ring, -1))
    assert graded_dimensions(summed) == dims


def test_fzip_of_swap_crystal():
    "The rigid gauge of the swap crystal mod p has graded pieces in 0 and 1"
    ring = ChainRing(2, 4)
    crystal = VirtualCrystal(ring, ring.from_integers([[0, 2], [1, 0]]))
    G = standard_construction(crystal, 1)
    assert zip_gauge_report(G).ok
    Z = gauge_to_fzip(G)
    assert validate_fzip(Z).ok
    assert graded_dimensions(Z) == {0: (1, 1), 1: (1, 1)}
    assert Z.dim == quasi_rigid_lengths(G.gauge).details['length']


def test_non_rigid_rejected():
    "N -> pN -> pN over k is not rigid, over W_2 not over a field"
    G = identity_phi(p_multiple_gauge(ChainRing(2, 1)))
    report = zip_gauge_report(G)
    assert [w['failed'] for w in report.witnesses] == ['rigid']
    with raises(PreconditionError):
        gauge_to_fzip(G)
    report = zip_gauge_report(identity_phi(free_gauge(ChainRing(2, 2), 0)))
    assert report.witnesses[0]['failed'] == 'field'


def test_direct_sum_valid():
    "Sums of Tate F-zips are valid"
    ring = ChainRing(FiniteField(3, 2), 1)
    Z = fzip_direct_sum(tate_fzip(ring, 2), tate_fzip(ring, 0, 2),
                        tate_fzip(ring, 2))
    assert validate_fzip(Z).ok
    assert Z.dim == 4
    assert graded_dimensions(Z) == {0: (2, 2), 1: (0, 0), 2: (2, 2)}


def test_fzip_json():
    "F-zips are read back from their JSON form"
    ring = ChainRing(FiniteField(2, 2), 1)
    Z = fzip_direct_sum(tate_fzip(ring, 0), tate_fzip(ring, 1))
    back = fzip_from_dict(Z.to_dict())
    assert validate_fzip(back).ok
    assert graded_dimensions(back) == graded_dimensions(Z)
    data = Z.to_dict()
    del data['upper']
    with raises(SchemaError):
        fzip_from_dict(data)


def test_fzip_needs_field():
    "F-zips over W_2 are refused"
    with raises(ValueError):
        tate_fzip(ChainRing(2, 2), 0)


def flag_fzip(p=2):
    "F^1 = <e1>, F_0 = <e0> with phi_0 and phi_1 sending to e0 and e1"
    e0, e1 = [[1], [0]], [[0], [1]]
    ident = np.eye(2, dtype=np.int64)
    zero = np.zeros((2, 0), dtype=np.int64)
    return GeneralizedFZip(p, 2, [ident, e1, zero], [zero, e0, ident],
                           [e0, e1])


def test_generalized_fzip_valid():
    "A two step flag with matching structure maps is valid"
    Z = flag_fzip()
    assert Z.graded_ranks() == [(1, 1), (1, 1)]
    assert validate_generalized_fzip(Z).ok


def test_generalized_fzip_violations():
    "Structure maps outside F_r and wrong twist ranks are reported"
    Z = flag_fzip(3)
    wrong = GeneralizedFZip(3, 2, Z.upper, Z.lower, [Z.phis[1], Z.phis[1]])
    report = validate_generalized_fzip(wrong)
    assert report.violated_indices() == [0]
    assert report.witnesses[0]['axiom'] == 'phi defined'
    doubled = GeneralizedFZip(3, 2, Z.upper, Z.lower, Z.phis, twist_rank=2)
    assert 'dimension' in axioms(validate_generalized_fzip(doubled))
    with raises(ValueError):
        GeneralizedFZip(3, 2, Z.upper, Z.lower, Z.phis*2)
