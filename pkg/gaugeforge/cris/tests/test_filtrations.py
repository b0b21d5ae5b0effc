"""
Tests for the filtrations, the Cartier maps and the assembled F-zip.
"""
from __future__ import absolute_import, division
import numpy as np
from pytest import raises

from ...utils import PreconditionError, TruncationOverflow, binomial
from ...witt.fields import FiniteField
from ...zips.fzip import GeneralizedFZip, validate_generalized_fzip
from ..model import build_model
from ..filtrations import (j_filtration_basis, f_filtration_basis,
                           graded_piece, rank_table, gamma_functor_check,
                           cartier_fr, cartier_report,
                           cartier_well_defined_check,
                           assemble_generalized_fzip, frobenius_section_check,
                           truncation_stability_report)


def test_filtrations_nested():
    "J^[r+1] in J^[r], F_(r-1) in F_r, F_0 is the copy of A"
    model = build_model(3, 2, 3)
    for r in range(model.max_weight + 1):
        assert set(j_filtration_basis(model, r + 1)) <= \
            set(j_filtration_basis(model, r))
    assert len(j_filtration_basis(model, 0)) == model.size
    assert len(j_filtration_basis(model, model.max_weight + 1)) == 0
    assert len(f_filtration_basis(model, -1)) == 0
    assert len(f_filtration_basis(model, 0)) == 3**2
    assert len(f_filtration_basis(model, 2*(3 - 1))) == model.size


def test_graded_ranks():
    "J^[r]/J^[r+1] and F_r/F_(r-1) have rank binom(r + d - 1, d - 1)"
    for p in [2, 3]:
        for d in [1, 2]:
            model = build_model(p, d, 4)
            for row in rank_table(model):
                expected = binomial(row['r'] + d - 1, d - 1)
                assert row['j_rank'] == expected
                assert row['f_rank'] == expected
                assert graded_piece(model, row['r']).rank == expected


def test_graded_piece_bases():
    "r = 0 gives the unit and d = 2, r = 2 three monomials"
    model = build_model(2, 2)
    piece = graded_piece(model, 0)
    assert len(piece.elements) == 1
    np.testing.assert_array_equal(piece.elements[0], model.one())
    assert graded_piece(model, 2).orders == [(2, 0), (1, 1), (0, 2)]
    with raises(TruncationOverflow):
        graded_piece(build_model(2, 1, 2), 4)


def test_naive_and_nice_coordinates():
    "Naive coordinates c become nice coordinates c^p"
    field = FiniteField(2, 2)
    model = build_model(field, 1)
    piece = graded_piece(model, 1)
    g = field.generator
    x = model.add(model.scale(g, model.u(0)), model.theta(0))
    assert piece.naive_coordinates(x) == [g]
    assert piece.nice_coordinates(x) == [field.frobenius(g)]
    with raises(PreconditionError):
        graded_piece(model, 2).naive_coordinates(model.u(0))


def test_gamma_functor():
    "Gamma^r I -> J^[r]/J^[r+1] is an isomorphism"
    for p, d in [(2, 1), (2, 2), (3, 2)]:
        model = build_model(p, d, 3)
        for r in range(p*3):
            report = gamma_functor_check(model, r)
            assert report.ok
            assert report.details['rank'] == binomial(r + d - 1, d - 1)
    model = build_model(2, 1)
    assert graded_piece(model, 3).to_dict()['basis'] == ['u1*g1(th1)']


def test_cartier_examples():
    "f_1(u) = -theta, f_0(1) = 1 and f_2(theta) = gamma_2(theta)"
    model = build_model(2, 1)
    np.testing.assert_array_equal(cartier_fr(model, 1)(model.u(0)),
                                  model.theta(0))
    np.testing.assert_array_equal(cartier_fr(model, 0)(model.one()),
                                  model.one())
    np.testing.assert_array_equal(cartier_fr(model, 2)(model.theta(0)),
                                  model.theta(0, 2))
    model = build_model(3, 1)
    assert model.describe(cartier_fr(model, 1)(model.u(0))) == '2*g1(th1)'


def test_cartier_semilinear():
    "f_r(c x) = c^p f_r(x) for scalars of F_4"
    field = FiniteField(2, 2)
    model = build_model(field, 2, 3)
    f2 = cartier_fr(model, 2)
    x = model.add(model.theta(0), model.mul(model.u(0), model.u(1)))
    for c in field.elements():
        np.testing.assert_array_equal(
            f2(model.scale(c, x)),
            model.scale(field.frobenius(c), f2(x)))


def test_cartier_bijective():
    "f_r is an isomorphism for every r below the truncation"
    for field, d in [(2, 1), (3, 1), (2, 2), (FiniteField(2, 2), 1)]:
        assert cartier_report(build_model(field, d, 4)).ok
    with raises(TruncationOverflow):
        cartier_fr(build_model(2, 1, 3), 3)


def test_cartier_well_defined():
    "The error term of gamma_pm on sums lies in F_(m-1)"
    for p, d in [(2, 1), (3, 1), (2, 2)]:
        model = build_model(p, d, 4)
        for m in range(1, 4):
            assert cartier_well_defined_check(model, m, samples=5,
                                              seed=m).ok


def test_generalized_fzip_rank_one():
    "d = 1, p = 2, R = 6 gives a valid F-zip with A-ranks one"
    model = build_model(2, 1, 6)
    Z = assemble_generalized_fzip(model)
    assert Z.degree == 6
    assert Z.twist_rank == 2
    assert Z.graded_ranks() == [(1, 2)]*6
    assert validate_generalized_fzip(Z).ok


def test_generalized_fzip_more():
    "Two variables and F_4 coefficients"
    model = build_model(3, 2, 2)
    Z = assemble_generalized_fzip(model)
    assert [up for up, _ in Z.graded_ranks()] == [1, 2]
    assert validate_generalized_fzip(Z).ok
    Z = assemble_generalized_fzip(build_model(FiniteField(2, 2), 1, 3))
    assert Z.graded_ranks() == [(2, 4)]*3
    assert validate_generalized_fzip(Z).ok


def test_broken_structure_map():
    "Using phi_0 in degree 1 misses F_1/F_0"
    Z = assemble_generalized_fzip(build_model(2, 1, 3))
    broken = GeneralizedFZip(Z.p, Z.dim, Z.upper, Z.lower,
                             [Z.phis[0], Z.phis[0], Z.phis[2]],
                             twist_rank=Z.twist_rank)
    report = validate_generalized_fzip(broken)
    assert report.violated_indices() == [1]
    assert report.witnesses[0]['axiom'] == 'phi bijective'


def test_frobenius_section():
    "f is an injective ring map with the projection as a left Frobenius"
    for field, d in [(2, 1), (3, 1), (2, 2), (FiniteField(3, 2), 1)]:
        assert frobenius_section_check(build_model(field, d, 2),
                                       seed=0).ok


def test_truncation_stability():
    "Orders R and R + 2 agree below R"
    assert truncation_stability_report(2, 1, 3).ok
    assert truncation_stability_report(3, 2, 2).ok
