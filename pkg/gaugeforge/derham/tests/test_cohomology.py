"""
Tests for the gauge cohomology of affine space.
"""
from __future__ import absolute_import, division
from pytest import raises

from ... import constants
from ...utils import PreconditionError
from ...gauge import core
from ...witt.linalg import rank_mod_p
from ..forms import affine_space, hypersurface, de_rham_cohomology
from ..cohomology import (gauge_weight, gauge_cohomology, GaugeCohomology,
                          hg_gauge, gauge_cohomology_report,
                          derham_gauge_report, truncation_stability_report)


def _rank(mapping):
    return rank_mod_p(mapping.matrix[..., 0], mapping.ring.p)


def test_gauge_components_of_the_line():
    "H_g^i(A^1) mod 2 has rank 3 in degree 0 and 2 in degree 1"
    X = affine_space(2, 1, 8)
    assert GaugeCohomology(X, 0).ranks == {-1: 3, 0: 3, 1: 3}
    assert GaugeCohomology(X, 1).ranks == {-1: 2, 0: 2, 1: 2}
    assert gauge_cohomology(X, 1, 5).rank == 2
    assert gauge_cohomology(X, -1, 0).rank == 0
    assert gauge_cohomology(X, 0, 0, 4).rank == 2


def test_zero_component_is_de_rham():
    "The 0-component is H_dR in weights <= D // p"
    for X in [affine_space(2, 1, 8), affine_space(3, 1, 9),
              affine_space(2, 2, 4)]:
        for i in range(X.dim + 1):
            expected = de_rham_cohomology(X, i, X.degree//X.p).rank
            assert gauge_cohomology(X, i, 0).rank == expected


def test_line_gauge_maps():
    "f on H^0 keeps the p-th powers of low weight and is zero on H^1"
    H0 = GaugeCohomology(affine_space(2, 1, 8), 0)
    assert _rank(H0.gauge.f(0)) == 2
    assert H0.gauge.v(-1).is_bijective()
    assert H0.gauge.v(0).is_zero()
    H1 = GaugeCohomology(affine_space(2, 1, 8), 1)
    assert H1.gauge.f(0).is_zero()
    assert H1.gauge.v(-1).is_bijective()
    assert _rank(H1.gauge.v(0)) == 1
    assert core.concentration_interval(H0.gauge) == (0, 1)
    assert core.concentration_interval(hg_gauge(affine_space(2, 1, 8),
                                                1).gauge) == (0, 1)


def test_gauge_cohomology_reports():
    "The assembled phi-gauges are effective and concentrated in [0, dim]"
    for X in [affine_space(2, 1, 8), affine_space(3, 1, 6),
              affine_space(2, 2, 4)]:
        for i in range(X.dim + 1):
            H = GaugeCohomology(X, i)
            report = gauge_cohomology_report(H)
            assert report.ok, report.witnesses
            assert H.phi_gauge.is_phi_gauge()


def test_wider_window():
    "Extending the window adds components equal to the boundary ones"
    X = affine_space(2, 1, 8)
    H = GaugeCohomology(X, 1, (-3, 3))
    assert H.ranks == {r: 2 for r in range(-3, 4)}
    assert [row['weight'] for row in H.rank_table()] == [8, 8, 8, 8, 4, 4, 4]
    with raises(AssertionError):
        GaugeCohomology(X, 1, (0, 1))


def test_hypersurface_refused():
    "Only affine space gets an assembled gauge"
    X = hypersurface(3, 2, 'x*y - 1', ['-1', 'x', '0'], degree=6)
    with raises(PreconditionError):
        GaugeCohomology(X, 0)
    assert gauge_cohomology(X, 3, 0).rank == 0


def test_gauge_to_dict():
    "The JSON form lists the ranks and the gauge"
    H = GaugeCohomology(affine_space(2, 1, 8), 1)
    data = H.to_dict()
    assert data['i'] == 1
    assert data['window'] == [-1, 1]
    assert [row['rank'] for row in data['ranks']] == [2, 2, 2]
    assert data['variety']['degree'] == 8
    assert gauge_weight(H.variety, 1) == 4


def test_derham_gauge_report():
    "All checks pass on A^1 and A^2 mod 2"
    for X in [affine_space(2, 1, 8), affine_space(2, 2, 4)]:
        report = derham_gauge_report(X)
        assert report.ok, report.witnesses
        assert report.status == constants.STATUS_OK


def test_truncation_stability():
    "Ranks below weight D - p do not move when D grows"
    report = truncation_stability_report(affine_space(2, 1, 6))
    assert report.ok, report.witnesses
    report = truncation_stability_report(affine_space(3, 2, 5), extra=2)
    assert report.ok, report.witnesses
    short = truncation_stability_report(affine_space(3, 1, 2))
    assert short.status == constants.STATUS_OVERFLOW
