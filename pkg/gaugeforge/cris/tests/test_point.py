"""
Tests for the gauge ring at a perfect point.
"""
from __future__ import absolute_import, division
import numpy as np
from pytest import raises

from ...witt.fields import FiniteField
from ...gauge.core import free_gauge, validate_gauge
from ...gauge.rigidity import is_rigid
from ..point import PointGauge, point_gauge, point_gauge_report, \
    flatness_check


def test_point_over_prime_field():
    "G_1(F_p) is rigid and is k(0) with phi = sigma"
    for p in [2, 3, 5]:
        G = point_gauge(p, 1)
        assert point_gauge_report(G, seed=0).ok
        assert is_rigid(G.gauge)
        assert G.gauge.tighten().same_as(free_gauge(G.ring, 0))
        assert G.phi_gauge.is_phi_gauge()


def test_degree_zero_component():
    "G_n^0 = Z/p^n"
    for n in [1, 2, 3]:
        G = point_gauge(3, n, (-2, 2))
        assert G.gauge.component(0).divisors == (n,)
        assert G.ring.modulus == 3**n


def test_point_over_f4():
    "G_2(F_4): fv = p and phi is sigma-semilinear and multiplicative"
    G = point_gauge(FiniteField(2, 2), 2)
    assert validate_gauge(G.gauge).ok
    assert G.phi_gauge.phi.twist == 1
    assert point_gauge_report(G, samples=5, seed=1).ok


def test_products():
    "Products pick up p^(max(r,0) + max(s,0) - max(r+s,0))"
    G = point_gauge(5, 3, (-2, 2))
    one = G.ring.one()
    assert int(G.product(1, 1, one, one)[0]) == 1
    assert int(G.product(-1, 2, one, one)[0]) == 5
    assert int(G.product(-2, 2, one, one)[0]) == 25
    assert int(G.product(-1, -1, one, one)[0]) == 1
    assert int(G.phi_at(-2, one)[0]) == 25
    np.testing.assert_array_equal(G.f_at(-1, one), G.ring.from_integer(5))
    np.testing.assert_array_equal(G.f_at(0, one), one)


def test_wide_window():
    "Reports pass on wider windows"
    G = point_gauge(5, 2, (-3, 2))
    assert point_gauge_report(G, samples=3, seed=2).ok


def test_window_must_contain_zero():
    "The gauge conventions need 0 in the window"
    with raises(AssertionError):
        PointGauge(2, 1, (1, 2))


def test_flatness():
    "0 -> G_n -> G_(n+m) -> G_m -> 0 is exact"
    assert flatness_check(2, 1, 1).ok
    assert flatness_check(FiniteField(2, 2), 2, 1).ok
    assert flatness_check(3, 2, 2, (-2, 1)).ok
