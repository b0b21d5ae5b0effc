"""
Tests for the divided power model.
"""
from __future__ import absolute_import, division
import numpy as np
from hypothesis import given, settings, strategies as st
from pytest import raises

from ...utils import (PreconditionError, TruncationOverflow, binomial,
                      factorial, random_state)
from ...witt.fields import FiniteField
from ..model import (DPAlgebra, build_model, dp_mul, dp_gamma, lift,
                     project, a_mul, random_a_element, divided_power_unit,
                     induced_endomorphism, functoriality_check)


def test_divided_power_units():
    "c_m is a unit for every m"
    for p in [2, 3, 5]:
        for m in range(40):
            assert divided_power_unit(p, m) != 0
    assert divided_power_unit(2, 4) == 1


def test_gamma_examples():
    "gamma_3(u) = u theta for p = 2 and gamma_1 is the identity"
    model = build_model(2, 1)
    u, theta = model.u(0), model.theta(0)
    np.testing.assert_array_equal(dp_gamma(model, u, 3),
                                  dp_mul(model, u, theta))
    np.testing.assert_array_equal(dp_gamma(model, u, 1), u)
    np.testing.assert_array_equal(dp_gamma(model, u, 2), theta)
    np.testing.assert_array_equal(dp_gamma(model, u, 0), model.one())
    model = build_model(3, 1)
    assert model.describe(dp_gamma(model, model.u(0), 3)) == 'g1(th1)'


def test_gamma_of_sum():
    "gamma_2(u_1 + u_2) = theta_1 + u_1 u_2 + theta_2 for p = 2"
    model = build_model(2, 2)
    x = model.add(model.u(0), model.u(1))
    expected = model.add(model.add(model.theta(0), model.theta(1)),
                         model.mul(model.u(0), model.u(1)))
    np.testing.assert_array_equal(dp_gamma(model, x, 2), expected)


def test_gamma_of_theta():
    "gamma_a(gamma_b(theta)) = (ab)!/(a! (b!)^a) gamma_ab(theta)"
    model = build_model(3, 1, 8)
    for a, b in [(2, 2), (2, 3), (3, 2), (1, 5)]:
        coefficient = factorial(a*b)//(factorial(a)*factorial(b)**a) % 3
        np.testing.assert_array_equal(
            dp_gamma(model, model.theta(0, b), a),
            model.scale(coefficient, model.theta(0, a*b)))


def test_factorial_times_gamma_is_power():
    "m! gamma_m(x) = x^m"
    model = build_model(5, 1, 5)
    random = random_state(0)
    for _ in range(5):
        x = model.add(lift(model, random_a_element(model, random, True)),
                      model.theta(0))
        for m in range(5):
            np.testing.assert_array_equal(
                model.scale(factorial(m) % 5, dp_gamma(model, x, m)),
                model.power(x, m))


def test_gamma_scaling():
    "gamma_m(cx) = c^m gamma_m(x) over F_4"
    field = FiniteField(2, 2)
    model = build_model(field, 1)
    x = model.add(model.u(0), model.theta(0))
    for c in field.elements():
        for m in range(4):
            np.testing.assert_array_equal(
                dp_gamma(model, model.scale(c, x), m),
                model.scale(field.power(c, m), dp_gamma(model, x, m)))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 5), st.integers(0, 5),
       st.integers(0, 10000))
def test_binomial_law(p, a, b, seed):
    "gamma_a(x) gamma_b(x) = binom(a + b, a) gamma_(a+b)(x)"
    model = build_model(p, 1)
    x = lift(model, random_a_element(model, random_state(seed), True))
    np.testing.assert_array_equal(
        dp_mul(model, dp_gamma(model, x, a), dp_gamma(model, x, b)),
        model.scale(binomial(a + b, a) % p, dp_gamma(model, x, a + b)))


def test_gamma_needs_ideal():
    "Divided powers of elements with a constant term are refused"
    model = build_model(2, 1)
    with raises(PreconditionError):
        dp_gamma(model, model.add(model.one(), model.u(0)), 2)


def test_overflow():
    "Non-zero terms beyond the truncation raise, zero ones do not"
    model = build_model(2, 1, 2)
    with raises(TruncationOverflow):
        dp_gamma(model, model.u(0), 4)
    assert not dp_mul(model, model.theta(0), model.theta(0)).any()
    model = build_model(3, 1, 2)
    with raises(TruncationOverflow):
        dp_mul(model, model.theta(0), model.theta(0))
    with raises(TruncationOverflow):
        model.theta(0, 2)


def test_nilpotent_u():
    "u^p = 0 but u^(p-1) is not"
    for p in [2, 3, 5]:
        model = DPAlgebra(p, 1, 2)
        assert model.power(model.u(0), p - 1).any()
        assert not model.power(model.u(0), p).any()


def test_lift_and_project():
    "f is a ring map and the projection of f(a) is a^p"
    model = build_model(3, 1, 2)
    a = np.array([2, 1, 0])
    b = np.array([0, 1, 1])
    np.testing.assert_array_equal(project(model, lift(model, a)),
                                  [2, 0, 0])
    np.testing.assert_array_equal(
        model.mul(lift(model, a), lift(model, b)),
        lift(model, a_mul(model, a, b)))
    assert not project(model, model.theta(0)).any()
    with raises(AssertionError):
        lift(model, np.zeros(2, dtype=np.int64))


def test_functoriality():
    "x -> lambda x sends theta to lambda^p theta"
    model = build_model(3, 1, 3)
    for lam in [[1, 1, 0], [0, 1, 0], [2, 0, 1]]:
        assert functoriality_check(model, [np.array(lam)]).ok
    model = build_model(FiniteField(2, 2), 1, 3)
    assert functoriality_check(model, [np.array([2, 3])]).ok
    model = build_model(2, 2, 2)
    random = random_state(3)
    lambdas = [random_a_element(model, random) for _ in range(2)]
    assert functoriality_check(model, lambdas).ok


def test_induced_endomorphism_values():
    "lambda = 2 over F_5 gives rho(theta) = 2^5 theta = 2 theta"
    model = build_model(5, 1, 3)
    rho = induced_endomorphism(model, [np.array([2, 0, 0, 0, 0])])
    np.testing.assert_array_equal(rho(model.theta(0)),
                                  model.scale(2, model.theta(0)))
    np.testing.assert_array_equal(rho(model.u(0)),
                                  model.scale(2, model.u(0)))
    x = model.add(model.u(0), model.theta(0))
    y = model.add(model.one(), model.power(model.u(0), 3))
    np.testing.assert_array_equal(rho(model.mul(x, y)),
                                  model.mul(rho(x), rho(y)))
