"""
Tests for finite field arithmetic.
"""
from __future__ import absolute_import, division
import numpy as np
from pytest import raises

from ..fields import FiniteField, default_minpoly, is_prime


def test_field_axioms_exhaustive():
    "Associativity, distributivity and inverses over F_4 and F_9"
    for p, d in [(2, 2), (3, 2)]:
        k = FiniteField(p, d)
        elements = list(k.elements())
        for a in elements:
            if a != 0:
                assert k.mul(a, k.inverse(a)) == 1
            assert k.add(a, k.neg(a)) == 0
            for b in elements:
                for c in elements:
                    assert k.mul(a, k.add(b, c)) == \
                        k.add(k.mul(a, b), k.mul(a, c))
                    assert k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c))


def test_frobenius_order():
    "x^(p^d) = x and the Frobenius has order d"
    for p, d in [(2, 1), (2, 3), (3, 2), (5, 2)]:
        k = FiniteField(p, d)
        for a in k.elements():
            assert k.power(a, k.q) == a
            assert k.frobenius(a, d) == a
            assert k.frobenius(k.frobenius_inverse(a)) == a


def test_frobenius_is_additive():
    "(a + b)^p = a^p + b^p"
    k = FiniteField(3, 2)
    for a in k.elements():
        for b in k.elements():
            assert k.frobenius(k.add(a, b)) == \
                k.add(k.frobenius(a), k.frobenius(b))


def test_default_minpoly_irreducible():
    "The default polynomial has no roots"
    for p, d in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        poly = default_minpoly(p, d)
        assert len(poly) == d + 1 and poly[-1] == 1
        for x in range(p):
            assert sum(c*x**i for i, c in enumerate(poly)) % p != 0


def test_field_rejects_bad_input():
    "Composite characteristic and reducible polynomials fail"
    assert not is_prime(9)
    with raises(AssertionError):
        FiniteField(4)
    with raises(ValueError):
        FiniteField(2, 2, minpoly=[1, 0, 1])
    with raises(ZeroDivisionError):
        FiniteField(3).inverse(0)


def test_fqelem_operators():
    "Element wrappers follow the table arithmetic"
    k = FiniteField(2, 2)
    g = k(k.generator)
    assert g*g == g + 1
    assert (g/g) == k(1)
    assert g**3 == k(1)
    assert g.frobenius().frobenius() == g
    assert k([0, 1]) == g
    np.testing.assert_array_equal(k.mul_table, k.mul_table.T)
