"""
Tests for finite F_p-algebras and their perfect cores.
"""
from __future__ import absolute_import, division
import numpy as np
from hypothesis import given, settings, strategies as st
from pytest import raises

from ...utils import SchemaError
from ...witt.fields import FiniteField
from ..perfection import (FiniteAlgebra, monomial_algebra, monomial_downsets,
                          field_algebra, product_algebra, algebra_from_dict,
                          frobenius_images, perfect_core, is_perfect,
                          surjective_frobenius_report)


def truncated_line(p, length):
    "F_p[x]/(x^length)"
    return monomial_algebra(p, [(i,) for i in range(length)])


def test_truncated_polynomials():
    "The core of F_p[x]/(x^p) is F_p after one step"
    for p in [2, 3, 5]:
        A = truncated_line(p, p)
        assert frobenius_images(A) == [p, 1]
        core, embedding = perfect_core(A)
        assert core.dim == 1
        assert is_perfect(core)
        np.testing.assert_array_equal(embedding[:, 0], A.unit)


def test_two_steps():
    "F_2[x]/(x^4) needs two Frobenius steps"
    A = truncated_line(2, 4)
    assert frobenius_images(A) == [4, 2, 1]
    assert not is_perfect(A)
    assert perfect_core(A)[0].dim == 1


def test_fields_are_perfect():
    "Finite fields are their own perfect core"
    for field in [FiniteField(2, 2), FiniteField(2, 3), FiniteField(3, 2)]:
        A = field_algebra(field)
        assert A.is_unital()
        assert is_perfect(A)
        assert frobenius_images(A) == [field.d]
        assert perfect_core(A)[0].dim == field.d


def test_product_core():
    "The core of F_4 x F_2[x]/(x^2) is F_4 x F_2"
    A = product_algebra(field_algebra(FiniteField(2, 2)),
                        truncated_line(2, 2))
    assert A.is_unital()
    core, _ = perfect_core(A)
    assert core.dim == 3
    assert core.is_unital()
    assert is_perfect(core)


def test_staircases_exhaustive():
    "Cores of monomial algebras of dimension <= 8 are F_2 and idempotent"
    count = 0
    for variables in [1, 2, 3]:
        for staircase in monomial_downsets(variables, 8):
            A = monomial_algebra(2, staircase)
            core, _ = perfect_core(A)
            assert core.dim == 1
            assert is_perfect(core)
            assert perfect_core(core)[0].dim == core.dim
            assert surjective_frobenius_report(A).ok
            count += 1
    assert count == 8 + 66 + 341


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                max_size=4),
       st.sampled_from([2, 3]))
def test_core_idempotent(corners, p):
    "perfect_core of a perfect core changes nothing"
    staircase = set()
    for a, b in corners + [(0, 0)]:
        staircase.update((i, j) for i in range(a + 1) for j in range(b + 1))
    A = product_algebra(monomial_algebra(p, sorted(staircase)),
                        field_algebra(FiniteField(p, 2)))
    core, _ = perfect_core(A)
    again, embedding = perfect_core(core)
    assert again.dim == core.dim == 3
    np.testing.assert_array_equal(embedding, np.eye(core.dim))


def test_surjective_frobenius_report():
    "Surjective Frobenius is injective on fields and products"
    for A in [field_algebra(FiniteField(2, 3)), truncated_line(3, 2),
              product_algebra(field_algebra(FiniteField(3)),
                              field_algebra(FiniteField(3, 2)))]:
        report = surjective_frobenius_report(A)
        assert report.ok


def test_algebra_json():
    "Algebras are read back from their JSON form"
    A = truncated_line(3, 3)
    back = algebra_from_dict(A.to_dict())
    np.testing.assert_array_equal(back.constants, A.constants)
    assert back.names == A.names
    with raises(SchemaError):
        algebra_from_dict({'p': 2, 'constants': [[[1]]], 'unit': [1, 0]})
    with raises(SchemaError):
        algebra_from_dict({'constants': [[[1]]], 'unit': [1]})


def test_bad_staircase():
    "Staircases must be closed under going down"
    with raises(AssertionError):
        monomial_algebra(2, [(0,), (2,)])
    with raises(ValueError):
        FiniteAlgebra(2, np.zeros((2, 2, 2)), [1])
