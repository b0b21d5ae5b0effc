"""
Tests for chain ring and mod p linear algebra.
"""
from __future__ import absolute_import, division
import itertools

import numpy as np
import numpy.testing as npt
from pytest import raises

from ..fields import FiniteField
from ..chainring import ChainRing
from .. import linalg
from ..modules import random_invertible


def _row_span(ring, matrix):
    "All elements of the row span, by brute force."
    rows = matrix.shape[0]
    span = set()
    coefficients = list(ring.elements())
    for combo in itertools.product(coefficients, repeat=rows):
        total = np.zeros(matrix.shape[1:], dtype=np.int64)
        for c, row in zip(combo, matrix):
            total = total + ring.scale(c, row)
        span.add(tuple((total % ring.modulus).ravel()))
    return span


def test_smith_decomposition():
    "U A V is diagonal with entries p^v and U Uinv = I"
    rng = np.random.RandomState(0)
    for field, n in [(FiniteField(2), 3), (FiniteField(3, 2), 2)]:
        R = ChainRing(field, n)
        for shape in [(2, 3), (3, 3), (3, 1)]:
            a = rng.randint(0, R.modulus, size=shape + (R.d,))
            # make low valuations unlikely to dominate
            a[0] = R.scale(R.p_power(1), a[0])
            u, vals, v, uinv = linalg.smith(R, a)
            d = R.matmul(R.matmul(u, a), v)
            expected = R.zeros(*shape)
            for i, e in enumerate(vals):
                expected[i, i] = R.p_power(e)
            npt.assert_array_equal(d, expected)
            npt.assert_array_equal(R.matmul(u, uinv), R.identity(shape[0]))
            assert vals == sorted(vals)


def test_howell_form_canonical():
    "Row operations do not change the Howell form"
    rng = np.random.RandomState(1)
    R = ChainRing(2, 3)
    for _ in range(10):
        a = rng.randint(0, 8, size=(3, 3, 1))
        a[1] = R.scale(R.p_power(1), a[1])
        change = random_invertible(R, 3, rng)
        first, pivots = linalg.howell_form(R, a)
        second, pivots2 = linalg.howell_form(R, R.matmul(change, a))
        assert pivots == pivots2
        npt.assert_array_equal(first, second)


def test_howell_form_span_oracle():
    "The Howell rows span the same elements as the input"
    rng = np.random.RandomState(2)
    R = ChainRing(2, 2)
    for _ in range(10):
        a = rng.randint(0, 4, size=(3, 2, 1))
        form, _ = linalg.howell_form(R, a)
        assert _row_span(R, a) == _row_span(R, form)


def test_howell_form_example():
    "Pivots are normalized to powers of p"
    R = ChainRing(2, 2)
    form, pivots = linalg.howell_form(R, R.from_integers([[2, 2], [0, 2]]))
    npt.assert_array_equal(form[..., 0], [[2, 0], [0, 2]])
    assert pivots == [(0, 1), (1, 1)]
    assert linalg.same_row_span(R, R.from_integers([[1, 1]]),
                                R.from_integers([[3, 3]]))
    assert not linalg.same_row_span(R, R.from_integers([[1, 1]]),
                                    R.from_integers([[2, 2]]))


def test_kernel_generators_oracle():
    "Kernel generators span the full kernel"
    rng = np.random.RandomState(3)
    R = ChainRing(2, 2)
    for _ in range(10):
        a = rng.randint(0, 4, size=(2, 3, 1))
        gens = linalg.kernel_generators(R, a)
        npt.assert_array_equal(R.matmul(a, gens) % 4, 0)
        kernel = set()
        for x in itertools.product(range(4), repeat=3):
            if not (R.matvec(a, np.array(x).reshape(3, 1))).any():
                kernel.add(tuple(x))
        assert _row_span(R, np.transpose(gens, (1, 0, 2))) == kernel


def test_quotient():
    "Z/4 modulo (2) is Z/2 and Z/4^2 modulo (1, 2) is Z/4"
    R = ChainRing(2, 2)
    divisors, projection, section = linalg.quotient(
        R, R.from_integers([[2]]), 1)
    assert divisors == [1]
    divisors, projection, section = linalg.quotient(
        R, R.from_integers([[1], [2]]), 2)
    assert divisors == [2]
    npt.assert_array_equal(R.matmul(projection, R.from_integers([[1], [2]])),
                           R.zeros(1, 1))
    divisors, _, _ = linalg.quotient(R, R.zeros(3, 0), 3)
    assert divisors == [2, 2, 2]


def test_inverse():
    "Inverse of an invertible matrix and rejection of a singular one"
    rng = np.random.RandomState(5)
    R = ChainRing(FiniteField(2, 2), 3)
    a = random_invertible(R, 3, rng)
    npt.assert_array_equal(R.matmul(a, linalg.inverse(R, a)), R.identity(3))
    assert linalg.is_invertible(R, a)
    with raises(ValueError):
        linalg.inverse(R, R.from_integers([[1, 0], [0, 2]]))


def test_mod_p_helpers():
    "Rank, null space and solutions modulo p"
    a = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank_mod_p(a, 7) == 2
    null = linalg.nullspace_mod_p(a, 7)
    assert null.shape == (1, 3)
    npt.assert_array_equal(np.dot(a, null.T) % 7, 0)
    x = linalg.solve_mod_p(a, [1, 2, 1], 7)
    npt.assert_array_equal(np.dot(a, x) % 7, [1, 2, 1])
    assert linalg.solve_mod_p(a, [1, 0, 0], 7) is None
    assert linalg.rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == 0
