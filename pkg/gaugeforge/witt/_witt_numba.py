"""
A numba implementation of the evaluation of Witt structure polynomials over
a finite field given by addition and multiplication tables.

These functions are used by gaugeforge.witt.vectors as a backend and are not
meant to be used directly.

A few doctests for the numba code::

>>> import numpy as np
>>> from gaugeforge.witt.fields import FiniteField
>>> k = FiniteField(3)
>>> coefs = np.array([1, 2], dtype=np.int64)
>>> exps = np.array([[2, 0], [0, 1]], dtype=np.int64)
>>> values = np.array([2, 1], dtype=np.int64)
>>> int(evaluate(coefs, exps, values, k.add_table, k.mul_table))
0

"""
from __future__ import division, absolute_import
import numba
import numpy as np


@numba.jit(nopython=True)
def evaluate(coefs, exps, values, add_table, mul_table):
    """
    Value of sum(coefs[t] * prod(values[v]**exps[t, v])) in the field.

    Coefficients and values are field codes. Terms are visited in order.
    """
    nvars = exps.shape[1]
    maxexp = 0
    for t in range(exps.shape[0]):
        for v in range(nvars):
            if exps[t, v] > maxexp:
                maxexp = exps[t, v]
    powers = np.empty((nvars, maxexp + 1), dtype=np.int64)
    for v in range(nvars):
        powers[v, 0] = 1
        for e in range(1, maxexp + 1):
            powers[v, e] = mul_table[powers[v, e - 1], values[v]]
    total = 0
    for t in range(coefs.shape[0]):
        term = coefs[t]
        for v in range(nvars):
            if term == 0:
                break
            e = exps[t, v]
            if e > 0:
                term = mul_table[term, powers[v, e]]
        total = add_table[total, term]
    return total


@numba.jit(nopython=True)
def evaluate_batch(coefs, exps, values, add_table, mul_table, out):
    """
    Evaluate one polynomial at every row of *values*, writing into *out*.
    """
    for i in range(values.shape[0]):
        out[i] = evaluate(coefs, exps, values[i], add_table, mul_table)
