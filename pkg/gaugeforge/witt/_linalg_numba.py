"""
A numba implementation of dense Gauss-Jordan elimination modulo a prime.

These functions are used by gaugeforge.witt.linalg as a backend and are not
meant to be used directly.

A few doctests for the numba code::

>>> import numpy as np
>>> matrix = np.array([[1, 1, 0], [1, 1, 1], [0, 0, 1]], dtype=np.int64)
>>> pivots = np.zeros(3, dtype=np.int64)
>>> rank = rref(matrix, 2, pivots)
>>> int(rank)
2
>>> matrix
array([[1, 1, 0],
       [0, 0, 1],
       [0, 0, 0]])
>>> pivots[:rank]
array([0, 2])

"""
from __future__ import division, absolute_import
import numba


@numba.jit(nopython=True)
def inverse(a, p):
    "Inverse of a non-zero residue modulo the prime p."
    r0 = p
    r1 = a % p
    s0 = 0
    s1 = 1
    while r1 != 0:
        q = r0 // r1
        tmp = r0 - q*r1
        r0 = r1
        r1 = tmp
        tmp = s0 - q*s1
        s0 = s1
        s1 = tmp
    return s0 % p


@numba.jit(nopython=True)
def rref(matrix, p, pivots):
    """
    Reduce *matrix* in place to reduced row echelon form modulo p.

    Pivot columns are written to *pivots*. Returns the rank.
    """
    rows = matrix.shape[0]
    cols = matrix.shape[1]
    for i in range(rows):
        for j in range(cols):
            matrix[i, j] = matrix[i, j] % p
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = -1
        for i in range(rank, rows):
            if matrix[i, col] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for j in range(cols):
                tmp = matrix[rank, j]
                matrix[rank, j] = matrix[pivot, j]
                matrix[pivot, j] = tmp
        inv = inverse(matrix[rank, col], p)
        for j in range(cols):
            matrix[rank, j] = (matrix[rank, j]*inv) % p
        for i in range(rows):
            if i != rank:
                factor = matrix[i, col]
                if factor != 0:
                    for j in range(cols):
                        matrix[i, j] = (matrix[i, j] -
                                        factor*matrix[rank, j]) % p
        pivots[rank] = col
        rank += 1
    return rank
