"""
Exact linear algebra over the chain ring W_n(F_q) and over F_p.

Matrices over a :class:`~gaugeforge.witt.chainring.ChainRing` are int64
arrays of shape (rows, cols, d). Elimination always pivots on the entry of
lowest p-adic valuation, then on the lowest column index, then on the lowest
row index, so results are deterministic.

**Chain ring**

* :func:`~gaugeforge.witt.linalg.smith`: U A V = diag(p^v_1, ..., p^v_r)
* :func:`~gaugeforge.witt.linalg.howell_form`: canonical row span basis
* :func:`~gaugeforge.witt.linalg.kernel_generators`
* :func:`~gaugeforge.witt.linalg.quotient`
* :func:`~gaugeforge.witt.linalg.inverse`
* :func:`~gaugeforge.witt.linalg.same_row_span`

**Prime field** (numba backend)

* :func:`~gaugeforge.witt.linalg.rref_mod_p`
* :func:`~gaugeforge.witt.linalg.rank_mod_p`
* :func:`~gaugeforge.witt.linalg.nullspace_mod_p`
* :func:`~gaugeforge.witt.linalg.solve_mod_p`

----
"""
from __future__ import division, absolute_import
from future.builtins import range
import logging

import numpy as np

from . import _linalg_numba

log = logging.getLogger(__name__)


def _valuations(ring, block):
    "Valuation of every entry of a (rows, cols, d) block."
    rows, cols = block.shape[:2]
    vals = np.full((rows, cols), ring.n, dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            vals[i, j] = ring.valuation(block[i, j])
    return vals


def smith(ring, matrix):
    """
    Smith decomposition over the chain ring.

    Parameters:

    * ring : ChainRing
        The coefficient ring.
    * matrix : array (rows, cols, d)
        The matrix A.

    Returns:

    * U, vals, V, Uinv : arrays and list
        Invertible U (rows x rows) and V (cols x cols) with U A V diagonal,
        its first ``len(vals)`` diagonal entries equal to p^vals[i] (vals
        weakly increasing, all < n) and the rest zero. Uinv is the inverse of
        U.

    """
    a = np.array(matrix, dtype=np.int64) % ring.modulus
    rows, cols = a.shape[:2]
    u = ring.identity(rows)
    uinv = ring.identity(rows)
    v = ring.identity(cols)
    vals = []
    for t in range(min(rows, cols)):
        block = _valuations(ring, a[t:, t:])
        best = block.min() if block.size else ring.n
        if best >= ring.n:
            break
        # lowest valuation, then lowest column, then lowest row
        cand = np.argwhere(block == best)
        order = np.lexsort((cand[:, 0], cand[:, 1]))
        i, j = cand[order[0]] + t
        if i != t:
            a[[t, i]] = a[[i, t]]
            u[[t, i]] = u[[i, t]]
            uinv[:, [t, i]] = uinv[:, [i, t]]
        if j != t:
            a[:, [t, j]] = a[:, [j, t]]
            v[:, [t, j]] = v[:, [j, t]]
        unit = ring.divide_p(a[t, t], best)
        unit_inv = ring.unit_inverse(unit)
        a[t] = ring.scale(unit_inv, a[t])
        u[t] = ring.scale(unit_inv, u[t])
        uinv[:, t] = ring.scale(unit, uinv[:, t])
        for i in range(t + 1, rows):
            if not ring.is_zero(a[i, t]):
                q = ring.divide_p(a[i, t], best)
                a[i] = (a[i] - ring.scale(q, a[t])) % ring.modulus
                u[i] = (u[i] - ring.scale(q, u[t])) % ring.modulus
                uinv[:, t] = (uinv[:, t] +
                              ring.scale(q, uinv[:, i])) % ring.modulus
        for j in range(t + 1, cols):
            if not ring.is_zero(a[t, j]):
                q = ring.divide_p(a[t, j], best)
                a[:, j] = (a[:, j] - ring.scale(q, a[:, t])) % ring.modulus
                v[:, j] = (v[:, j] - ring.scale(q, v[:, t])) % ring.modulus
        vals.append(int(best))
    return u, vals, v, uinv


def howell_form(ring, matrix):
    """
    The Howell form of the row span of a matrix.

    Rows are in echelon form, every pivot equals p^v exactly, entries above
    a pivot are reduced modulo that pivot, and the row set has the Howell
    property (every element of the span with zeros in the first j columns
    is a combination of the rows with zeros there). The result depends only
    on the row span.

    Parameters:

    * ring : ChainRing
    * matrix : array (rows, cols, d)

    Returns:

    * form : array (s, cols, d)
        The non-zero rows of the Howell form.
    * pivots : list of (column, valuation)

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 2)
        >>> form, pivots = howell_form(R, R.from_integers([[2, 2], [0, 2]]))
        >>> form[..., 0]
        array([[2, 0],
               [0, 2]])
        >>> pivots
        [(0, 1), (1, 1)]

    """
    matrix = np.array(matrix, dtype=np.int64) % ring.modulus
    cols = matrix.shape[1]
    work = [row for row in matrix if not ring.is_zero(row)]
    form = []
    pivots = []
    for col in range(cols):
        candidates = [k for k, row in enumerate(work)
                      if ring.valuation(row[col]) < ring.n]
        if not candidates:
            continue
        vals = [ring.valuation(work[k][col]) for k in candidates]
        best = min(vals)
        chosen = candidates[vals.index(best)]
        pivot = work.pop(chosen)
        unit = ring.divide_p(pivot[col], best)
        pivot = ring.scale(ring.unit_inverse(unit), pivot)
        remaining = []
        for row in work:
            if not ring.is_zero(row[col]):
                q = ring.divide_p(row[col], best)
                row = (row - ring.scale(q, pivot)) % ring.modulus
            if not ring.is_zero(row):
                remaining.append(row)
        annex = ring.scale(ring.p_power(ring.n - best), pivot)
        if not ring.is_zero(annex):
            remaining.append(annex)
        work = remaining
        form.append(pivot)
        pivots.append((col, best))
    # reduce the entries above each pivot
    for idx, (col, val) in enumerate(pivots):
        modulus = ring.p**val
        for above in range(idx):
            entry = form[above][col]
            reduced = entry % modulus
            q = ring.divide_p(entry - reduced, val) if val else entry
            if not ring.is_zero(q):
                form[above] = (form[above] -
                               ring.scale(q, form[idx])) % ring.modulus
    if form:
        result = np.array(form, dtype=np.int64)
    else:
        result = ring.zeros(0, cols)
    return result, pivots


def same_row_span(ring, a, b):
    "True if two matrices with the same number of columns span the same rows."
    fa, pa = howell_form(ring, a)
    fb, pb = howell_form(ring, b)
    return pa == pb and np.array_equal(fa, fb)


def kernel_generators(ring, matrix):
    """
    Generators (as columns) of the kernel of A : R^cols -> R^rows.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    rows, cols = matrix.shape[:2]
    if cols == 0:
        return ring.zeros(0, 0)
    if rows == 0:
        return ring.identity(cols)
    _, vals, v, _ = smith(ring, matrix)
    gens = []
    for i in range(cols):
        if i < len(vals):
            if vals[i] == 0:
                continue
            gens.append(ring.scale(ring.p_power(ring.n - vals[i]), v[:, i]))
        else:
            gens.append(v[:, i])
    if not gens:
        return ring.zeros(cols, 0)
    return np.stack(gens, axis=1) % ring.modulus


def quotient(ring, relations, size):
    """
    Canonical form of R^size modulo the span of the columns of *relations*.

    Returns:

    * divisors : list of int
        Weakly decreasing exponents e_i with the quotient isomorphic to the
        sum of W_{e_i}.
    * projection : array (len(divisors), size, d)
        Matrix of R^size -> quotient in the new generators.
    * section : array (size, len(divisors), d)
        Lifts of the new generators.

    """
    relations = np.asarray(relations, dtype=np.int64)
    if relations.ndim != 3 or relations.shape[1] == 0:
        relations = ring.zeros(size, 0)
    u, vals, _, uinv = smith(ring, relations)
    kept = []
    for i in range(size):
        e = vals[i] if i < len(vals) else ring.n
        if e > 0:
            kept.append((e, i))
    # decreasing divisor, stable on the original order
    kept.sort(key=lambda item: (-item[0], item[1]))
    divisors = [e for e, _ in kept]
    index = [i for _, i in kept]
    projection = u[index] if index else ring.zeros(0, size)
    section = uinv[:, index] if index else ring.zeros(size, 0)
    for row, e in enumerate(divisors):
        projection[row] = ring.reduce(projection[row], e)
    return divisors, projection, section


def inverse(ring, matrix):
    """
    Inverse of a square matrix over the chain ring.

    Raises ``ValueError`` if the matrix is not invertible.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    size = matrix.shape[0]
    if size == 0:
        return ring.zeros(0, 0)
    u, vals, v, _ = smith(ring, matrix)
    if len(vals) < size or any(vals):
        raise ValueError("Matrix is not invertible over the chain ring")
    return ring.matmul(v, u)


def is_invertible(ring, matrix):
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.shape[0] != matrix.shape[1]:
        return False
    if matrix.shape[0] == 0:
        return True
    _, vals, _, _ = smith(ring, matrix)
    return len(vals) == matrix.shape[0] and not any(vals)


def rref_mod_p(matrix, p):
    """
    Reduced row echelon form modulo a prime.

    Returns:

    * reduced : 2d-array
    * pivots : list of int
        Pivot columns.

    """
    reduced = np.array(matrix, dtype=np.int64) % p
    if reduced.size == 0:
        return reduced, []
    pivots = np.zeros(min(reduced.shape), dtype=np.int64)
    rank = _linalg_numba.rref(reduced, p, pivots)
    return reduced, [int(c) for c in pivots[:rank]]


def rank_mod_p(matrix, p):
    """
    Rank of an integer matrix modulo a prime.

    >>> rank_mod_p([[1, 2], [2, 4]], 3)
    1
    >>> rank_mod_p([[1, 2], [2, 4]], 5)
    1
    >>> rank_mod_p([[1, 0], [0, 3]], 3)
    1

    """
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.size == 0:
        return 0
    _, pivots = rref_mod_p(matrix, p)
    return len(pivots)


def nullspace_mod_p(matrix, p):
    """
    Basis (as rows) of the right null space {x : A x = 0} modulo p.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    rows, cols = matrix.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = rref_mod_p(matrix, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-reduced[row, c]) % p
    return basis


def solve_mod_p(matrix, rhs, p):
    """
    One solution x of A x = b modulo p, or None if there is none.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1, 1)
    rows, cols = matrix.shape
    augmented = np.hstack([matrix, rhs]) % p
    reduced, pivots = rref_mod_p(augmented, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = reduced[row, cols]
    return x
