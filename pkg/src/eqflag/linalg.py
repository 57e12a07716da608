"""Exact linear algebra over the rationals.

Boundary matrices in this project are small and integer-valued, so ranks are
computed with fraction-free (Bareiss-style) elimination over Python ints, with
an optional fast modular pre-pass for vanishing checks.  Nullspaces and linear
solves use Fractions.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

# Mersenne prime; entries stay below 2^31, so int64 products never overflow.
_PRIME = 2147483647


def rank_int(rows):
    """Exact rank of an integer matrix (list of lists of ints)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if f == 0 and prev == 1:
                continue
            row = m[r]
            top = m[rank]
            for c in range(col, ncols):
                row[c] = (p * row[c] - f * top[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows):
    """Rank of an integer matrix modulo a large prime.

    Always a lower bound for the rational rank, which makes it a sound fast
    path for homology *vanishing* checks (betti computed with this rank is an
    upper bound for the true betti number).
    """
    if not rows or not rows[0]:
        return 0
    a = np.array(rows, dtype=np.int64) % _PRIME
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), _PRIME - 2, _PRIME)
        a[rank] = (a[rank] * inv) % _PRIME
        col_vals = a[rank + 1:, col].copy()
        if col_vals.any():
            a[rank + 1:] = (a[rank + 1:] - np.outer(col_vals, a[rank])) % _PRIME
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_exact(rows):
    """Rational rank: modular fast path confirmed by exact elimination.

    rank_mod_p is a lower bound; if it already equals min(nrows, ncols) it is
    exact, otherwise fall back to integer elimination.
    """
    if not rows or not rows[0]:
        return 0
    r = rank_mod_p(rows)
    if r == min(len(rows), len(rows[0])):
        return r
    return rank_int(rows)


def _to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form over Fractions; returns (matrix, pivot_cols)."""
    m = _to_fractions(rows)
    if not m or not m[0]:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(rows, ncols=None):
    """Basis of the right nullspace, as a list of Fraction column vectors."""
    if not rows:
        if ncols is None:
            return []
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve_columns(a_cols, b_cols):
    """Solve A X = B where A's columns are independent; exact, raises if inconsistent.

    a_cols and b_cols are lists of column vectors (equal length).  Returns X as
    a list of columns (coordinates of each b in terms of the a's).
    """
    if not a_cols:
        if any(any(x for x in b) for b in b_cols):
            raise ValueError("inconsistent system")
        return [[] for _ in b_cols]
    nrows = len(a_cols[0])
    k = len(a_cols)
    aug = [[Fraction(a_cols[j][i]) for j in range(k)]
           + [Fraction(b[i]) for b in b_cols] for i in range(nrows)]
    red, pivots = rref(aug)
    if len(pivots) != k or any(p >= k for p in pivots):
        raise ValueError("columns are dependent or system inconsistent")
    # rows beyond rank must be zero in the b-part
    for r in range(k, nrows):
        if r < len(red) and any(red[r][k:]):
            raise ValueError("inconsistent system")
    return [[red[r][k + j] for r in range(k)] for j in range(len(b_cols))]


def solve_square(rows, rhs):
    """Solve a square nonsingular rational system; rhs is a vector."""
    n = len(rows)
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    (x,) = solve_columns(cols, [list(rhs)])
    return x
