"""Exact matrix kernels: Bareiss determinants over Z and Z[t], ranks over
Q and Q(t).

Polynomial entries use the dense list convention of :mod:`linkbound.polys`.
Bareiss (fraction-free) elimination keeps every intermediate value in the
base ring, so determinants of integer and integer-polynomial matrices come
out exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import polys


def int_det(matrix) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_rank(matrix) -> int:
    """Rank over Q of a matrix with int/Fraction entries."""
    m = [[Fraction(v) for v in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col] != 0:
                f = m[i][col] / pv
                for j in range(col, cols):
                    m[i][j] -= f * m[rank][j]
        rank += 1
        if rank == rows:
            break
    return rank


def poly_det(matrix) -> list:
    """Determinant of a square matrix of integer polynomials (dense lists),
    via fraction-free Bareiss elimination with row pivoting."""
    n = len(matrix)
    if n == 0:
        return [1]
    m = [[polys.trim(e) for e in row] for row in matrix]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = polys.sub(polys.mul(m[i][j], m[k][k]),
                                polys.mul(m[i][k], m[k][j]))
                m[i][j] = polys.intify(polys.div_exact(num, prev)) if num else []
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return polys.neg(det) if sign < 0 else det


def _integer_poly_row(row) -> list[list]:
    """Scale a row of rational polynomials by a positive integer so every
    coefficient is an int (rank-preserving)."""
    mult = 1
    for p in row:
        for c in p:
            if isinstance(c, Fraction):
                mult = lcm(mult, c.denominator)
    return [[int(c * mult) for c in p] for p in row]


def _strip_row_content(row) -> list[list]:
    g = 0
    for p in row:
        for c in p:
            g = gcd(g, abs(c))
    if g > 1:
        return [[c // g for c in p] for p in row]
    return row


def poly_rank(matrix) -> int:
    """Rank over Q(t) of a matrix of integer/rational polynomials, by
    fraction-free Gaussian elimination (cross-multiplied row operations,
    with content stripping to tame coefficient growth)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    m = [_integer_poly_row([polys.trim(e) for e in row]) for row in matrix]
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col]:
                f = m[i][col]
                new_row = [polys.sub(polys.mul(m[i][j], pv), polys.mul(f, m[rank][j]))
                           for j in range(cols)]
                m[i] = _strip_row_content(new_row)
        rank += 1
        if rank == rows:
            break
    return rank
