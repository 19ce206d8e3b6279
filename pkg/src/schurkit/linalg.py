"""Exact linear algebra over the rationals by fraction-free (Bareiss) elimination.

Matrices are lists of rows whose entries are ``int`` or ``Fraction``.  Rows
with fractions are scaled to integers first, which leaves rank unchanged and
scales the determinant by a known factor.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = Sequence[Sequence["int | Fraction"]]


def _integer_rows(m: Matrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns the rows and the product of scale factors."""
    out = []
    factor = Fraction(1)
    for row in m:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
        factor *= den
    return out, factor


def rank(m: Matrix) -> int:
    a, _ = _integer_rows(m)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        row_r = a[r]
        for i in range(r + 1, nrows):
            row_i = a[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def det(m: Matrix) -> Fraction | int:
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a, factor = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    value = Fraction(sign * a[n - 1][n - 1]) / factor
    return int(value) if value.denominator == 1 else value

