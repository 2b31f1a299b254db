"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries are ints or Fractions.  Everything here is
desk-scale (rank <= 20), so plain Gauss-Jordan is fine.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence]


def _to_frac(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def solve(a: Matrix, b: Sequence) -> list[Fraction]:
    """Solve a x = b for square nonsingular a."""
    n = len(a)
    aug = [row + [Fraction(bi)] for row, bi in zip(_to_frac(a), b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def inverse(a: Matrix) -> list[list[Fraction]]:
    n = len(a)
    cols = [solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def rank(rows: Matrix) -> int:
    m = _to_frac(rows)
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def bilinear(u: Sequence, gram: Matrix, v: Sequence):
    return sum(ui * g for ui, g in zip(u, matvec(gram, v)))


def frac_str(q) -> str:
    """Render an exact rational as "p/q" (or "p" for integers)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rank_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination.

    Rows are divided by their content after every update, which keeps the
    entries small for the sparse, small-coefficient matrices used here.
    """
    from math import gcd

    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        prow = m[r]
        for i in range(r + 1, len(m)):
            c = m[i][col]
            if c:
                row = [p * x - c * y for x, y in zip(m[i], prow)]
                g = 0
                for x in row:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                m[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r
