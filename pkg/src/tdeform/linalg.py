"""Fraction-free integer linear algebra."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence, Union

Number = Union[int, Fraction]


def _to_int_rows(rows: Sequence[Sequence[Number]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * den) for x in r])
    return out


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank over Q by Bareiss elimination (entries stay integral)."""
    m = _to_int_rows(rows)
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                m[i][j] = (p * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def det3(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def cross3(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def unimodular_kernel_basis(chi: Sequence[int]) -> list[list[int]]:
    """Columns ``[f1, f2, g]`` of a determinant-1 integer matrix with ``chi(f1) = chi(f2) = 0``, ``chi(g) = 1``.

    Column operations reduce the row ``chi`` to ``(0, 0, 1)``; ``chi`` must be primitive.
    """
    n = len(chi)
    row = list(chi)
    cols = [[int(i == j) for i in range(n)] for j in range(n)]  # cols[j] is column j
    # Euclid on the row entries, pushing the gcd to the last column
    for j in range(n - 1):
        while row[j] != 0:
            q = row[n - 1] // row[j]
            row[n - 1] -= q * row[j]
            cols[n - 1] = [a - q * b for a, b in zip(cols[n - 1], cols[j])]
            row[j], row[n - 1] = row[n - 1], row[j]
            cols[j], cols[n - 1] = cols[n - 1], cols[j]
    if row[n - 1] < 0:
        row[n - 1] = -row[n - 1]
        cols[n - 1] = [-a for a in cols[n - 1]]
    if row[n - 1] != 1:
        raise ValueError(f"{tuple(chi)!r} is not primitive")
    if n == 3 and det3(*cols) < 0:
        cols[0] = [-a for a in cols[0]]
    return cols
