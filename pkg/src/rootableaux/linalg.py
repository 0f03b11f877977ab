"""Small exact linear-algebra helpers over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[Fraction, ...]


def rref(rows: Sequence[Sequence]) -> tuple[Row, ...]:
    """Reduced row echelon form with zero rows dropped.

    Entries may be ints or Fractions; the result is canonical for the row
    space, so it can be used as a hashable key.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        piv = m[pivot_row][col]
        if piv != 1:
            m[pivot_row] = [x / piv for x in m[pivot_row]]
        prow = m[pivot_row]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], prow)]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


def pivots(echelon: Sequence[Sequence[Fraction]]) -> list[int]:
    """Pivot column of each row of a reduced echelon matrix."""
    out = []
    for r in echelon:
        for c, x in enumerate(r):
            if x != 0:
                out.append(c)
                break
    return out


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    n = len(matrix)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    red = rref(aug)
    if len(red) < n or pivots(red)[-1] >= n:
        raise ValueError("singular matrix")
    return [list(r[n:]) for r in red]
