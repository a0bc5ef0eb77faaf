"""Exact linear algebra over the rationals.

Fraction-free Gaussian elimination (Bareiss): each row is first scaled to
integers, then eliminated with the two-by-two determinant update whose
divisions are exact.  Pivoting picks the first row with a nonzero entry --
there is no magnitude pivoting to do in exact arithmetic -- which makes
echelon forms, and everything derived from them, deterministic.

Matrices are plain lists of lists of Fractions (or ints).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Matrix = Sequence[Sequence[Fraction]]


def _row_to_int(row) -> tuple[list[int], int]:
    """Scale a rational row to integers; return (row, scale factor)."""
    scale = 1
    for x in row:
        f = Fraction(x)
        scale = scale * f.denominator // gcd(scale, f.denominator)
    return [int(Fraction(x) * scale) for x in row], scale


class Echelon:
    """Result of fraction-free forward elimination."""

    def __init__(self, rows: list[list[int]], pivot_cols: list[int],
                 swap_sign: int, row_scales: list[int]):
        self.rows = rows
        self.pivot_cols = pivot_cols
        self.swap_sign = swap_sign
        self.row_scales = row_scales

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


def echelon(matrix: Matrix, pivot_limit: Optional[int] = None) -> Echelon:
    """Bring a matrix to row echelon form without rational arithmetic.

    ``pivot_limit`` restricts pivot columns to indices below it (used for
    augmented systems, where the right-hand side must never pivot).
    """
    rows = []
    scales = []
    for r in matrix:
        ir, s = _row_to_int(r)
        rows.append(ir)
        scales.append(s)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    limit = ncols if pivot_limit is None else pivot_limit
    pivot_cols: list[int] = []
    sign = 1
    prev = 1
    pr = 0
    for pc in range(limit):
        found = None
        for i in range(pr, nrows):
            if rows[i][pc] != 0:
                found = i
                break
        if found is None:
            continue
        if found != pr:
            rows[pr], rows[found] = rows[found], rows[pr]
            scales[pr], scales[found] = scales[found], scales[pr]
            sign = -sign
        piv = rows[pr][pc]
        for i in range(pr + 1, nrows):
            if all(x == 0 for x in rows[i]):
                continue
            factor = rows[i][pc]
            for j in range(ncols):
                rows[i][j] = (rows[i][j] * piv - factor * rows[pr][j]) // prev
        prev = piv
        pivot_cols.append(pc)
        pr += 1
        if pr == nrows:
            break
    return Echelon(rows, pivot_cols, sign, scales)


def rank(matrix: Matrix) -> int:
    if not matrix:
        return 0
    return echelon(matrix).rank


def determinant(matrix: Matrix) -> Fraction:
    """Exact determinant of a square matrix."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant requires a square matrix")
    ech = echelon(matrix)
    if ech.rank < n:
        return Fraction(0)
    # In Bareiss elimination the last pivot equals the determinant of the
    # integer matrix; undo the row scalings and swap sign.
    det_int = ech.rows[n - 1][n - 1]
    total_scale = 1
    for s in ech.row_scales:
        total_scale *= s
    return Fraction(ech.swap_sign * det_int, total_scale)


def _back_substitute(ech: Echelon, ncols: int,
                     fixed: dict[int, Fraction],
                     rhs: Optional[list[Fraction]] = None) -> list[Fraction]:
    """Solve the echelon system for the pivot variables.

    ``fixed`` assigns the free variables; ``rhs`` is the (already reduced)
    right-hand side per pivot row, defaulting to zero.
    """
    x = [Fraction(0)] * ncols
    for col, val in fixed.items():
        x[col] = val
    for i in range(len(ech.pivot_cols) - 1, -1, -1):
        pc = ech.pivot_cols[i]
        row = ech.rows[i]
        acc = rhs[i] if rhs is not None else Fraction(0)
        for j in range(pc + 1, ncols):
            if row[j]:
                acc -= row[j] * x[j]
        x[pc] = acc / row[pc]
    return x


def nullspace(matrix: Matrix, ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of the kernel, one vector per free column, deterministic."""
    if ncols is None:
        if not matrix:
            raise ValueError("cannot infer column count of an empty matrix")
        ncols = len(matrix[0])
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ech = echelon(matrix)
    pivots = set(ech.pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        fixed = {c: Fraction(int(c == free)) for c in range(ncols) if c not in pivots}
        basis.append(_back_substitute(ech, ncols, fixed))
    return basis


def solve(matrix: Matrix, rhs: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """A particular solution of A x = b with free variables set to 0.

    Returns None when the system is inconsistent.
    """
    if len(matrix) != len(rhs):
        raise ValueError("row count mismatch between matrix and right-hand side")
    if not matrix:
        return []
    ncols = len(matrix[0])
    augmented = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ech = echelon(augmented, pivot_limit=ncols)
    # Inconsistent iff a fully reduced row still has a nonzero RHS entry.
    for i in range(ech.rank, len(ech.rows)):
        if not any(ech.rows[i][:ncols]) and ech.rows[i][ncols] != 0:
            return None
    pivots = set(ech.pivot_cols)
    fixed = {c: Fraction(0) for c in range(ncols) if c not in pivots}
    reduced_rhs = [Fraction(ech.rows[i][ncols]) for i in range(ech.rank)]
    return _back_substitute(ech, ncols, fixed, rhs=reduced_rhs)
