"""
Exact linear solving over the rationals.

Rows are scaled to integers and eliminated fraction-free on numpy object
matrices; only back-substitution touches Fractions.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np

from qseries.rational import as_rational, common_denominator

log = logging.getLogger(__name__)


@dataclass
class LinearSolution:
    """Outcome of solve_exact."""
    values: list
    rank: int
    kernel_dimension: int
    pivot_columns: list = field(default_factory=list)
    consistent: bool = True


def _integer_row(values):
    scale = common_denominator(values)
    return [int(as_rational(v) * scale) for v in values]


def _normalize(row):
    content = reduce(gcd, (int(v) for v in row), 0)
    if content > 1:
        row //= content
    return row


def echelon(rows, rhs):
    """
    Fraction-free row echelon form of the augmented system [rows | rhs].

    The pivot in each column is the first row (in input order, among the
    not yet used rows) with a nonzero entry.

    Returns:
        (integer matrix, list of pivot columns)
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    matrix = np.empty((n_rows, n_cols + 1), dtype=object)
    for i, (row, b) in enumerate(zip(rows, rhs)):
        matrix[i, :] = _integer_row(list(row) + [b])

    pivots = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        nonzero = [i for i in range(r, n_rows) if matrix[i, col] != 0]
        if not nonzero:
            continue
        p = nonzero[0]
        if p != r:
            matrix[[r, p], :] = matrix[[p, r], :]
        pivot = matrix[r, col]
        for i in range(r + 1, n_rows):
            factor = matrix[i, col]
            if factor != 0:
                matrix[i, :] = _normalize(pivot * matrix[i, :] - factor * matrix[r, :])
        pivots.append(col)
        r += 1
    return matrix, pivots


def solve_exact(rows, rhs):
    """
    Solve rows * x = rhs exactly.

    Free variables are set to 0, so the returned solution is supported on
    the pivot columns (earliest columns win).

    Args:
        rows: Sequence of equal-length coefficient rows (rationals)
        rhs: Right-hand side, one rational per row

    Returns:
        LinearSolution; `consistent` is False when no solution exists, in
        which case `values` only satisfies the echelon pivot rows
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs must have the same length")
    n_cols = len(rows[0]) if rows else 0
    matrix, pivots = echelon(rows, rhs)
    rank = len(pivots)

    consistent = all(matrix[i, n_cols] == 0 for i in range(rank, len(rows)))
    kernel_dimension = n_cols - rank
    log.debug("Exact solve: %d x %d, rank %d, kernel %d, consistent=%s",
              len(rows), n_cols, rank, kernel_dimension, consistent)
    values = [Fraction(0)] * n_cols
    for r in range(rank - 1, -1, -1):
        col = pivots[r]
        total = Fraction(matrix[r, n_cols])
        for c in range(col + 1, n_cols):
            if matrix[r, c] != 0 and values[c] != 0:
                total -= matrix[r, c] * values[c]
        values[col] = total / matrix[r, col]
    return LinearSolution(values, rank, kernel_dimension, pivots, consistent)
