"""Fraction-free exact linear algebra.

A single entry point solves ``M x = b`` for several right-hand sides at once
and reports ``det(M)`` as a by-product.  The elimination runs on a row-scaled
integer copy of the augmented system using Bareiss' fraction-free scheme, so
intermediate values stay integers (each an exact minor of the scaled matrix)
instead of fractions with exploding denominators.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm, prod
from collections.abc import Sequence


def solve_with_det(
    matrix: Sequence[Sequence[Fraction]],
    rhs_columns: Sequence[Sequence[Fraction]],
) -> tuple[Fraction, list[list[Fraction]] | None]:
    """Return ``(det(matrix), solutions)``.

    ``solutions[k]`` solves ``matrix @ x = rhs_columns[k]``; it is None iff the
    determinant is zero.  The 0x0 system has determinant 1 and empty solutions.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if any(len(col) != n for col in rhs_columns):
        raise ValueError("right-hand sides must have length n")
    if n == 0:
        return Fraction(1), [[] for _ in rhs_columns]

    width = n + len(rhs_columns)
    scales = []
    rows: list[list[int]] = []
    for i in range(n):
        entries = list(matrix[i]) + [col[i] for col in rhs_columns]
        scale = lcm(*(Fraction(e).denominator for e in entries)) if entries else 1
        scales.append(scale)
        rows.append([int(Fraction(e) * scale) for e in entries])

    sign = 1
    previous_pivot = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot_row is None:
            return Fraction(0), None
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            row_i, row_k = rows[i], rows[k]
            factor = row_i[k]
            for j in range(k + 1, width):
                # Exact by Bareiss: every intermediate entry is a minor.
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // previous_pivot
            row_i[k] = 0
        previous_pivot = pivot

    det = Fraction(sign * rows[n - 1][n - 1], prod(scales))

    solutions = []
    for c in range(len(rhs_columns)):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(rows[i][n + c])
            for j in range(i + 1, n):
                acc -= rows[i][j] * x[j]
            x[i] = acc / rows[i][i]
        solutions.append(x)
    return det, solutions


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant via the same fraction-free elimination."""
    det, _ = solve_with_det(matrix, [])
    return det
