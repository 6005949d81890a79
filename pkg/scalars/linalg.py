"""
Exact Gaussian elimination over Scalar (Fraction or Q(sqrt5)).
"""
from __future__ import annotations

from typing import List, Optional, Sequence

from .field import Scalar, ZERO, ONE, is_zero


def _first_nonzero(vector: Sequence[Scalar]) -> Optional[int]:
    for index, value in enumerate(vector):
        if not is_zero(value):
            return index
    return None


class Echelon:
    """
    Incrementally built row-echelon basis of a span.

    Each stored row is reduced against the earlier ones, so reducing a
    vector against the rows in insertion order clears every pivot column.
    """

    def __init__(self, dimension: int, rows=(), pivots=()):
        self.dimension = dimension
        self.rows: List[tuple] = list(rows)
        self.pivots: List[int] = list(pivots)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence[Scalar]) -> tuple:
        v = list(vector)
        for row, pivot in zip(self.rows, self.pivots):
            factor = v[pivot]
            if is_zero(factor):
                continue
            factor = factor / row[pivot]
            for c in range(pivot, self.dimension):
                if not is_zero(row[c]):
                    v[c] = v[c] - factor * row[c]
        return tuple(v)

    def contains(self, vector: Sequence[Scalar]) -> bool:
        return _first_nonzero(self.reduce(vector)) is None

    def extended(self, vector: Sequence[Scalar]) -> Optional["Echelon"]:
        """Copy with ``vector`` added, or None when it is already in the span."""
        reduced = self.reduce(vector)
        pivot = _first_nonzero(reduced)
        if pivot is None:
            return None
        return Echelon(self.dimension, self.rows + [reduced], self.pivots + [pivot])

    def add(self, vector: Sequence[Scalar]) -> bool:
        reduced = self.reduce(vector)
        pivot = _first_nonzero(reduced)
        if pivot is None:
            return False
        self.rows.append(reduced)
        self.pivots.append(pivot)
        return True


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    rows = [tuple(r) for r in rows]
    if not rows:
        return 0
    echelon = Echelon(len(rows[0]))
    for row in rows:
        echelon.add(row)
    return echelon.rank


def solve_combination(basis: Sequence[Sequence[Scalar]], target: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """
    Coefficients c with sum(c[i] * basis[i]) == target, for an independent
    ``basis``; None if target is outside the span.
    """
    k = len(basis)
    n = len(target)
    # augmented system, one equation per coordinate
    m = [[basis[i][c] for i in range(k)] + [target[c]] for c in range(n)]
    pivot_cols = []
    r = 0
    for col in range(k):
        pick = next((i for i in range(r, n) if not is_zero(m[i][col])), None)
        if pick is None:
            continue
        m[r], m[pick] = m[pick], m[r]
        lead = m[r][col]
        m[r] = [value / lead for value in m[r]]
        for i in range(n):
            if i != r and not is_zero(m[i][col]):
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
    for i in range(r, n):
        if not is_zero(m[i][k]):
            return None
    solution = [ZERO] * k
    for i, col in enumerate(pivot_cols):
        solution[col] = m[i][k]
    return solution


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    m = [list(row) for row in matrix]
    n = len(m)
    det = ONE
    for col in range(n):
        pick = next((i for i in range(col, n) if not is_zero(m[i][col])), None)
        if pick is None:
            return ZERO
        if pick != col:
            m[col], m[pick] = m[pick], m[col]
            det = -det
        lead = m[col][col]
        det = det * lead
        for i in range(col + 1, n):
            if not is_zero(m[i][col]):
                f = m[i][col] / lead
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


def direction_key(vector: Sequence[Scalar]) -> Optional[tuple]:
    """Vector scaled so its first non-zero entry is 1; equal keys mean proportional."""
    lead = _first_nonzero(vector)
    if lead is None:
        return None
    scale = vector[lead]
    return tuple(value / scale for value in vector)


def column_space(vectors: Sequence[Sequence[Scalar]], dimension: int) -> List[tuple]:
    echelon = Echelon(dimension)
    basis = []
    for v in vectors:
        if echelon.add(v):
            basis.append(tuple(v))
    return basis
