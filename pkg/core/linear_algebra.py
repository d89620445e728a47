from fractions import Fraction
from typing import Sequence

from core.errors import ContractViolationError, DimensionMismatchError


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve the square system matrix * x = rhs exactly.

    Pivots on the first nonzero entry in row order.
    """
    size = len(matrix)
    if len(rhs) != size or any(len(row) != size for row in matrix):
        raise DimensionMismatchError("solve expects a square matrix and a matching right hand side")

    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise ContractViolationError(f"singular system: no pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        pivot_row = a[col]
        for r in range(col + 1, size):
            factor = a[r][col] / pivot_row[col]
            if factor:
                row = a[r]
                for c in range(col, size + 1):
                    row[c] -= factor * pivot_row[c]

    x = [Fraction(0)] * size
    for r in reversed(range(size)):
        s = a[r][size] - sum(a[r][c] * x[c] for c in range(r + 1, size))
        x[r] = s / a[r][r]
    return x


class EchelonBasis:
    """Incrementally built row echelon basis over the rationals."""

    def __init__(self, width: int):
        self.width = width
        self.rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.width:
            raise DimensionMismatchError(f"vector of length {len(vector)} for a basis of width {self.width}")
        v = [Fraction(x) for x in vector]
        for col in sorted(self.rows):
            if v[col]:
                factor = v[col]
                row = self.rows[col]
                for c in range(col, self.width):
                    v[c] -= factor * row[c]
        return v

    def add_if_independent(self, vector: Sequence) -> bool:
        v = self.reduce(vector)
        pivot = next((c for c, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        lead = v[pivot]
        self.rows[pivot] = [x / lead for x in v]
        return True
