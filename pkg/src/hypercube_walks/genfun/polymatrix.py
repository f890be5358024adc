from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from hypercube_walks.core.errors import DimensionMismatchError, InexactDivisionError, VerificationError
from hypercube_walks.core.matrix import IntMatrix
from hypercube_walks.core.poly import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyMatrix:
    size: int
    entries: Tuple[IntPolynomial, ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("size must be >= 1")
        if len(self.entries) != self.size * self.size:
            raise ValueError("entry count does not match size")

    @classmethod
    def pencil(cls, adjacency: IntMatrix) -> "PolyMatrix":
        # I - tA
        if not adjacency.is_square:
            raise DimensionMismatchError("adjacency matrix must be square")
        size = adjacency.rows
        return cls(
            size,
            tuple(
                IntPolynomial.linear(1 if i == j else 0, -adjacency[i, j])
                for i in range(size)
                for j in range(size)
            ),
        )

    def __getitem__(self, key: Tuple[int, int]) -> IntPolynomial:
        i, j = key
        return self.entries[i * self.size + j]

    def to_rows(self) -> List[List[IntPolynomial]]:
        return [list(self.entries[i * self.size : (i + 1) * self.size]) for i in range(self.size)]

    def replace_column(self, column: int, values: Sequence[IntPolynomial]) -> "PolyMatrix":
        if len(values) != self.size:
            raise DimensionMismatchError("replacement column has the wrong length")
        rows = self.to_rows()
        for i, value in enumerate(values):
            rows[i][column] = value
        return PolyMatrix(self.size, tuple(x for row in rows for x in row))


def det_fraction_free(matrix: PolyMatrix) -> IntPolynomial:
    """Bareiss elimination over Z[t]; every division is exact.

    Pivots are taken from the lowest-index row with a nonzero entry in the
    pivot column. A column with no such row makes the matrix singular, so the
    determinant is the zero polynomial without any column search.
    """
    rows = matrix.to_rows()
    size = matrix.size
    sign = 1
    previous = IntPolynomial.constant(1)
    for k in range(size - 1):
        pivot_row = next((i for i in range(k, size) if not rows[i][k].is_zero()), None)
        if pivot_row is None:
            logger.debug("singular polynomial matrix at column %d", k)
            return IntPolynomial()
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            factor = rows[i][k]
            for j in range(k + 1, size):
                value = rows[i][j] * pivot - factor * rows[k][j]
                try:
                    rows[i][j] = value.exact_divide(previous)
                except InexactDivisionError as exc:
                    raise VerificationError(f"Bareiss step {k} not exact: {exc}") from exc
            rows[i][k] = IntPolynomial()
        previous = pivot
    result = rows[size - 1][size - 1]
    return -result if sign < 0 else result
