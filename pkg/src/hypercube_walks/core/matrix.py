from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple, Union

from hypercube_walks.core.errors import DimensionMismatchError
from hypercube_walks.core.poly import IntPolynomial


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        if not rows:
            raise ValueError("matrix must have at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "IntMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.diagonal([1] * size)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        size = len(values)
        entries = [0] * (size * size)
        for i, v in enumerate(values):
            entries[i * size + i] = int(v)
        return cls(size, size, tuple(entries))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return self.entries[j :: self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @cached_property
    def _sparse_rows(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        return tuple(
            tuple((j, v) for j, v in enumerate(self.row(i)) if v) for i in range(self.rows)
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def trace(self) -> int:
        if not self.is_square:
            raise DimensionMismatchError("trace of a non-square matrix")
        return sum(self[i, i] for i in range(self.rows))

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(a * factor for a in self.entries))

    def __mul__(self, other: Union["IntMatrix", int]) -> "IntMatrix":
        if isinstance(other, int):
            return self.scale(other)
        return self @ other

    __rmul__ = scale

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out: List[int] = []
        other_sparse = other._sparse_rows
        for i in range(self.rows):
            acc = [0] * other.cols
            for k, a in self._sparse_rows[i]:
                for j, b in other_sparse[k]:
                    acc[j] += a * b
            out.extend(acc)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def matvec(self, vector: Sequence[int]) -> List[int]:
        if len(vector) != self.cols:
            raise DimensionMismatchError("vector length does not match matrix columns")
        return [sum(v * vector[j] for j, v in row) for row in self._sparse_rows]

    def vecmat(self, vector: Sequence[int]) -> List[int]:
        if len(vector) != self.rows:
            raise DimensionMismatchError("vector length does not match matrix rows")
        out = [0] * self.cols
        for i, x in enumerate(vector):
            if x == 0:
                continue
            for j, v in self._sparse_rows[i]:
                out[j] += x * v
        return out

    def power(self, exponent: int) -> "IntMatrix":
        if not self.is_square:
            raise DimensionMismatchError("power of a non-square matrix")
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        result = IntMatrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def delete_row_col(self, index: int) -> "IntMatrix":
        if not self.is_square or self.rows < 2:
            raise DimensionMismatchError("need a square matrix of size >= 2")
        keep = [i for i in range(self.rows) if i != index]
        return IntMatrix(len(keep), len(keep), tuple(self[i, j] for i in keep for j in keep))

    def is_zero(self) -> bool:
        return not any(self.entries)


def commutator(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a @ b - b @ a


def evaluate_polynomial(p: IntPolynomial, matrix: IntMatrix) -> IntMatrix:
    if not matrix.is_square:
        raise DimensionMismatchError("polynomial of a non-square matrix")
    identity = IntMatrix.identity(matrix.rows)
    acc = IntMatrix.zeros(matrix.rows)
    for c in reversed(p.coeffs):
        acc = acc @ matrix + identity.scale(c)
    return acc

