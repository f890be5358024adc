from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from hypercube_walks.core.errors import DimensionMismatchError

MAX_BITS = 64


def _popcount(value: int) -> int:
    return bin(value).count("1")


@dataclass(frozen=True, order=True)
class GroupElement:
    """Element of Z_2^n, i.e. a vertex of the n-cube.

    The bits a_1..a_n are packed into ``code`` with a_1 as the most significant
    bit, so ``code`` is also the vertex index in lexicographic order with the
    zero element first.
    """

    n: int
    code: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise ValueError("n must be an int")
        if not 1 <= self.n <= MAX_BITS:
            raise ValueError(f"n must be in [1, {MAX_BITS}]")
        if not 0 <= self.code < (1 << self.n):
            raise ValueError(f"code {self.code} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "GroupElement":
        raw = text.strip().strip("()").replace(",", "")
        if not raw or any(ch not in "01" for ch in raw):
            raise ValueError(f"malformed bit string: {text!r}")
        if n is not None and len(raw) != n:
            raise ValueError(f"bit string {text!r} has length {len(raw)}, expected {n}")
        return cls(n=len(raw), code=int(raw, 2))

    @classmethod
    def zero(cls, n: int) -> "GroupElement":
        return cls(n=n, code=0)

    @classmethod
    def unit(cls, n: int, i: int) -> "GroupElement":
        # 1-based
        if not 1 <= i <= n:
            raise ValueError(f"coordinate {i} out of range for n={n}")
        return cls(n=n, code=1 << (n - i))

    @classmethod
    def from_index(cls, n: int, index: int) -> "GroupElement":
        return cls(n=n, code=index)

    @classmethod
    def all(cls, n: int) -> Iterator["GroupElement"]:
        for index in range(1 << n):
            yield cls.from_index(n, index)

    @classmethod
    def sum_of_units(cls, n: int, labels: Iterable[int]) -> "GroupElement":
        code = 0
        for label in labels:
            if not 1 <= label <= n:
                raise ValueError(f"label {label} out of range for n={n}")
            code ^= 1 << (n - label)
        return cls(n=n, code=code)

    @property
    def index(self) -> int:
        return self.code

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple((self.code >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def _check(self, other: "GroupElement") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"dimension mismatch: {self.n} != {other.n}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(n=self.n, code=self.code ^ other.code)

    def dot(self, other: "GroupElement") -> int:
        self._check(other)
        return _popcount(self.code & other.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def __str__(self) -> str:
        return format(self.code, f"0{self.n}b")


def hamming_weight(a: GroupElement) -> int:
    return _popcount(a.code)


def character_value(a: GroupElement, b: GroupElement) -> int:
    return -1 if a.dot(b) % 2 else 1
