from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from hypercube_walks.core.config import LimitsConfig, resolve_limits
from hypercube_walks.core.errors import CapExceededError, DimensionMismatchError, VerificationError
from hypercube_walks.core.group import GroupElement, character_value
from hypercube_walks.core.matrix import IntMatrix

logger = logging.getLogger(__name__)


def require_matrix_cap(n: int, limits: Optional[LimitsConfig] = None) -> None:
    cap = resolve_limits(limits).max_n
    if n > cap:
        logger.warning("refusing 2^%d x 2^%d matrix (max_n=%d)", n, n, cap)
        raise CapExceededError(
            f"n={n} exceeds the matrix cap max_n={cap} (2^{n} x 2^{n} matrices)",
            flag="--max-n",
        )


@dataclass(frozen=True)
class StepSet:
    n: int
    steps: FrozenSet[GroupElement]

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("step set must be nonempty")
        for s in self.steps:
            if s.n != self.n:
                raise DimensionMismatchError(f"step {s} has dimension {s.n}, expected {self.n}")

    @classmethod
    def cube(cls, n: int) -> "StepSet":
        return cls(n, frozenset(GroupElement.unit(n, i) for i in range(1, n + 1)))

    @classmethod
    def of(cls, steps: Iterable[GroupElement]) -> "StepSet":
        items = frozenset(steps)
        if not items:
            raise ValueError("step set must be nonempty")
        return cls(next(iter(items)).n, items)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "StepSet":
        items = [GroupElement.parse(part, n) for part in text.split(",") if part.strip()]
        if not items:
            raise ValueError(f"empty step list: {text!r}")
        result = cls.of(items)
        if len(result.steps) != len(items):
            raise ValueError(f"duplicate steps in {text!r}")
        return result

    def is_cube(self) -> bool:
        return self == StepSet.cube(self.n)

    def sorted_steps(self) -> Tuple[GroupElement, ...]:
        return tuple(sorted(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.sorted_steps())


def adjacency_matrix(steps: StepSet, *, limits: Optional[LimitsConfig] = None) -> IntMatrix:
    require_matrix_cap(steps.n, limits)
    size = 1 << steps.n
    codes = [s.code for s in steps.steps]
    entries = [0] * (size * size)
    for b in range(size):
        for s in codes:
            entries[b * size + (b ^ s)] += 1
    return IntMatrix(size, size, tuple(entries))


def eigenvalue(steps: StepSet, a: GroupElement) -> int:
    return sum(character_value(a, s) for s in steps.steps)


@dataclass(frozen=True)
class SpectralData:
    steps: StepSet
    eigenvalues: Dict[GroupElement, int]
    eigenvector_matrix: IntMatrix

    def eigenvalue_list(self) -> Tuple[int, ...]:
        return tuple(self.eigenvalues[a] for a in GroupElement.all(self.steps.n))

    def verify(self, adjacency: IntMatrix) -> None:
        size = 1 << self.steps.n
        ev = self.eigenvector_matrix
        product = adjacency @ ev
        for a in GroupElement.all(self.steps.n):
            lam = self.eigenvalues[a]
            column = ev.column(a.index)
            if product.column(a.index) != tuple(lam * x for x in column):
                raise VerificationError(f"column {a} is not an eigenvector for {lam}")
        if ev.transpose() @ ev != IntMatrix.identity(size).scale(size):
            raise VerificationError("eigenvector matrix is not orthogonal")


def eigen_data(steps: StepSet, *, limits: Optional[LimitsConfig] = None) -> SpectralData:
    require_matrix_cap(steps.n, limits)
    n = steps.n
    size = 1 << n
    elements = list(GroupElement.all(n))
    values = {a: eigenvalue(steps, a) for a in elements}
    entries = tuple(character_value(a, b) for b in elements for a in elements)
    return SpectralData(steps, values, IntMatrix(size, size, entries))


def eigenvalue_multiplicities(steps: StepSet) -> Dict[int, int]:
    counts = Counter(eigenvalue(steps, a) for a in GroupElement.all(steps.n))
    return dict(sorted(counts.items(), reverse=True))
