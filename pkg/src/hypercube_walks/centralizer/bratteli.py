from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from hypercube_walks.centralizer.basis import BasisElement
from hypercube_walks.core.config import LimitsConfig
from hypercube_walks.core.group import GroupElement, hamming_weight
from hypercube_walks.spectral.steps import require_matrix_cap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BratteliLevel:
    level: int
    multiplicities: Dict[GroupElement, int]

    def multiplicity(self, a: GroupElement) -> int:
        return self.multiplicities.get(a, 0)

    def sum_of_squares(self) -> int:
        return sum(m * m for m in self.multiplicities.values())

    def items(self) -> List[Tuple[GroupElement, int]]:
        return sorted(self.multiplicities.items())


def bratteli(n: int, k_max: int, *, limits: Optional[LimitsConfig] = None) -> List[BratteliLevel]:
    # Pascal rule: m_k^a = sum_i m_{k-1}^{a + epsilon_i}
    if n < 1:
        raise ValueError("n must be >= 1")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    require_matrix_cap(n, limits)
    current: Dict[int, int] = {0: 1}
    levels = [BratteliLevel(0, {GroupElement.zero(n): 1})]
    for k in range(1, k_max + 1):
        nxt: Dict[int, int] = {}
        for code, m in current.items():
            for i in range(n):
                neighbour = code ^ (1 << i)
                nxt[neighbour] = nxt.get(neighbour, 0) + m
        current = nxt
        levels.append(
            BratteliLevel(k, {GroupElement(n, code): m for code, m in sorted(current.items())})
        )
        logger.debug("bratteli n=%d level %d: %d vertices", n, k, len(current))
    return levels


@dataclass(frozen=True)
class WalkPath:
    n: int
    steps: Tuple[int, ...]

    def __post_init__(self) -> None:
        for label in self.steps:
            if not 1 <= label <= self.n:
                raise ValueError(f"step {label} outside [1, {self.n}]")

    @property
    def k(self) -> int:
        return len(self.steps)

    def vertices(self) -> List[GroupElement]:
        point = GroupElement.zero(self.n)
        out = [point]
        for label in self.steps:
            point = point + GroupElement.unit(self.n, label)
            out.append(point)
        return out

    @property
    def endpoint(self) -> GroupElement:
        return GroupElement.sum_of_units(self.n, self.steps)

    def weights(self) -> List[int]:
        return [hamming_weight(v) for v in self.vertices()]


def paths_to_diagram(rho1: WalkPath, rho2: WalkPath) -> BasisElement:
    # rho2 is the return trip a -> 0, read by its step labels
    if rho1.n != rho2.n or rho1.k != rho2.k:
        raise ValueError("paths must have the same n and length")
    if rho1.endpoint != rho2.endpoint:
        raise ValueError(f"endpoint mismatch: {rho1.endpoint} != {rho2.endpoint}")
    return BasisElement(rho1.n, rho1.steps, rho2.steps)


def diagram_to_paths(element: BasisElement) -> Tuple[WalkPath, WalkPath]:
    return WalkPath(element.n, element.alpha), WalkPath(element.n, element.beta)
