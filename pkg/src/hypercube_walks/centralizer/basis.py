from __future__ import annotations

import logging
import re
from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from hypercube_walks.core.config import LimitsConfig, resolve_limits
from hypercube_walks.core.errors import CapExceededError, DimensionMismatchError
from hypercube_walks.core.group import GroupElement
from hypercube_walks.partitions.setpart import SetPartition, relabel_first_occurrence, zeta_labels

logger = logging.getLogger(__name__)

_LONG_FORM = re.compile(r"^E\[([0-9,\s]*)\]\^\[([0-9,\s]*)\]$")
_COMPACT_FORM = re.compile(r"^E_([1-9]*)\^([1-9]*)$")


def _endpoint(n: int, labels: Sequence[int]) -> GroupElement:
    return GroupElement.sum_of_units(n, labels)


@dataclass(frozen=True, order=True)
class BasisElement:
    # alpha is the bottom row, beta the top row
    n: int
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have the same length")
        for label in self.alpha + self.beta:
            if not 1 <= label <= self.n:
                raise ValueError(f"label {label} outside [1, {self.n}]")
        if _endpoint(self.n, self.alpha) != _endpoint(self.n, self.beta):
            raise ValueError(f"E{list(self.alpha)}^{list(self.beta)} violates the parity condition")

    @classmethod
    def parse(cls, text: str, n: int) -> "BasisElement":
        raw = text.strip()
        match = _LONG_FORM.match(raw)
        if match:
            alpha, beta = (
                tuple(int(x) for x in group.split(",") if x.strip()) for group in match.groups()
            )
            return cls(n, alpha, beta)
        match = _COMPACT_FORM.match(raw)
        if match:
            return cls(n, tuple(int(c) for c in match.group(1)), tuple(int(c) for c in match.group(2)))
        raise ValueError(f"malformed basis element: {text!r}")

    @property
    def k(self) -> int:
        return len(self.alpha)

    @property
    def endpoint(self) -> GroupElement:
        return _endpoint(self.n, self.alpha)

    def diagram(self) -> SetPartition:
        return SetPartition(self.k, relabel_first_occurrence(self.alpha + self.beta))

    def to_string(self) -> str:
        alpha = ",".join(str(x) for x in self.alpha)
        beta = ",".join(str(x) for x in self.beta)
        return f"E[{alpha}]^[{beta}]"

    def compact(self) -> str:
        if self.n > 9:
            raise ValueError("compact form needs single-digit labels (n <= 9)")
        return "E_" + "".join(map(str, self.alpha)) + "^" + "".join(map(str, self.beta))

    def __str__(self) -> str:
        return self.compact() if self.n <= 9 else self.to_string()


def require_enumeration_budget(k: int, n: int, limits: Optional[LimitsConfig] = None) -> None:
    budget = resolve_limits(limits).budget
    if n**k > budget:
        logger.warning("refusing to scan %d^%d tuples (budget=%d)", n, k, budget)
        raise CapExceededError(
            f"{n}^{k} tuples exceed the enumeration budget {budget}",
            flag="--budget",
        )


def _words_by_endpoint(k: int, n: int) -> Dict[int, List[Tuple[int, ...]]]:
    groups: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
    for word in product(range(1, n + 1), repeat=k):
        groups[_endpoint(n, word).code].append(word)
    return groups


def module_basis(
    k: int, n: int, a: GroupElement, *, limits: Optional[LimitsConfig] = None
) -> Iterator[Tuple[int, ...]]:
    if a.n != n:
        raise DimensionMismatchError(f"vertex {a} does not live in Z_2^{n}")
    if k < 0:
        raise ValueError("k must be >= 0")
    require_enumeration_budget(k, n, limits)
    for word in product(range(1, n + 1), repeat=k):
        if _endpoint(n, word) == a:
            yield word


def enumerate_basis(
    k: int,
    n: int,
    target: Optional[GroupElement] = None,
    *,
    limits: Optional[LimitsConfig] = None,
) -> Iterator[BasisElement]:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if target is not None and target.n != n:
        raise DimensionMismatchError(f"target {target} does not live in Z_2^{n}")
    require_enumeration_budget(k, n, limits)
    groups = _words_by_endpoint(k, n)
    logger.debug("enumerate_basis k=%d n=%d: %d endpoint classes", k, n, len(groups))
    if target is not None:
        words = groups.get(target.code, [])
        for alpha in words:
            for beta in words:
                yield BasisElement(n, alpha, beta)
        return
    # beta ranges over the words sharing alpha's endpoint
    for alpha in product(range(1, n + 1), repeat=k):
        for beta in groups[_endpoint(n, alpha).code]:
            yield BasisElement(n, alpha, beta)


def expand_Td(d: SetPartition, n: int) -> Iterator[BasisElement]:
    """Summands of T_d: relabel block j of d by the j-th value of an injection [1, r] -> [1, n]."""
    if d.r > n:
        raise ValueError(f"diagram has {d.r} blocks, more than n={n}")
    if not d.all_blocks_even():
        raise ValueError(f"diagram {d} has an odd block; T_d is not in the centralizer")
    z = zeta_labels(d)
    for image in permutations(range(1, n + 1), d.r):
        yield BasisElement(
            n,
            tuple(image[j - 1] for j in z.zeta),
            tuple(image[j - 1] for j in z.zeta_prime),
        )


def project(
    summands: Iterable[BasisElement], alpha: Sequence[int], beta: Sequence[int]
) -> Optional[BasisElement]:
    alpha, beta = tuple(alpha), tuple(beta)
    for element in summands:
        if element.alpha == alpha and element.beta == beta:
            return element
    return None
