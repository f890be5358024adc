from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from hypercube_walks.partitions.stirling import even_block_count_closed, stirling2


def _is_restricted_growth(labels: Sequence[int]) -> bool:
    top = 0
    for label in labels:
        if label < 1 or label > top + 1:
            return False
        top = max(top, label)
    return True


@dataclass(frozen=True, order=True)
class SetPartition:
    """Partition of [1, 2k] stored as its restricted-growth string.

    labels[l-1] is the index of the block holding node l; block 1 holds node 1
    and each new block is opened by the smallest node not yet covered. Nodes
    1..k form the bottom row, k+1..2k the top row.
    """

    k: int
    labels: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if len(self.labels) != 2 * self.k:
            raise ValueError(f"expected {2 * self.k} labels, got {len(self.labels)}")
        if not _is_restricted_growth(self.labels):
            raise ValueError(f"not a restricted-growth string: {self.labels}")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        if len(labels) % 2:
            raise ValueError("a diagram has an even number of nodes")
        return cls(len(labels) // 2, tuple(int(x) for x in labels))

    @classmethod
    def from_blocks(cls, k: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        owner = [0] * (2 * k)
        for tag, block in enumerate(blocks, start=1):
            for node in block:
                if not 1 <= node <= 2 * k:
                    raise ValueError(f"node {node} outside [1, {2 * k}]")
                if owner[node - 1]:
                    raise ValueError(f"node {node} appears in two blocks")
                owner[node - 1] = tag
        if not all(owner):
            raise ValueError("blocks do not cover [1, 2k]")
        return cls(k, relabel_first_occurrence(owner))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        bottom, sep, top = text.partition("|")
        if not sep:
            raise ValueError(f"missing '|' in {text!r}")
        labels = [int(x) for part in (bottom, top) for x in part.split(",") if x.strip()]
        return cls.from_labels(labels)

    @property
    def r(self) -> int:
        return max(self.labels, default=0)

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        grouped: List[List[int]] = [[] for _ in range(self.r)]
        for node, label in enumerate(self.labels, start=1):
            grouped[label - 1].append(node)
        return tuple(tuple(b) for b in grouped)

    def block_sizes(self) -> Tuple[int, ...]:
        counts = Counter(self.labels)
        return tuple(counts[j] for j in range(1, self.r + 1))

    def all_blocks_even(self) -> bool:
        return all(size % 2 == 0 for size in self.block_sizes())

    def to_rgs_string(self) -> str:
        bottom = ",".join(str(x) for x in self.labels[: self.k])
        top = ",".join(str(x) for x in self.labels[self.k :])
        return f"{bottom}|{top}"

    def __str__(self) -> str:
        return " ".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)


def relabel_first_occurrence(values: Sequence[int]) -> Tuple[int, ...]:
    mapping: Dict[int, int] = {}
    out = []
    for v in values:
        if v not in mapping:
            mapping[v] = len(mapping) + 1
        out.append(mapping[v])
    return tuple(out)


@dataclass(frozen=True)
class ZetaLabels:
    zeta: Tuple[int, ...]
    zeta_prime: Tuple[int, ...]

    def to_partition(self) -> SetPartition:
        return SetPartition.from_labels(self.zeta + self.zeta_prime)


def zeta_labels(d: SetPartition) -> ZetaLabels:
    return ZetaLabels(d.labels[: d.k], d.labels[d.k :])


def tanabe_condition(d: SetPartition, n: int) -> bool:
    """Each label j in [1, n] occurs with the same parity in both rows."""
    if d.r > n:
        raise ValueError(f"diagram has {d.r} blocks, more than n={n}")
    z = zeta_labels(d)
    bottom, top = Counter(z.zeta), Counter(z.zeta_prime)
    return all(bottom[j] % 2 == top[j] % 2 for j in range(1, n + 1))


def enumerate_partitions(k: int, n: int, even_only: bool = False) -> Iterator[SetPartition]:
    """Partitions of [1, 2k] into at most n blocks, in lexicographic RGS order."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 2 * k
    labels: List[int] = []
    sizes: List[int] = []

    def extend(odd: int) -> Iterator[SetPartition]:
        remaining = size - len(labels)
        if remaining == 0:
            if not even_only or odd == 0:
                yield SetPartition(k, tuple(labels))
            return
        # every remaining node flips the parity of exactly one block
        if even_only and odd > remaining:
            return
        # RGS: the next node joins an open block or opens block len(sizes) + 1
        for label in range(1, min(len(sizes) + 1, n) + 1):
            opened = label > len(sizes)
            if opened:
                sizes.append(0)
            sizes[label - 1] += 1
            labels.append(label)
            delta = 1 if sizes[label - 1] % 2 else -1
            yield from extend(odd + delta)
            labels.pop()
            sizes[label - 1] -= 1
            if opened:
                sizes.pop()

    yield from extend(0)


def dim_Zk_Sn(k: int, n: int) -> int:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if k == 0:
        return 1
    return sum(stirling2(2 * k, j) for j in range(1, n + 1))


def dim_Zk_G21n(k: int, n: int) -> int:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if k == 0:
        return 1
    return sum(even_block_count_closed(k, r) for r in range(1, n + 1))
