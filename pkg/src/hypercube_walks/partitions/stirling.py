from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Optional, Sequence, Tuple

from hypercube_walks.core.errors import VerificationError


@lru_cache(maxsize=None)
def _stirling_row(m: int) -> Tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _stirling_row(m - 1)
    row = [0] * (m + 1)
    for j in range(1, m + 1):
        above = prev[j] if j < len(prev) else 0
        row[j] = j * above + prev[j - 1]
    return tuple(row)


def stirling2(m: int, j: int) -> int:
    if m < 0 or j < 0:
        raise ValueError("m and j must be >= 0")
    if j > m:
        return 0
    return _stirling_row(m)[j]


def stirling2_explicit(m: int, j: int) -> int:
    # inclusion-exclusion over surjections onto j labelled blocks
    if m < 0 or j < 0:
        raise ValueError("m and j must be >= 0")
    total = sum((-1) ** i * comb(j, i) * (j - i) ** m for i in range(j + 1))
    q, rem = divmod(total, factorial(j))
    if rem:
        raise VerificationError(f"non-integral S({m},{j}): {total}")
    return q


def multinomial(parts: Sequence[int]) -> int:
    total, result = 0, 1
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


def multiplicity_correction(parts: Sequence[int]) -> int:
    result = 1
    for count in Counter(parts).values():
        result *= factorial(count)
    return result


def integer_partitions(
    total: int,
    parts: int,
    *,
    max_part: Optional[int] = None,
    parity: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """Weakly decreasing tuples of exactly ``parts`` positive integers summing to total.

    ``parity`` 0 or 1 restricts every part to even or odd values.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    top = total - (parts - 1) if max_part is None else min(max_part, total - (parts - 1))
    for first in range(top, 0, -1):
        if parity is not None and first % 2 != parity:
            continue
        if first * parts < total:
            break
        for rest in integer_partitions(total - first, parts - 1, max_part=first, parity=parity):
            yield (first,) + rest


def even_block_count_closed(k: int, r: int) -> int:
    """T(k, r): partitions of a 2k-set into r blocks of even size, by the alternating sum."""
    if k < 0 or r < 0:
        raise ValueError("k and r must be >= 0")
    if r == 0:
        return 1 if k == 0 else 0
    if r > k:
        return 0
    total = sum((-1) ** (r - j) * comb(2 * r, r - j) * j ** (2 * k) for j in range(1, r + 1))
    q, rem = divmod(total, factorial(r) * 2 ** (r - 1))
    if rem:
        raise VerificationError(f"non-integral T({k},{r}): {total}")
    return q


def even_block_count_partitionwise(k: int, r: int) -> int:
    if k < 0 or r < 0:
        raise ValueError("k and r must be >= 0")
    total = 0
    for lam in integer_partitions(k, r):
        weight = multinomial([2 * part for part in lam])
        q, rem = divmod(weight, multiplicity_correction(lam))
        if rem:
            raise VerificationError(f"non-integral term for partition {lam}")
        total += q
    return total
