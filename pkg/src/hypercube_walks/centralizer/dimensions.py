from __future__ import annotations

from math import comb, factorial, perm

from hypercube_walks.core.errors import DimensionMismatchError, VerificationError
from hypercube_walks.core.group import GroupElement, hamming_weight
from hypercube_walks.partitions.stirling import (
    even_block_count_closed,
    integer_partitions,
    multinomial,
    multiplicity_correction,
)
from hypercube_walks.spectral.walks import walk_count_cube_closed


def _check(k: int, n: int) -> None:
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")


def dim_Zk_Z2n_spectral(k: int, n: int) -> int:
    _check(k, n)
    total = sum(comb(n, i) * (n - 2 * i) ** (2 * k) for i in range(n + 1))
    q, r = divmod(total, 1 << n)
    if r:
        raise VerificationError(f"non-integral dimension sum {total} / 2^{n}")
    return q


def dim_Zk_Z2n_diagrammatic(k: int, n: int) -> int:
    # sum_r T(k, r) * n!/(n-r)!; r = 0 only contributes at k = 0.
    _check(k, n)
    return sum(even_block_count_closed(k, r) * perm(n, r) for r in range(0, min(k, n) + 1))


def dim_module(k: int, n: int, a: GroupElement) -> int:
    _check(k, n)
    if a.n != n:
        raise DimensionMismatchError(f"vertex {a} does not live in Z_2^{n}")
    return walk_count_cube_closed(n, hamming_weight(a), k)


def multiplicity_multinomial(k: int, n: int, h: int) -> int:
    """m_k^a for h(a) = h, counted by letter multiplicities.

    Words of length k use each of the h letters set in a an odd number of
    times and r - h further letters a positive even number of times.
    """
    _check(k, n)
    if not 0 <= h <= n:
        raise ValueError(f"h={h} must lie in [0, {n}]")
    total = 0
    for r in range(h, n + 1):
        placements = factorial(h) * perm(n - h, r - h)
        for odd_total in range(h, k + 1, 2):
            even_total = k - odd_total
            if even_total % 2:
                continue
            for odd in integer_partitions(odd_total, h, parity=1):
                for even in integer_partitions(even_total, r - h, parity=0):
                    weight = multinomial(odd + even) * placements
                    q, rem = divmod(
                        weight, multiplicity_correction(odd) * multiplicity_correction(even)
                    )
                    if rem:
                        raise VerificationError(f"non-integral term for {odd}+{even}")
                    total += q
    return total
