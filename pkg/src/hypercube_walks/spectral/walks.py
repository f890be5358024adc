from __future__ import annotations

import logging
from math import comb
from typing import List, Optional, Sequence

from hypercube_walks.core.config import LimitsConfig
from hypercube_walks.core.errors import DimensionMismatchError, VerificationError
from hypercube_walks.core.group import GroupElement
from hypercube_walks.core.poly import IntPolynomial, poly_from_roots
from hypercube_walks.spectral.steps import (
    StepSet,
    adjacency_matrix,
    eigenvalue,
    eigenvalue_multiplicities,
    require_matrix_cap,
)

logger = logging.getLogger(__name__)


def _check_args(steps: StepSet, b: GroupElement, c: GroupElement, k: int) -> None:
    if b.n != steps.n or c.n != steps.n:
        raise DimensionMismatchError(f"vertices {b}, {c} do not live in Z_2^{steps.n}")
    if k < 0:
        raise ValueError("k must be >= 0")


def _exact_div_pow2(total: int, n: int, what: str) -> int:
    q, r = divmod(total, 1 << n)
    if r:
        raise VerificationError(f"non-integral {what}: {total} / 2^{n}")
    return q


def walk_counts_from(
    steps: StepSet, b: GroupElement, k_max: int, *, limits: Optional[LimitsConfig] = None
) -> List[List[int]]:
    if b.n != steps.n:
        raise DimensionMismatchError(f"vertex {b} does not live in Z_2^{steps.n}")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    adjacency = adjacency_matrix(steps, limits=limits)
    vector = [0] * adjacency.rows
    vector[b.index] = 1
    rows = [vector]
    for _ in range(k_max):
        # A is symmetric, so row and column propagation agree.
        vector = adjacency.matvec(vector)
        rows.append(vector)
    return rows


def walk_count_bruteforce(
    steps: StepSet,
    b: GroupElement,
    c: GroupElement,
    k: int,
    *,
    limits: Optional[LimitsConfig] = None,
) -> int:
    _check_args(steps, b, c, k)
    return walk_counts_from(steps, b, k, limits=limits)[k][c.index]


def walk_count_spectral(
    steps: StepSet,
    b: GroupElement,
    c: GroupElement,
    k: int,
    *,
    limits: Optional[LimitsConfig] = None,
) -> int:
    """2^-n * sum_a (-1)^(a.(b+c)) lambda_a^k with the division done last."""
    _check_args(steps, b, c, k)
    require_matrix_cap(steps.n, limits)
    target = b + c
    total = 0
    for a in GroupElement.all(steps.n):
        term = eigenvalue(steps, a) ** k
        total += -term if a.dot(target) % 2 else term
    return _exact_div_pow2(total, steps.n, "spectral sum")


def cube_exponential_weights(n: int, h: int) -> List[int]:
    """c_i = sum_j (-1)^j C(h, j) C(n-h, i-j), for i = 0..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= h <= n:
        raise ValueError(f"h={h} must lie in [0, {n}]")
    return [
        sum((-1) ** j * comb(h, j) * comb(n - h, i - j) for j in range(0, min(h, i) + 1))
        for i in range(n + 1)
    ]


def walk_count_cube_closed(n: int, h: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    weights = cube_exponential_weights(n, h)
    total = sum(w * (n - 2 * i) ** k for i, w in enumerate(weights))
    return _exact_div_pow2(total, n, "closed-form sum")


def min_poly_cube(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    return poly_from_roots([n - 2 * h for h in range(n + 1)])


def minimal_polynomial(steps: StepSet) -> IntPolynomial:
    # A_S is diagonalizable, so the distinct eigenvalues are simple roots.
    return poly_from_roots(sorted(eigenvalue_multiplicities(steps), reverse=True))


def recursion_check(n: int, a: GroupElement, counts: Sequence[int]) -> bool:
    if a.n != n:
        raise DimensionMismatchError(f"vertex {a} does not live in Z_2^{n}")
    p = min_poly_cube(n)
    width = p.degree + 1
    if len(counts) < width:
        raise ValueError(f"need at least {width} terms, got {len(counts)}")
    for start in range(len(counts) - width + 1):
        window = counts[start : start + width]
        if sum(c * m for c, m in zip(p.coeffs, window)) != 0:
            logger.debug("recursion fails at window starting %d for a=%s", start, a)
            return False
    return True
