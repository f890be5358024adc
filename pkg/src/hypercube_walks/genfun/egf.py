from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import List

from hypercube_walks.core.errors import VerificationError
from hypercube_walks.core.group import GroupElement
from hypercube_walks.spectral.walks import cube_exponential_weights, recursion_check


def _truncated_product(left: List[Fraction], right: List[Fraction]) -> List[Fraction]:
    size = len(left)
    out = [Fraction(0)] * size
    for i, a in enumerate(left):
        if not a:
            continue
        for j in range(size - i):
            out[i + j] += a * right[j]
    return out


def _hyperbolic(order: int, parity: int) -> List[Fraction]:
    return [Fraction(1, factorial(j)) if j % 2 == parity else Fraction(0) for j in range(order + 1)]


def egf_coefficients(n: int, h: int, order: int) -> List[int]:
    """k! [t^k] (cosh t)^(n-h) (sinh t)^h for k = 0..order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= h <= n:
        raise ValueError(f"h={h} must lie in [0, {n}]")
    if order < 0:
        raise ValueError("order must be >= 0")
    series = [Fraction(1)] + [Fraction(0)] * order
    cosh, sinh = _hyperbolic(order, 0), _hyperbolic(order, 1)
    for _ in range(n - h):
        series = _truncated_product(series, cosh)
    for _ in range(h):
        series = _truncated_product(series, sinh)
    out: List[int] = []
    for k, coeff in enumerate(series):
        scaled = coeff * factorial(k)
        if scaled.denominator != 1:
            raise VerificationError(f"non-integral EGF coefficient at k={k}: {scaled}")
        out.append(scaled.numerator)
    return out


def closed_form_m0(n: int, r: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    total = sum(comb(n, i) * (n - 2 * i) ** r for i in range(n + 1))
    q, rem = divmod(total, 1 << n)
    if rem:
        raise VerificationError(f"non-integral sum {total} / 2^{n}")
    return q


def exponential_weights(n: int, h: int) -> List[int]:
    return cube_exponential_weights(n, h)


def ode_check(n: int, h: int, order: int) -> bool:
    """The EGF is annihilated by the differential operator p(d/dt), p the cube's minimal polynomial.

    Differentiating shifts the k!-scaled coefficients, so this is the linear
    recursion on egf_coefficients; the exponential weights must reproduce the
    same coefficients.
    """
    coeffs = egf_coefficients(n, h, order)
    weights = exponential_weights(n, h)
    for k, m in enumerate(coeffs):
        if sum(c * (n - 2 * i) ** k for i, c in enumerate(weights)) != m << n:
            return False
    if len(coeffs) < n + 2:
        return True
    return recursion_check(n, GroupElement.sum_of_units(n, range(1, h + 1)), coeffs)
