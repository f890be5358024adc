from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from hypercube_walks.core.config import LimitsConfig
from hypercube_walks.core.errors import DimensionMismatchError
from hypercube_walks.core.group import GroupElement
from hypercube_walks.core.poly import IntPolynomial, RationalFunction, one_minus
from hypercube_walks.core.timing import Stopwatch
from hypercube_walks.genfun.polymatrix import PolyMatrix, det_fraction_free
from hypercube_walks.spectral.steps import StepSet, adjacency_matrix, eigenvalue_multiplicities

logger = logging.getLogger(__name__)


def _resolve_steps(n: int, steps: Optional[StepSet]) -> StepSet:
    if steps is None:
        return StepSet.cube(n)
    if steps.n != n:
        raise DimensionMismatchError(f"step set lives in Z_2^{steps.n}, expected {n}")
    return steps


def cramer_matrix(
    n: int,
    a: GroupElement,
    steps: Optional[StepSet] = None,
    *,
    limits: Optional[LimitsConfig] = None,
) -> PolyMatrix:
    # column a replaced by the indicator of vertex 0
    if a.n != n:
        raise DimensionMismatchError(f"vertex {a} does not live in Z_2^{n}")
    pencil = PolyMatrix.pencil(adjacency_matrix(_resolve_steps(n, steps), limits=limits))
    delta = [IntPolynomial.constant(1)] + [IntPolynomial()] * (pencil.size - 1)
    return pencil.replace_column(a.index, delta)


def pencil_determinant(
    n: int, steps: Optional[StepSet] = None, *, limits: Optional[LimitsConfig] = None
) -> IntPolynomial:
    pencil = PolyMatrix.pencil(adjacency_matrix(_resolve_steps(n, steps), limits=limits))
    watch = Stopwatch()
    det = det_fraction_free(pencil)
    logger.debug("det(I - tA) for n=%d took %d ms", n, watch.elapsed_ms())
    return det


def poincare_quotient(
    n: int,
    a: GroupElement,
    steps: Optional[StepSet] = None,
    *,
    limits: Optional[LimitsConfig] = None,
) -> RationalFunction:
    numerator = det_fraction_free(cramer_matrix(n, a, steps, limits=limits))
    return RationalFunction(numerator, pencil_determinant(n, steps, limits=limits))


def poincare_series(
    n: int,
    a: GroupElement,
    steps: Optional[StepSet] = None,
    *,
    limits: Optional[LimitsConfig] = None,
) -> RationalFunction:
    resolved = _resolve_steps(n, steps)
    raw = poincare_quotient(n, a, resolved, limits=limits)
    return raw.reduce(eigenvalue_multiplicities(resolved))


@dataclass(frozen=True)
class FactoredDenominator:
    polynomial: IntPolynomial
    # (lambda, multiplicity) for each linear factor (1 - lambda t), lambda descending.
    factors: Tuple[Tuple[int, int], ...]

    def __str__(self) -> str:
        parts: List[str] = []
        for lam, mult in self.factors:
            if lam == 0:
                continue
            coeff = "" if abs(lam) == 1 else str(abs(lam))
            base = f"(1 - {coeff}t)" if lam > 0 else f"(1 + {coeff}t)"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        return "".join(parts) or "1"


def denominator_factored(n: int) -> FactoredDenominator:
    if n < 1:
        raise ValueError("n must be >= 1")
    factors = tuple((n - 2 * h, comb(n, h)) for h in range(n + 1))
    polynomial = IntPolynomial.product(one_minus(lam) ** mult for lam, mult in factors)
    return FactoredDenominator(polynomial, factors)


def invariants_series(n: int, *, limits: Optional[LimitsConfig] = None) -> RationalFunction:
    # A0: the cube adjacency with vertex 0 removed
    adjacency = adjacency_matrix(StepSet.cube(n), limits=limits)
    punctured = PolyMatrix.pencil(adjacency.delete_row_col(0))
    quotient = RationalFunction(det_fraction_free(punctured), pencil_determinant(n, limits=limits))
    return quotient.reduce(lam for lam, _ in denominator_factored(n).factors)
