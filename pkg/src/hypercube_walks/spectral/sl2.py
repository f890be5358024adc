from __future__ import annotations

from typing import Dict, NamedTuple, Optional

from hypercube_walks.core.config import LimitsConfig
from hypercube_walks.core.group import GroupElement, hamming_weight
from hypercube_walks.core.matrix import IntMatrix, commutator
from hypercube_walks.spectral.steps import StepSet, adjacency_matrix, require_matrix_cap


class Sl2Triple(NamedTuple):
    raising: IntMatrix
    lowering: IntMatrix
    astar: IntMatrix


def sl2_triple(n: int, *, limits: Optional[LimitsConfig] = None) -> Sl2Triple:
    """Raising/lowering parts of the cube adjacency and the weight operator.

    Column b of R has a 1 in row b + epsilon_i whenever that flip raises the
    Hamming weight; L holds the remaining edges, and A* = diag(n - 2h(b)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    require_matrix_cap(n, limits)
    size = 1 << n
    raising = [0] * (size * size)
    lowering = [0] * (size * size)
    for b in range(size):
        for i in range(n):
            c = b ^ (1 << i)
            if c > b:
                raising[c * size + b] = 1
            else:
                lowering[c * size + b] = 1
    weights = [n - 2 * hamming_weight(a) for a in GroupElement.all(n)]
    return Sl2Triple(
        IntMatrix(size, size, tuple(raising)),
        IntMatrix(size, size, tuple(lowering)),
        IntMatrix.diagonal(weights),
    )


def sl2_identities(n: int, *, limits: Optional[LimitsConfig] = None) -> Dict[str, bool]:
    r, l, astar = sl2_triple(n, limits=limits)
    adjacency = adjacency_matrix(StepSet.cube(n), limits=limits)
    return {
        "R+L=A": r + l == adjacency,
        "[L,R]=A*": commutator(l, r) == astar,
        "[A*,L]=2L": commutator(astar, l) == l.scale(2),
        "[A*,R]=-2R": commutator(astar, r) == r.scale(-2),
    }
