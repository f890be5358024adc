from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional

from hypercube_walks.app.schemas import OutputRecord, compare, join_ints, rational_json
from hypercube_walks.centralizer.basis import enumerate_basis, expand_Td, require_enumeration_budget
from hypercube_walks.centralizer.bratteli import bratteli
from hypercube_walks.centralizer.dimensions import (
    dim_module,
    dim_Zk_Z2n_diagrammatic,
    dim_Zk_Z2n_spectral,
)
from hypercube_walks.core.config import LimitsConfig, resolve_limits
from hypercube_walks.core.errors import CapExceededError
from hypercube_walks.core.group import GroupElement, hamming_weight
from hypercube_walks.core.poly import series_expand
from hypercube_walks.genfun.egf import egf_coefficients
from hypercube_walks.genfun.poincare import denominator_factored, poincare_quotient
from hypercube_walks.partitions.setpart import dim_Zk_G21n, dim_Zk_Sn, enumerate_partitions
from hypercube_walks.partitions.stirling import even_block_count_partitionwise, stirling2_explicit
from hypercube_walks.spectral.steps import StepSet, eigenvalue_multiplicities
from hypercube_walks.spectral.walks import (
    walk_count_bruteforce,
    walk_count_cube_closed,
    walk_count_spectral,
)

logger = logging.getLogger(__name__)

WALK_METHODS = ("brute", "spectral", "closed", "all")
ALGEBRAS = ("z2n", "sn", "g21n")
SERIES_KINDS = ("poincare", "egf", "both")


def cmd_walks(
    n: int,
    source: str,
    target: str,
    k: int,
    *,
    method: str = "all",
    steps: Optional[str] = None,
    verify: bool = False,
    limits: Optional[LimitsConfig] = None,
) -> OutputRecord:
    if method not in WALK_METHODS:
        raise ValueError(f"method must be one of {', '.join(WALK_METHODS)}")
    if k < 0:
        raise ValueError("k must be >= 0")
    b = GroupElement.parse(source, n)
    c = GroupElement.parse(target, n)
    step_set = StepSet.parse(steps, n) if steps else StepSet.cube(n)
    cube = step_set.is_cube()
    if method == "closed" and not cube:
        raise ValueError("the closed route needs the cube step set")

    routes = {
        "brute": lambda: walk_count_bruteforce(step_set, b, c, k, limits=limits),
        "spectral": lambda: walk_count_spectral(step_set, b, c, k, limits=limits),
        "closed": lambda: walk_count_cube_closed(n, hamming_weight(b + c), k),
    }
    if not cube:
        routes.pop("closed")
    selected = list(routes) if method == "all" or verify else [method]
    values = {name: routes[name]() for name in selected}
    count = values[method] if method != "all" else values["brute"]

    result: Dict[str, Any] = {"count": count}
    lines = [f"walks {b} -> {c}, k={k}, steps={step_set}: {count}"]
    if method == "all":
        result["routes"] = values
        result["closed_applicable"] = cube
        for name, value in values.items():
            lines.append(f"  {name}: {value}")
        if not cube:
            lines.append("  closed: n/a (general step set)")
    verification = {"walk_count": compare(values)} if (verify or method == "all") else None
    return OutputRecord(
        command="walks",
        params={"n": n, "from": str(b), "to": str(c), "k": k, "method": method, "steps": str(step_set)},
        result=result,
        verification=verification,
        lines=tuple(lines),
    )


def cmd_dim(
    k: int,
    n: int,
    *,
    algebra: str = "z2n",
    verify: bool = False,
    limits: Optional[LimitsConfig] = None,
) -> OutputRecord:
    if algebra not in ALGEBRAS:
        raise ValueError(f"algebra must be one of {', '.join(ALGEBRAS)}")
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    budget = resolve_limits(limits).budget
    result: Dict[str, Any] = {}
    checks: Dict[str, Any] = {}
    lines: List[str] = []

    if algebra == "z2n":
        spectral = dim_Zk_Z2n_spectral(k, n)
        diagrammatic = dim_Zk_Z2n_diagrammatic(k, n)
        result = {"dimension": spectral, "routes": {"spectral": spectral, "diagrammatic": diagrammatic}}
        lines = [
            f"dim Z_{k}(Z_2^{n}) = {spectral}",
            f"  spectral: {spectral}",
            f"  diagrammatic: {diagrammatic}",
        ]
        values: Dict[str, Any] = {"spectral": spectral, "diagrammatic": diagrammatic}
        if verify:
            values["walks_2k"] = walk_count_cube_closed(n, 0, 2 * k)
            if n**k <= budget:
                values["enumeration"] = sum(1 for _ in enumerate_basis(k, n, limits=limits))
        checks["dimension"] = compare(values)
    elif algebra == "sn":
        dim = dim_Zk_Sn(k, n)
        result = {"dimension": dim}
        lines = [f"dim Z_{k}(S_{n}) = {dim}"]
        if verify:
            values = {
                "recurrence": dim,
                "explicit": 1 if k == 0 else sum(stirling2_explicit(2 * k, j) for j in range(1, n + 1)),
            }
            if dim <= budget:
                values["enumeration"] = sum(1 for _ in enumerate_partitions(k, n))
            checks["dimension"] = compare(values)
    else:
        dim = dim_Zk_G21n(k, n)
        result = {"dimension": dim}
        lines = [f"dim Z_{k}(G(2,1,{n})) = {dim}"]
        if verify:
            values = {
                "closed": dim,
                "partitionwise": 1 if k == 0 else sum(
                    even_block_count_partitionwise(k, r) for r in range(1, n + 1)
                ),
            }
            if dim <= budget:
                values["enumeration"] = sum(1 for _ in enumerate_partitions(k, n, even_only=True))
            checks["dimension"] = compare(values)

    return OutputRecord(
        command="dim",
        params={"k": k, "n": n, "algebra": algebra},
        result=result,
        verification=checks if verify or algebra == "z2n" else None,
        lines=tuple(lines),
    )


def cmd_series(
    n: int,
    a: str,
    *,
    kind: str = "poincare",
    order: int = 8,
    verify: bool = False,
    limits: Optional[LimitsConfig] = None,
) -> OutputRecord:
    if kind not in SERIES_KINDS:
        raise ValueError(f"kind must be one of {', '.join(SERIES_KINDS)}")
    if order < 0:
        raise ValueError("K must be >= 0")
    vertex = GroupElement.parse(a, n)
    h = hamming_weight(vertex)
    result: Dict[str, Any] = {}
    lines: List[str] = [f"n={n}, a={vertex}, h={h}"]
    values: Dict[str, Any] = {}

    if kind in ("poincare", "both") or verify:
        roots = list(eigenvalue_multiplicities(StepSet.cube(n)))
        raw = poincare_quotient(n, vertex, limits=limits)
        reduced = raw.reduce(roots)
        coefficients = series_expand(reduced, order)
        values["poincare"] = coefficients
        if kind in ("poincare", "both"):
            result["poincare"] = {
                "reduced": rational_json(reduced, roots),
                "as_computed": rational_json(raw, roots),
                "coefficients": coefficients,
            }
            lines += [
                f"poincare: ({reduced.num}) / ({reduced.den})",
                f"  as computed: ({raw.num}) / ({raw.den})",
                f"  denominator: {denominator_factored(n)}",
                f"  coefficients: {join_ints(coefficients)}",
            ]
    if kind in ("egf", "both") or verify:
        coefficients = egf_coefficients(n, h, order)
        values["egf"] = coefficients
        if kind in ("egf", "both"):
            result["egf"] = {"coefficients": coefficients}
            lines.append(f"egf: {join_ints(coefficients)}")
    if verify:
        values["closed"] = [walk_count_cube_closed(n, h, k) for k in range(order + 1)]

    verification = {"coefficients": compare(values)} if verify or kind == "both" else None
    return OutputRecord(
        command="series",
        params={"n": n, "a": str(vertex), "kind": kind, "K": order},
        result=result,
        verification=verification,
        lines=tuple(lines),
    )


def cmd_diagrams(
    k: int,
    n: int,
    *,
    even_only: bool = False,
    expand: bool = False,
    verify: bool = False,
    limits: Optional[LimitsConfig] = None,
) -> OutputRecord:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if expand and not even_only:
        raise ValueError("--expand needs --even-only (T_d is defined for even-block diagrams)")
    budget = resolve_limits(limits).budget
    expected = dim_Zk_G21n(k, n) if even_only else dim_Zk_Sn(k, n)
    if expected > budget:
        raise CapExceededError(
            f"{expected} diagrams exceed the enumeration budget {budget}", flag="--budget"
        )
    if expand:
        require_enumeration_budget(k, n, limits)

    items: List[Dict[str, Any]] = []
    lines: List[str] = []
    summands_seen: List[str] = []
    for d in enumerate_partitions(k, n, even_only=even_only):
        entry: Dict[str, Any] = {"rgs": d.to_rgs_string(), "blocks": str(d), "r": d.r}
        line = f"{d.to_rgs_string()}  {d}"
        if expand:
            summands = [str(e) for e in expand_Td(d, n)]
            entry["summands"] = summands
            entry["count"] = len(summands)
            summands_seen.extend(summands)
            line += f"  ({len(summands)}) " + " + ".join(summands)
        items.append(entry)
        lines.append(line)

    result: Dict[str, Any] = {"count": len(items), "diagrams": items}
    lines.insert(0, f"{len(items)} diagrams (k={k}, n={n}, even_only={even_only})")
    if expand:
        result["total_summands"] = len(summands_seen)
        lines.append(f"total summands: {len(summands_seen)}")

    verification: Optional[Dict[str, Any]] = None
    if verify:
        verification = {"count": compare({"formula": expected, "enumeration": len(items)})}
        if expand:
            basis = sorted(str(e) for e in enumerate_basis(k, n, limits=limits))
            verification["cover"] = compare(
                {"summands": sorted(summands_seen), "basis": basis}
            )
    return OutputRecord(
        command="diagrams",
        params={"k": k, "n": n, "even_only": even_only, "expand": expand},
        result=result,
        verification=verification,
        lines=tuple(lines),
    )


def cmd_bratteli(
    n: int,
    k_max: int,
    *,
    verify: bool = False,
    limits: Optional[LimitsConfig] = None,
) -> OutputRecord:
    levels = bratteli(n, k_max, limits=limits)
    rows: List[Dict[str, Any]] = []
    lines: List[str] = []
    mismatched: List[str] = []
    for level in levels:
        items = level.items()
        squares = level.sum_of_squares()
        rows.append(
            {
                "level": level.level,
                "multiplicities": {str(a): m for a, m in items},
                "sum_of_squares": squares,
            }
        )
        cells = " ".join(f"({a}){m}" for a, m in items)
        lines.append(f"k={level.level}: {cells}  | {squares}")
        if verify:
            for a, m in items:
                if dim_module(level.level, n, a) != m:
                    mismatched.append(f"k={level.level},a={a}")
            if dim_Zk_Z2n_spectral(level.level, n) != squares:
                mismatched.append(f"k={level.level},sum")

    verification = None
    if verify:
        verification = {
            "levels": {"values": {"mismatches": mismatched}, "match": not mismatched}
        }
    return OutputRecord(
        command="bratteli",
        params={"n": n, "k_max": k_max},
        result={"levels": rows, "sums_of_squares": [row["sum_of_squares"] for row in rows]},
        verification=verification,
        lines=tuple(lines),
    )
