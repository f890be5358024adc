from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from hypercube_walks.core.poly import IntPolynomial, RationalFunction, linear_factor_multiplicities


def to_jsonable(value: Any) -> Any:
    # ints become decimal strings, bools stay JSON booleans
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def encode_json(data: Dict[str, Any]) -> str:
    return json.dumps(to_jsonable(data), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def decode_json(payload: str) -> Dict[str, Any]:
    if not payload:
        return {}
    value = json.loads(payload)
    if isinstance(value, dict):
        return value
    raise ValueError("expected JSON object")


def polynomial_json(p: IntPolynomial) -> List[int]:
    return list(p.coeffs) or [0]


def rational_json(f: RationalFunction, roots: Iterable[int]) -> Dict[str, Any]:
    return {
        "num": polynomial_json(f.num),
        "den": polynomial_json(f.den),
        "den_factors": [list(pair) for pair in linear_factor_multiplicities(f.den, roots)],
    }


def compare(values: Mapping[str, Any]) -> Dict[str, Any]:
    distinct = {json.dumps(to_jsonable(v), sort_keys=True) for v in values.values()}
    return {"values": dict(values), "match": len(distinct) <= 1}


@dataclass(frozen=True)
class OutputRecord:
    command: str
    params: Dict[str, Any]
    result: Dict[str, Any]
    verification: Optional[Dict[str, Dict[str, Any]]] = None
    # human-readable rendering; not part of the JSON payload
    lines: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def ok(self) -> bool:
        if self.verification is None:
            return True
        if not self.verification:
            return False
        return all(check.get("match", False) for check in self.verification.values())

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "command": self.command,
            "params": self.params,
            "result": self.result,
        }
        if self.verification is not None:
            data["verification"] = self.verification
            data["ok"] = self.ok
        return data

    def to_json(self) -> str:
        return encode_json(self.to_dict())

    def render_table(self) -> str:
        out: List[str] = list(self.lines)
        if self.verification is not None:
            out.append("")
            out.append("verification:")
            for name, check in self.verification.items():
                status = "ok" if check.get("match") else "MISMATCH"
                values = ", ".join(f"{k}={_plain(v)}" for k, v in check.get("values", {}).items())
                out.append(f"  {name}: {status} ({values})")
        return "\n".join(out)

    def render(self, output_format: str) -> str:
        return self.to_json() if output_format == "json" else self.render_table()


def _plain(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_plain(v) for v in value)
    return str(value)


def join_ints(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)
