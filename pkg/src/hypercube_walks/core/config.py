from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import tomllib  # type: ignore
except ImportError:  # pragma: no cover
    import tomli as tomllib  # type: ignore

OUTPUT_FORMATS = ("table", "json")


@dataclass(frozen=True)
class LimitsConfig:
    # 2^max_n x 2^max_n integer matrices; 12 -> 4096 x 4096.
    max_n: int = 12
    # Upper bound on n^k tuples scanned by basis enumeration.
    budget: int = 10_000_000


@dataclass(frozen=True)
class OutputConfig:
    format: str = "table"  # "table" or "json"


@dataclass(frozen=True)
class SelftestConfig:
    max_n: int = 4
    k_max: int = 8


@dataclass(frozen=True)
class AppConfig:
    limits: LimitsConfig = LimitsConfig()
    output: OutputConfig = OutputConfig()
    selftest: SelftestConfig = SelftestConfig()


DEFAULT_LIMITS = LimitsConfig()


def resolve_limits(limits: Optional[LimitsConfig]) -> LimitsConfig:
    return limits if limits is not None else DEFAULT_LIMITS


def _get_section(data: Dict[str, Any], key: str) -> Dict[str, Any]:
    section = data.get(key) or {}
    if isinstance(section, dict):
        return section
    return {}


def _positive_int(value: Any, field: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{field} must be an int")
    number = int(value)
    if number < 1:
        raise ValueError(f"{field} must be >= 1")
    return number


def _output_format(value: Any) -> str:
    text = str(value).lower()
    if text not in OUTPUT_FORMATS:
        raise ValueError(f"output.format must be one of {', '.join(OUTPUT_FORMATS)}")
    return text


def load_config(path: Path, overrides: Optional[Dict[str, Any]] = None) -> AppConfig:
    raw: Dict[str, Any] = {}
    if path.exists():
        with path.open("rb") as f:
            raw = tomllib.load(f)

    if overrides:
        raw = _merge_dicts(raw, overrides)

    limits = _get_section(raw, "limits")
    output = _get_section(raw, "output")
    selftest = _get_section(raw, "selftest")

    return AppConfig(
        limits=LimitsConfig(
            max_n=_positive_int(limits.get("max_n", LimitsConfig.max_n), "limits.max_n"),
            budget=_positive_int(limits.get("budget", LimitsConfig.budget), "limits.budget"),
        ),
        output=OutputConfig(format=_output_format(output.get("format", OutputConfig.format))),
        selftest=SelftestConfig(
            max_n=_positive_int(selftest.get("max_n", SelftestConfig.max_n), "selftest.max_n"),
            k_max=_positive_int(selftest.get("k_max", SelftestConfig.k_max), "selftest.k_max"),
        ),
    )


def _merge_dicts(base: Dict[str, Any], incoming: Dict[str, Any]) -> Dict[str, Any]:
    result: Dict[str, Any] = dict(base)
    for key, value in incoming.items():
        if isinstance(value, dict) and isinstance(result.get(key), dict):
            result[key] = _merge_dicts(result[key], value)  # type: ignore[arg-type]
        else:
            result[key] = value
    return result
