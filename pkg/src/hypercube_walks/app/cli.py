from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict

from hypercube_walks.app.commands import (
    ALGEBRAS,
    SERIES_KINDS,
    WALK_METHODS,
    cmd_bratteli,
    cmd_diagrams,
    cmd_dim,
    cmd_series,
    cmd_walks,
)
from hypercube_walks.app.schemas import OutputRecord
from hypercube_walks.app.selftest import cmd_selftest
from hypercube_walks.core.config import OUTPUT_FORMATS, AppConfig, load_config
from hypercube_walks.core.errors import CapExceededError, VerificationError
from hypercube_walks.core.logging import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=Path("config.toml"))
    common.add_argument("--log-level", type=str, default=None)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")
    common.add_argument("--verify", action="store_true", help="Cross-check every available route")
    common.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="Matrix cap: 2^n x 2^n integer matrices (memory grows as 4^n).",
    )
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="Enumeration cap on n^k tuples / diagrams scanned.",
    )
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="hypercube-walks")
    sub = parser.add_subparsers(dest="cmd", required=True)

    walks = sub.add_parser("walks", parents=[common], help="Count k-step walks between two vertices")
    walks.add_argument("-n", type=int, required=True)
    walks.add_argument("--from", dest="source", type=str, required=True, help='Bit string, e.g. "000"')
    walks.add_argument("--to", dest="target", type=str, required=True)
    walks.add_argument("-k", type=int, required=True)
    walks.add_argument("--method", choices=WALK_METHODS, default="all")
    walks.add_argument("--steps", type=str, default=None, help='Step set, e.g. "100,010,001"')

    dim = sub.add_parser("dim", parents=[common], help="Centralizer algebra dimension")
    dim.add_argument("-k", type=int, required=True)
    dim.add_argument("-n", type=int, required=True)
    dim.add_argument("--algebra", choices=ALGEBRAS, default="z2n")

    series = sub.add_parser("series", parents=[common], help="Poincare series / EGF coefficients")
    series.add_argument("-n", type=int, required=True)
    series.add_argument("-a", type=str, required=True, help="Endpoint bit string")
    series.add_argument("--kind", choices=SERIES_KINDS, default="poincare")
    series.add_argument("-K", type=int, default=8, help="Last coefficient index")

    diagrams = sub.add_parser("diagrams", parents=[common], help="List set-partition diagrams")
    diagrams.add_argument("-k", type=int, required=True)
    diagrams.add_argument("-n", type=int, required=True)
    diagrams.add_argument("--even-only", action="store_true")
    diagrams.add_argument("--expand", action="store_true", help="List the E summands of each T_d")

    brat = sub.add_parser("bratteli", parents=[common], help="Bratteli multiplicities by level")
    brat.add_argument("-n", type=int, required=True)
    brat.add_argument("--k-max", type=int, default=6)

    selftest = sub.add_parser("selftest", parents=[common], help="Run the built-in acceptance checks")
    selftest.add_argument("--k-max", type=int, default=None)

    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    if args.max_n is not None:
        # selftest reads --max-n as the upper n of its cross-route sweep
        section = "selftest" if args.cmd == "selftest" else "limits"
        overrides.setdefault(section, {})["max_n"] = args.max_n
    if args.budget is not None:
        overrides.setdefault("limits", {})["budget"] = args.budget
    if args.format is not None:
        overrides.setdefault("output", {})["format"] = args.format
    if args.cmd == "selftest" and args.k_max is not None:
        overrides.setdefault("selftest", {})["k_max"] = args.k_max
    return overrides


def _dispatch(args: argparse.Namespace, config: AppConfig) -> OutputRecord:
    limits = config.limits
    verify = bool(args.verify)
    if args.cmd == "walks":
        return cmd_walks(
            args.n,
            args.source,
            args.target,
            args.k,
            method=args.method,
            steps=args.steps,
            verify=verify,
            limits=limits,
        )
    if args.cmd == "dim":
        return cmd_dim(args.k, args.n, algebra=args.algebra, verify=verify, limits=limits)
    if args.cmd == "series":
        return cmd_series(args.n, args.a, kind=args.kind, order=args.K, verify=verify, limits=limits)
    if args.cmd == "diagrams":
        return cmd_diagrams(
            args.k,
            args.n,
            even_only=bool(args.even_only),
            expand=bool(args.expand),
            verify=verify,
            limits=limits,
        )
    if args.cmd == "bratteli":
        return cmd_bratteli(args.n, args.k_max, verify=verify, limits=limits)
    if args.cmd == "selftest":
        return cmd_selftest(
            max_n=config.selftest.max_n, k_max=config.selftest.k_max, limits=limits
        )
    raise RuntimeError("unreachable")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        config = load_config(args.config, overrides=_overrides(args) or None)
        record = _dispatch(args, config)
    except CapExceededError as exc:
        print(f"error: {exc} (raise it with {exc.flag})", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        logger.error("internal verification failed: %s", exc)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    print(record.render(config.output.format))
    if not record.ok:
        logger.warning("%s: verification mismatch", record.command)
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
