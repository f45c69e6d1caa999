"""Command-line entry point.

Usage:
    spatial-dom check --a '[[0,0],[2,2]]' --b '[[0,0],[0,0]]' --r '[[2,10],[2,4]]' --p 2
    spatial-dom generate --n 1000 --d 2 --seed 1 --out data/uniform.jsonl
    spatial-dom knn --data data/uniform.jsonl --query '[[0.4,0.5],[0.4,0.5]]' --k 1
    spatial-dom bench --n 1000 --d-list 2,5,10 --out bench.csv

Exit codes: 0 success / dominated, 1 not dominated, 2 input error,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from typing import Any

from pydantic import ValidationError

from src.cli.bench import cmd_bench
from src.cli.commands import (
    ExitCode,
    cmd_check,
    cmd_classify,
    cmd_generate,
    cmd_knn,
    cmd_rknn,
)
from src.config import get_settings
from src.data import DatasetError
from src.domination import DominationError
from src.geometry import GeometryError
from src.index import SpatialIndexError
from src.logging_config import get_logger, setup_logging

logger: Any = get_logger(__name__)

INPUT_ERRORS = (
    GeometryError,
    DominationError,
    DatasetError,
    SpatialIndexError,
    ValidationError,
    json.JSONDecodeError,
    OSError,
)


def _list_of(convert: Callable[[str], Any], name: str) -> Callable[[str], list[Any]]:
    def parse(text: str) -> list[Any]:
        try:
            values = [convert(part) for part in text.split(",") if part.strip()]
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"invalid {name} list {text!r}") from e
        if not values:
            raise argparse.ArgumentTypeError(f"{name} list is empty")
        return values

    return parse


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(text)
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(text)
    return value


def _norm_order(text: str) -> float:
    value = float(text)
    if not value >= 1.0 or value == float("inf"):
        raise ValueError(text)
    return value


def _add_norm(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=float, default=2.0, help="Lp norm order (finite, >= 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spatial-dom",
        description="Spatial domination of rectangles under Lp norms",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Override SPATIAL_DOM_LOG_LEVEL",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Decide whether A dominates B w.r.t. R")
    check.add_argument("--a", required=True, help="Rectangle literal, e.g. [[0,0],[2,2]]")
    check.add_argument("--b", required=True)
    check.add_argument("--r", required=True)
    _add_norm(check)
    check.add_argument("--format", choices=["text", "json"], default="text")
    check.add_argument("--oracle", action="store_true", help="Also run the corner oracle")
    check.add_argument("--corner-cap", type=int, default=None)
    check.add_argument(
        "--falsify",
        type=int,
        nargs="?",
        const=0,
        default=None,
        metavar="N",
        help="Sample N triples for a counterexample (default SPATIAL_DOM_FALSIFY_SAMPLES)",
    )
    check.add_argument("--seed", type=_non_negative_int, default=0)
    check.set_defaults(handler=cmd_check)

    classify = sub.add_parser("classify", help="Rectangle vs. bisector of two points")
    classify.add_argument("--a", required=True, help="Point literal, e.g. [0,2]")
    classify.add_argument("--b", required=True)
    classify.add_argument("--r", required=True)
    _add_norm(classify)
    classify.set_defaults(handler=cmd_classify)

    gen = sub.add_parser("generate", help="Write a synthetic JSONL dataset")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=int, required=True)
    gen.add_argument("--extent-lo", type=float, default=0.0)
    gen.add_argument("--extent-hi", type=float, default=1.0)
    gen.add_argument("--max-side", type=float, default=0.05)
    gen.add_argument("--distribution", choices=["uniform", "clustered"], default="uniform")
    gen.add_argument("--clusters", type=int, default=8)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default="-", help="Output path, - for stdout")
    gen.set_defaults(handler=cmd_generate)

    for name, handler, help_text in (
        ("knn", cmd_knn, "kNN candidates around a query rectangle"),
        ("rknn", cmd_rknn, "Reverse-kNN candidates for a query rectangle"),
    ):
        query = sub.add_parser(name, help=help_text)
        query.add_argument("--data", required=True, help="JSONL dataset, - for stdin")
        query.add_argument("--query", required=True, help="Rectangle literal")
        query.add_argument("--k", type=int, default=1)
        _add_norm(query)
        query.add_argument("--criterion", choices=["eq2", "minmax"], default="eq2")
        query.add_argument("--fanout", type=int, default=None)
        query.add_argument(
            "--naive-check", action="store_true", help="Compare with the O(n^2) evaluation"
        )
        query.set_defaults(handler=handler)

    bench = sub.add_parser("bench", help="Pruning-power benchmark, CSV output")
    bench.add_argument("--n", type=_positive_int, default=1000)
    bench.add_argument("--d-list", type=_list_of(_positive_int, "dimension"), default=[2])
    bench.add_argument("--p-list", type=_list_of(_norm_order, "norm order"), default=[2.0])
    bench.add_argument("--k-list", type=_list_of(_positive_int, "k"), default=[1])
    bench.add_argument("--seed", type=_non_negative_int, default=42)
    bench.add_argument("--repeats", type=_positive_int, default=None)
    bench.add_argument("--fanout", type=int, default=None)
    bench.add_argument("--max-side", type=float, default=0.05)
    bench.add_argument("--oracle-bench", action="store_true")
    bench.add_argument("--corner-cap", type=int, default=None)
    bench.add_argument("--out", default="-", help="CSV path, - for stdout")
    bench.add_argument("--metrics-out", default=None, help="Write Prometheus metrics here")
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(get_settings(), level=args.log_level)
    try:
        return int(args.handler(args))
    except INPUT_ERRORS as e:
        logger.debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
