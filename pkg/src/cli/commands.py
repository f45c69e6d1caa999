"""Handlers for the check, classify, generate, knn and rknn subcommands.

Every handler takes the parsed ``argparse.Namespace`` and returns an exit
code; input errors propagate as exceptions and are mapped to exit 2 by
``src.cli.main``.
"""

from __future__ import annotations

import argparse
import json
import sys
from enum import IntEnum
from typing import Any

from src.config import get_settings
from src.data import GeneratorConfig, generate, read_jsonl_path, write_jsonl_path
from src.domination import (
    classify_halfspace,
    corner_oracle_margin,
    domination_margin,
    minmax_dominates,
    sample_falsify,
)
from src.geometry import LpNorm, Point, Rect, ensure_same_dimensions, rect_max_dist, rect_min_dist
from src.index import Criterion, SpatialIndex
from src.logging_config import get_logger

logger: Any = get_logger(__name__)


class ExitCode(IntEnum):
    """Process exit status mapping shared by all subcommands."""

    OK = 0  # success, or domination holds
    NOT_DOMINATED = 1
    INPUT_ERROR = 2
    ORACLE_MISMATCH = 3


def emit(payload: dict[str, Any]) -> None:
    print(json.dumps(payload))


# =============================================================================
# check
# =============================================================================


def cmd_check(args: argparse.Namespace) -> int:
    """Decide whether A dominates B w.r.t. R and report every criterion."""
    a = Rect.parse(args.a)
    b = Rect.parse(args.b)
    r = Rect.parse(args.r)
    d = ensure_same_dimensions(a, b, r)
    norm = LpNorm(args.p)

    verdict = domination_margin(a, b, r, norm)
    report: dict[str, Any] = {
        "dimensions": d,
        "p": norm.p,
        "eq2": {
            "dominated": verdict.dominated,
            "margin": verdict.margin,
            "per_dim_terms": list(verdict.per_dim_terms),
            "critical_corner": list(verdict.critical_corner.coords),
        },
        "minmax": {
            "dominated": minmax_dominates(a, b, r, norm),
            "max_dist_a_r": rect_max_dist(a, r, norm),
            "min_dist_b_r": rect_min_dist(b, r, norm),
        },
        "corner_oracle": None,
        "falsifier": None,
    }

    exit_code = ExitCode.OK if verdict.dominated else ExitCode.NOT_DOMINATED

    if args.oracle:
        cap = args.corner_cap if args.corner_cap is not None else get_settings().corner_cap
        if d <= cap:
            oracle_margin = corner_oracle_margin(a, b, r, norm, corner_cap=cap)
            agrees = (oracle_margin < 0.0) == verdict.dominated
            report["corner_oracle"] = {
                "dominated": oracle_margin < 0.0,
                "margin": oracle_margin,
                "agrees": agrees,
            }
            if not agrees:
                logger.warning(
                    f"Corner oracle disagrees: eq2={verdict.margin} corner={oracle_margin}"
                )
                exit_code = ExitCode.ORACLE_MISMATCH
        else:
            report["corner_oracle"] = {"skipped": f"d={d} exceeds corner cap {cap}"}

    if args.falsify is not None:
        samples = args.falsify or get_settings().falsify_samples
        witness = sample_falsify(a, b, r, norm, samples, args.seed)
        report["falsifier"] = {
            "samples": samples,
            "seed": args.seed,
            "counterexample": None
            if witness is None
            else {
                "a": list(witness.a.coords),
                "b": list(witness.b.coords),
                "r": list(witness.r.coords),
                "dist_a": witness.dist_a,
                "dist_b": witness.dist_b,
            },
        }
        if witness is not None and verdict.dominated:
            logger.warning("Falsifier refuted a domination the criterion accepted")
            exit_code = ExitCode.ORACLE_MISMATCH

    if args.format == "json":
        emit(report)
    else:
        _print_check_text(report)
    return exit_code


def _print_check_text(report: dict[str, Any]) -> None:
    eq2 = report["eq2"]
    minmax = report["minmax"]
    print(f"d={report['dimensions']} p={report['p']:g}")
    terms = ", ".join(format(t, "g") for t in eq2["per_dim_terms"])
    print(f"eq2:    {str(eq2['dominated']).lower()}  margin={eq2['margin']:g}  terms=[{terms}]")
    print(
        f"minmax: {str(minmax['dominated']).lower()}  "
        f"MaxDist(A,R)={minmax['max_dist_a_r']:.6g}  MinDist(B,R)={minmax['min_dist_b_r']:.6g}"
    )
    oracle = report["corner_oracle"]
    if oracle is not None:
        if "skipped" in oracle:
            print(f"corner: skipped ({oracle['skipped']})")
        else:
            print(f"corner: {str(oracle['dominated']).lower()}  margin={oracle['margin']:g}")
    falsifier = report["falsifier"]
    if falsifier is not None:
        witness = falsifier["counterexample"]
        if witness is None:
            print(f"falsifier: no counterexample in {falsifier['samples']} samples")
        else:
            print(
                f"falsifier: a={witness['a']} b={witness['b']} r={witness['r']} "
                f"dist_a={witness['dist_a']:.6g} >= dist_b={witness['dist_b']:.6g}"
            )


# =============================================================================
# classify
# =============================================================================


def cmd_classify(args: argparse.Namespace) -> int:
    """Place rectangle R relative to the bisector of points a and b."""
    a = Point.parse(args.a)
    b = Point.parse(args.b)
    r = Rect.parse(args.r)
    result = classify_halfspace(a, b, r, LpNorm(args.p))
    emit({"class": result.value})
    return ExitCode.OK


# =============================================================================
# generate
# =============================================================================


def cmd_generate(args: argparse.Namespace) -> int:
    """Write a synthetic dataset in canonical JSONL."""
    config = GeneratorConfig(
        n=args.n,
        d=args.d,
        extent_lo=args.extent_lo,
        extent_hi=args.extent_hi,
        max_side=args.max_side,
        distribution=args.distribution,
        clusters=args.clusters,
        seed=args.seed,
    )
    entries = generate(config)
    write_jsonl_path(entries, args.out)
    summary = {"n": config.n, "d": config.d, "out": args.out}
    if args.out == "-":
        # stdout carries the dataset itself
        print(json.dumps(summary), file=sys.stderr)
    else:
        emit(summary)
    return ExitCode.OK


# =============================================================================
# knn / rknn
# =============================================================================


def _run_candidates(args: argparse.Namespace, query: str) -> int:
    entries = read_jsonl_path(args.data)
    index = SpatialIndex.build(entries, args.fanout)
    region = Rect.parse(args.query)
    ensure_same_dimensions(index.root.mbr, region)
    norm = LpNorm(args.p)
    criterion = Criterion(args.criterion)

    if query == "knn":
        ids, stats = index.knn_candidates(region, args.k, criterion, norm)
    else:
        ids, stats = index.rknn_candidates(region, args.k, criterion, norm)

    payload: dict[str, Any] = {
        "query": query,
        "k": args.k,
        "criterion": criterion.value,
        "candidates": sorted(ids),
        "stats": stats.as_dict(),
    }
    exit_code = ExitCode.OK
    if args.naive_check:
        if query == "knn":
            expected = index.naive_knn_candidates(region, args.k, criterion, norm)
        else:
            expected = index.naive_rknn_candidates(region, args.k, criterion, norm)
        payload["naive_check"] = "passed" if expected == ids else "failed"
        if expected != ids:
            logger.warning(
                f"{query} mismatch: index-only={sorted(ids - expected)} "
                f"naive-only={sorted(expected - ids)}"
            )
            exit_code = ExitCode.ORACLE_MISMATCH
    emit(payload)
    return exit_code


def cmd_knn(args: argparse.Namespace) -> int:
    """kNN candidate ids around a query rectangle."""
    return _run_candidates(args, "knn")


def cmd_rknn(args: argparse.Namespace) -> int:
    """Reverse-kNN candidate ids for a query rectangle."""
    return _run_candidates(args, "rknn")
