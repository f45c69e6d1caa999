"""Pruning-power benchmark.

For each (d, p, k) configuration a uniform dataset is generated and kNN
candidates are computed under both criteria; with ``--oracle-bench`` the
single-call latency of the complete criterion and of the corner oracle is
measured per d as well. Rows come out in configuration order.

CSV schema version 1, columns in this order:
d, p, k, criterion, candidates, domination_tests, elapsed_ns
"""

from __future__ import annotations

import argparse
import time
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from src.cli.commands import ExitCode
from src.config import get_settings
from src.data import GeneratorConfig, generate, make_rng
from src.domination import corner_oracle_dominates, dominates
from src.geometry import LpNorm, Rect
from src.index import Criterion, SpatialIndex
from src.logging_config import get_logger
from src.observability.metrics import get_metrics

logger: Any = get_logger(__name__)

BENCH_COLUMNS = ["d", "p", "k", "criterion", "candidates", "domination_tests", "elapsed_ns"]


@dataclass(frozen=True, slots=True)
class BenchRow:
    d: int
    p: float
    k: int
    criterion: str
    candidates: int
    domination_tests: int
    elapsed_ns: int


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(row) for row in self.rows], columns=BENCH_COLUMNS)

    def write_csv(self, path: str | Path) -> None:
        frame = self.to_frame()
        if str(path) == "-":
            print(frame.to_csv(index=False), end="")
            return
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False)


def median_ns(call: Callable[[], Any], repeats: int) -> tuple[int, Any]:
    """Median wall-clock of ``repeats`` calls, plus the result of the first call."""
    timings = []
    first: Any = None
    for i in range(repeats):
        started = time.perf_counter_ns()
        result = call()
        timings.append(time.perf_counter_ns() - started)
        if i == 0:
            first = result
    return int(np.median(timings)), first


def random_triple(d: int, seed: int) -> tuple[Rect, Rect, Rect]:
    """Three random rectangles in [0, 1]^d for single-call timing."""
    rng = make_rng(seed)
    rects = []
    for _ in range(3):
        corners = rng.uniform(0.0, 1.0, size=(2, d))
        rects.append(Rect.from_bounds(corners.min(axis=0).tolist(), corners.max(axis=0).tolist()))
    return rects[0], rects[1], rects[2]


def run_bench(
    *,
    n: int,
    d_list: Sequence[int],
    p_list: Sequence[float],
    k_list: Sequence[int],
    seed: int,
    repeats: int,
    fanout: int | None = None,
    max_side: float = 0.05,
    oracle_bench: bool = False,
    corner_cap: int | None = None,
) -> BenchReport:
    """Run the benchmark grid and collect rows in configuration order."""
    report = BenchReport()
    for d in d_list:
        entries = generate(GeneratorConfig(n=n, d=d, max_side=max_side, seed=seed))
        index = SpatialIndex.build(entries, fanout)
        # one more generated rectangle serves as the query region
        query = generate(GeneratorConfig(n=1, d=d, max_side=max_side, seed=seed + 1))[0].mbr
        for p in p_list:
            norm = LpNorm(p)
            for k in k_list:
                for criterion in (Criterion.EQ2, Criterion.MINMAX):
                    elapsed, result = median_ns(
                        lambda c=criterion, k=k, norm=norm: index.knn_candidates(
                            query, k, c, norm
                        ),
                        repeats,
                    )
                    ids, stats = result
                    report.rows.append(
                        BenchRow(
                            d, norm.p, k, criterion.value, len(ids), stats.domination_tests, elapsed
                        )
                    )
                    logger.info(f"d={d} p={p:g} k={k} {criterion.value}: {len(ids)} candidates")

    if oracle_bench:
        cap = corner_cap if corner_cap is not None else get_settings().corner_cap
        for d in d_list:
            a, b, r = random_triple(d, seed + d)
            for p in p_list:
                norm = LpNorm(p)
                elapsed, _ = median_ns(
                    lambda a=a, b=b, r=r, norm=norm: dominates(a, b, r, norm), repeats
                )
                report.rows.append(BenchRow(d, norm.p, 0, "eq2_call", 0, 1, elapsed))
                if d <= cap:
                    elapsed, _ = median_ns(
                        lambda a=a, b=b, r=r, norm=norm: corner_oracle_dominates(
                            a, b, r, norm, corner_cap=cap
                        ),
                        repeats,
                    )
                    report.rows.append(BenchRow(d, norm.p, 0, "corner_call", 0, 1, elapsed))
    return report


def cmd_bench(args: argparse.Namespace) -> int:
    """Compare candidate-set sizes and timings of both criteria."""
    repeats = args.repeats if args.repeats is not None else get_settings().bench_repeats
    report = run_bench(
        n=args.n,
        d_list=args.d_list,
        p_list=args.p_list,
        k_list=args.k_list,
        seed=args.seed,
        repeats=repeats,
        fanout=args.fanout,
        max_side=args.max_side,
        oracle_bench=args.oracle_bench,
        corner_cap=args.corner_cap,
    )
    report.write_csv(args.out)
    if args.metrics_out:
        Path(args.metrics_out).write_bytes(get_metrics())
    return ExitCode.OK
