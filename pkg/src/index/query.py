"""Domination-based candidate filtering for kNN and reverse-kNN queries.

Both queries share one rule: an entry is pruned once ``k`` other entries are
proven to dominate it. For kNN around ``R``, ``A`` counts against ``B`` when
``A`` dominates ``B`` w.r.t. ``R``. For RkNN around ``q``, ``A`` counts against
``B`` when ``A`` dominates ``q`` w.r.t. ``B`` (``B`` has k objects closer than
``q`` wherever it lies).

The tree walk tests node MBRs on the pruned side only. Domination survives
shrinking, so k dominators of a node MBR are k dominators of every entry below
it; the dominators are taken from outside the node's span so none of them can
be the entry itself. Dominators are always individual entry MBRs, which keeps
the result identical to the exhaustive pairwise evaluation.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Any, NamedTuple

from src.domination import dominates, minmax_dominates
from src.geometry import LpNorm, Rect, ensure_same_dimensions, rect_max_dist_powered
from src.index.exceptions import InvalidQueryError
from src.index.tree import Entry, RTreeNode
from src.logging_config import get_logger
from src.observability.metrics import record_query_metrics

logger: Any = get_logger(__name__)

Predicate = Callable[[Rect, Rect, Rect, LpNorm], bool]


class Criterion(StrEnum):
    """Domination test used to prune candidates."""

    EQ2 = "eq2"  # complete and sufficient
    MINMAX = "minmax"  # MaxDist/MinDist baseline

    @property
    def predicate(self) -> Predicate:
        return dominates if self is Criterion.EQ2 else minmax_dominates


@dataclass
class QueryStats:
    """Counters collected during one candidate query."""

    domination_tests: int = 0
    nodes_visited: int = 0
    entries_pruned: int = 0
    candidates_returned: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "domination_tests": self.domination_tests,
            "nodes_visited": self.nodes_visited,
            "entries_pruned": self.entries_pruned,
            "candidates_returned": self.candidates_returned,
        }


class CandidateResult(NamedTuple):
    ids: frozenset[int]
    stats: QueryStats


# Tests whether ``dominator`` counts against the target region
_Test = Callable[[Entry, Rect], bool]


def _validate(k: int, reference: Rect, query: Rect) -> None:
    if k < 1:
        raise InvalidQueryError(f"k must be >= 1, got {k}")
    ensure_same_dimensions(reference, query)


def _filter(
    root: RTreeNode,
    k: int,
    pool: Sequence[tuple[int, Entry]],
    counts_against: _Test,
) -> CandidateResult:
    """Walk the tree, pruning subtrees and entries with at least ``k`` dominators.

    ``pool`` holds (depth-first position, entry) pairs in the order dominators
    are tried. A scan stops as soon as ``k`` are found, or once the entries
    left to try can no longer reach ``k``.

    Every undecided entry reserves the n - 1 tests its own scan may need. A
    node is tested only when the tests saved so far cover the node scan, so
    ``domination_tests`` never exceeds n * (n - 1).
    """
    stats = QueryStats()
    survivors: set[int] = set()
    n = len(pool)
    slack = 0

    def has_k_dominators(target: Rect, skip_lo: int, skip_hi: int) -> bool:
        remaining = n - (skip_hi - skip_lo)
        found = 0
        for position, other in pool:
            if found + remaining < k:
                return False
            if skip_lo <= position < skip_hi:
                continue
            remaining -= 1
            stats.domination_tests += 1
            if counts_against(other, target):
                found += 1
                if found >= k:
                    return True
        return False

    def run(target: Rect, skip_lo: int, skip_hi: int) -> tuple[bool, int]:
        before = stats.domination_tests
        return has_k_dominators(target, skip_lo, skip_hi), stats.domination_tests - before

    stack = [root]
    while stack:
        node = stack.pop()
        stats.nodes_visited += 1
        start, stop = node.span
        outside = root.size - node.size
        if 1 < node.size and outside >= k and slack >= outside:
            pruned, used = run(node.mbr, start, stop)
            slack -= used
            if pruned:
                stats.entries_pruned += node.size
                slack += node.size * (n - 1)
                continue
        if node.is_leaf:
            for offset, entry in enumerate(node.children):
                position = start + offset
                pruned, used = run(entry.mbr, position, position + 1)  # type: ignore[union-attr]
                slack += (n - 1) - used
                if pruned:
                    stats.entries_pruned += 1
                else:
                    survivors.add(entry.id)  # type: ignore[union-attr]
        else:
            stack.extend(reversed(node.children))  # type: ignore[arg-type]

    stats.candidates_returned = len(survivors)
    return CandidateResult(frozenset(survivors), stats)


def knn_candidates(
    root: RTreeNode,
    r: Rect,
    k: int,
    criterion: Criterion,
    norm: LpNorm,
) -> CandidateResult:
    """Entries dominated w.r.t. ``r`` by fewer than ``k`` other entries.

    Dominators are tried closest-first (ascending powered MaxDist to ``r``).

    Raises:
        InvalidQueryError: k < 1
        IncompatibleOperandsError: ``r`` does not match the dataset dimensionality
    """
    _validate(k, root.mbr, r)
    started = time.perf_counter()
    predicate = criterion.predicate

    pool = sorted(
        enumerate(root.iter_entries()),
        key=lambda item: (rect_max_dist_powered(item[1].mbr, r, norm), item[0]),
    )
    result = _filter(root, k, pool, lambda other, target: predicate(other.mbr, target, r, norm))

    elapsed = time.perf_counter() - started
    record_query_metrics("knn", criterion.value, result.stats, elapsed)
    logger.debug(f"knn k={k} {criterion.value}: {result.stats.as_dict()}")
    return result


def rknn_candidates(
    root: RTreeNode,
    q: Rect,
    k: int,
    criterion: Criterion,
    norm: LpNorm,
) -> CandidateResult:
    """Entries for which fewer than ``k`` other entries dominate ``q``.

    Raises:
        InvalidQueryError: k < 1
        IncompatibleOperandsError: ``q`` does not match the dataset dimensionality
    """
    _validate(k, root.mbr, q)
    started = time.perf_counter()
    predicate = criterion.predicate

    pool = list(enumerate(root.iter_entries()))
    result = _filter(root, k, pool, lambda other, target: predicate(other.mbr, q, target, norm))

    elapsed = time.perf_counter() - started
    record_query_metrics("rknn", criterion.value, result.stats, elapsed)
    logger.debug(f"rknn k={k} {criterion.value}: {result.stats.as_dict()}")
    return result


def naive_knn_candidates(
    entries: Sequence[Entry],
    r: Rect,
    k: int,
    criterion: Criterion,
    norm: LpNorm,
) -> frozenset[int]:
    """Exhaustive O(n^2) evaluation of the kNN candidate contract."""
    if k < 1:
        raise InvalidQueryError(f"k must be >= 1, got {k}")
    predicate = criterion.predicate
    survivors = set()
    for b in entries:
        ensure_same_dimensions(b.mbr, r)
        dominators = sum(1 for a in entries if a.id != b.id and predicate(a.mbr, b.mbr, r, norm))
        if dominators < k:
            survivors.add(b.id)
    return frozenset(survivors)


def naive_rknn_candidates(
    entries: Sequence[Entry],
    q: Rect,
    k: int,
    criterion: Criterion,
    norm: LpNorm,
) -> frozenset[int]:
    """Exhaustive O(n^2) evaluation of the RkNN candidate contract."""
    if k < 1:
        raise InvalidQueryError(f"k must be >= 1, got {k}")
    predicate = criterion.predicate
    survivors = set()
    for b in entries:
        ensure_same_dimensions(b.mbr, q)
        dominators = sum(1 for a in entries if a.id != b.id and predicate(a.mbr, q, b.mbr, norm))
        if dominators < k:
            survivors.add(b.id)
    return frozenset(survivors)
