"""Prometheus metrics for spatial index queries.

Per-query counters live in ``QueryStats``; these collectors aggregate them
over the lifetime of the process (a benchmark run, a long-lived service).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from prometheus_client import Counter, Histogram, generate_latest

if TYPE_CHECKING:
    from src.index.query import QueryStats

# =============================================================================
# Counters
# =============================================================================

QUERY_TOTAL = Counter(
    "spatial_dom_queries_total",
    "Candidate queries answered",
    ["query", "criterion"],
)

DOMINATION_TESTS = Counter(
    "spatial_dom_domination_tests_total",
    "Domination predicates evaluated by candidate queries",
    ["query", "criterion"],
)

ENTRIES_PRUNED = Counter(
    "spatial_dom_entries_pruned_total",
    "Entries excluded from candidate sets",
    ["query", "criterion"],
)

TREE_BUILDS = Counter(
    "spatial_dom_tree_builds_total",
    "STR bulk loads performed",
)

# =============================================================================
# Histograms
# =============================================================================

QUERY_LATENCY = Histogram(
    "spatial_dom_query_seconds",
    "Candidate query wall-clock time",
    ["query"],
    buckets=[0.0005, 0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0],
)

# =============================================================================
# Helper Functions
# =============================================================================


def record_query_metrics(
    query: str,
    criterion: str,
    stats: QueryStats,
    elapsed_seconds: float,
) -> None:
    """Record metrics for a completed candidate query.

    Args:
        query: Query kind (knn, rknn)
        criterion: Domination criterion name (eq2, minmax)
        stats: Counters collected by the query
        elapsed_seconds: Wall-clock duration
    """
    QUERY_TOTAL.labels(query=query, criterion=criterion).inc()
    DOMINATION_TESTS.labels(query=query, criterion=criterion).inc(stats.domination_tests)
    ENTRIES_PRUNED.labels(query=query, criterion=criterion).inc(stats.entries_pruned)
    QUERY_LATENCY.labels(query=query).observe(elapsed_seconds)


def record_tree_build() -> None:
    TREE_BUILDS.inc()


def get_metrics() -> bytes:
    """Generate Prometheus metrics output.

    Returns:
        Metrics in Prometheus text exposition format.
    """
    return generate_latest()
