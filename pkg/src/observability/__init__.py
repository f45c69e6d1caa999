"""Observability module for query metrics."""

from src.observability.metrics import (
    DOMINATION_TESTS,
    ENTRIES_PRUNED,
    QUERY_LATENCY,
    QUERY_TOTAL,
    TREE_BUILDS,
    get_metrics,
    record_query_metrics,
    record_tree_build,
)

__all__ = [
    "QUERY_TOTAL",
    "DOMINATION_TESTS",
    "ENTRIES_PRUNED",
    "QUERY_LATENCY",
    "TREE_BUILDS",
    "get_metrics",
    "record_query_metrics",
    "record_tree_build",
]
