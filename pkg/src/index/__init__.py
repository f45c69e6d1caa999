"""STR-loaded rectangle tree with domination-based candidate filtering."""

from src.index.exceptions import IndexBuildError, InvalidQueryError, SpatialIndexError
from src.index.query import (
    CandidateResult,
    Criterion,
    QueryStats,
    knn_candidates,
    naive_knn_candidates,
    naive_rknn_candidates,
    rknn_candidates,
)
from src.index.spatial_index import SpatialIndex
from src.index.tree import Entry, RTreeNode, build_str

__all__ = [
    # Tree
    "Entry",
    "RTreeNode",
    "build_str",
    "SpatialIndex",
    # Queries
    "Criterion",
    "QueryStats",
    "CandidateResult",
    "knn_candidates",
    "rknn_candidates",
    "naive_knn_candidates",
    "naive_rknn_candidates",
    # Exceptions
    "SpatialIndexError",
    "IndexBuildError",
    "InvalidQueryError",
]
