"""Convenience wrapper bundling a bulk-loaded tree with its dataset."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from src.config import get_settings
from src.geometry import LpNorm, Rect
from src.index.query import (
    CandidateResult,
    Criterion,
    knn_candidates,
    naive_knn_candidates,
    naive_rknn_candidates,
    rknn_candidates,
)
from src.index.tree import Entry, RTreeNode, build_str


@dataclass(frozen=True)
class SpatialIndex:
    """Immutable after ``build``; safe to query from several threads."""

    root: RTreeNode
    entries: tuple[Entry, ...]
    fanout: int

    @classmethod
    def build(cls, entries: Sequence[Entry], fanout: int | None = None) -> SpatialIndex:
        fanout = fanout if fanout is not None else get_settings().default_fanout
        return cls(root=build_str(entries, fanout), entries=tuple(entries), fanout=fanout)

    @property
    def dimensions(self) -> int:
        return self.root.mbr.dimensions

    def __len__(self) -> int:
        return len(self.entries)

    def knn_candidates(
        self, r: Rect, k: int, criterion: Criterion, norm: LpNorm
    ) -> CandidateResult:
        return knn_candidates(self.root, r, k, criterion, norm)

    def rknn_candidates(
        self, q: Rect, k: int, criterion: Criterion, norm: LpNorm
    ) -> CandidateResult:
        return rknn_candidates(self.root, q, k, criterion, norm)

    def naive_knn_candidates(
        self, r: Rect, k: int, criterion: Criterion, norm: LpNorm
    ) -> frozenset[int]:
        return naive_knn_candidates(self.entries, r, k, criterion, norm)

    def naive_rknn_candidates(
        self, q: Rect, k: int, criterion: Criterion, norm: LpNorm
    ) -> frozenset[int]:
        return naive_rknn_candidates(self.entries, q, k, criterion, norm)
