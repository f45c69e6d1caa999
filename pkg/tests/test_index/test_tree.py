"""Tests for STR bulk loading."""

import numpy as np
import pytest

from src.geometry import Rect
from src.index import Entry, IndexBuildError, RTreeNode, SpatialIndex, build_str
from tests.helpers import random_entries


def _leaves(root: RTreeNode) -> list[RTreeNode]:
    return [node for node in root.iter_nodes() if node.is_leaf]


def _assert_sound(root: RTreeNode, entries: list[Entry]) -> None:
    reached = [e.id for e in root.iter_entries()]
    assert sorted(reached) == sorted(e.id for e in entries)
    for node in root.iter_nodes():
        for child in node.children:
            assert node.mbr.contains(child.mbr)
        if not node.is_leaf:
            levels = {child.level for child in node.children}  # type: ignore[union-attr]
            assert levels == {node.level - 1}


class TestBuildStr:
    def test_single_entry(self) -> None:
        entry = Entry(7, Rect.from_pairs([[0, 1], [2, 3]]))
        root = build_str([entry], fanout=16)
        assert root.is_leaf
        assert root.mbr == entry.mbr
        assert root.children == (entry,)
        assert root.span == (0, 1)

    def test_two_levels_for_256_entries(self, rng: np.random.Generator) -> None:
        entries = random_entries(rng, 256, 2)
        root = build_str(entries, fanout=16)
        assert root.height == 2
        assert len(_leaves(root)) == 16
        assert all(len(leaf.children) == 16 for leaf in _leaves(root))
        _assert_sound(root, entries)

    def test_seven_leaves_for_100_entries(self, rng: np.random.Generator) -> None:
        entries = random_entries(rng, 100, 2)
        root = build_str(entries, fanout=16)
        assert len(_leaves(root)) == 7
        assert root.mbr == Rect.union(e.mbr for e in entries)
        _assert_sound(root, entries)

    @pytest.mark.parametrize("d", [1, 3, 5])
    @pytest.mark.parametrize("fanout", [2, 4, 16])
    def test_soundness(self, rng: np.random.Generator, d: int, fanout: int) -> None:
        entries = random_entries(rng, 300, d)
        root = build_str(entries, fanout=fanout)
        _assert_sound(root, entries)
        for node in root.iter_nodes():
            assert len(node.children) <= fanout
        assert len({leaf.level for leaf in _leaves(root)}) == 1

    def test_spans_follow_depth_first_order(self, rng: np.random.Generator) -> None:
        root = build_str(random_entries(rng, 200, 2), fanout=4)
        order = [e.id for e in root.iter_entries()]
        for node in root.iter_nodes():
            start, stop = node.span
            assert [e.id for e in node.iter_entries()] == order[start:stop]
            assert node.size == stop - start

    def test_deterministic(self, rng: np.random.Generator) -> None:
        entries = random_entries(rng, 150, 3)
        assert build_str(entries, 8) == build_str(list(entries), 8)

    def test_identical_centres_break_ties_by_id(self) -> None:
        box = Rect.from_pairs([[0, 1], [0, 1]])
        entries = [Entry(i, box) for i in (5, 3, 9, 1)]
        root = build_str(entries, fanout=2)
        assert [e.id for e in root.iter_entries()] == [1, 3, 5, 9]


class TestBuildStrErrors:
    def test_empty(self) -> None:
        with pytest.raises(IndexBuildError):
            build_str([], fanout=16)

    def test_fanout_too_small(self, example_entries: list[Entry]) -> None:
        with pytest.raises(IndexBuildError):
            build_str(example_entries, fanout=1)

    def test_mixed_dimensions(self, example_entries: list[Entry]) -> None:
        with pytest.raises(IndexBuildError):
            build_str([*example_entries, Entry(3, Rect.from_pairs([[0, 1]]))], fanout=16)

    def test_duplicate_ids(self, example_a: Rect, example_b: Rect) -> None:
        with pytest.raises(IndexBuildError, match="Duplicate"):
            build_str([Entry(1, example_a), Entry(1, example_b)], fanout=16)


class TestSpatialIndex:
    def test_default_fanout_from_settings(self, example_entries: list[Entry]) -> None:
        index = SpatialIndex.build(example_entries)
        assert index.fanout == 16
        assert len(index) == 2
        assert index.dimensions == 2

    def test_fanout_from_environment(
        self, monkeypatch: pytest.MonkeyPatch, rng: np.random.Generator
    ) -> None:
        monkeypatch.setenv("SPATIAL_DOM_DEFAULT_FANOUT", "4")
        index = SpatialIndex.build(random_entries(rng, 40, 2))
        assert index.fanout == 4
        assert index.root.height > 2
