"""Sort-Tile-Recursive bulk loading of an immutable rectangle tree.

Leaves are formed by recursively slicing the entries into slabs along each
axis (sorted by rectangle centre, ties broken by entry id), then the same
tiling is applied to node MBRs level by level until one root remains. Every
leaf sits at level 0, so the tree is height-balanced.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any, TypeVar

from src.geometry import Rect
from src.index.exceptions import IndexBuildError
from src.logging_config import get_logger
from src.observability.metrics import record_tree_build

logger: Any = get_logger(__name__)

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class Entry:
    """An object approximated by its minimum bounding rectangle."""

    id: int
    mbr: Rect


@dataclass(frozen=True, slots=True)
class RTreeNode:
    """Immutable tree node.

    ``span`` is the half-open range of positions the node's entries occupy in
    depth-first order (``root.iter_entries()``), so subtree membership of an
    entry is a range check.
    """

    mbr: Rect
    children: tuple[RTreeNode, ...] | tuple[Entry, ...]
    level: int
    span: tuple[int, int]

    @property
    def is_leaf(self) -> bool:
        return self.level == 0

    @property
    def height(self) -> int:
        """Number of levels, leaves included."""
        return self.level + 1

    @property
    def size(self) -> int:
        return self.span[1] - self.span[0]

    def iter_entries(self) -> Iterator[Entry]:
        """Entries below this node in depth-first order."""
        if self.is_leaf:
            yield from self.children  # type: ignore[misc]
            return
        for child in self.children:
            yield from child.iter_entries()  # type: ignore[union-attr]

    def iter_nodes(self) -> Iterator[RTreeNode]:
        """This node and all descendants, pre-order."""
        yield self
        if not self.is_leaf:
            for child in self.children:
                yield from child.iter_nodes()  # type: ignore[union-attr]


@dataclass
class _Draft:
    """Mutable node used while levels are assembled."""

    mbr: Rect
    children: list[Any]
    level: int
    first_id: int  # smallest entry id below, used as STR tie-breaker


def _ceil_root(value: int, k: int) -> int:
    """Smallest integer s with s**k >= value."""
    s = max(1, int(round(value ** (1.0 / k))))
    while s**k < value:
        s += 1
    while s > 1 and (s - 1) ** k >= value:
        s -= 1
    return s


def _str_tile(
    items: list[T],
    dimensions: int,
    fanout: int,
    center: Callable[[T], tuple[float, ...]],
    tie: Callable[[T], int],
    dim: int = 0,
) -> list[list[T]]:
    """Partition ``items`` into groups of at most ``fanout`` by recursive slab slicing."""
    if len(items) <= fanout:
        return [items]
    ordered = sorted(items, key=lambda it: (center(it)[dim], tie(it)))
    if dim == dimensions - 1:
        return [ordered[i : i + fanout] for i in range(0, len(ordered), fanout)]

    groups_needed = math.ceil(len(ordered) / fanout)
    slabs = _ceil_root(groups_needed, dimensions - dim)
    slab_size = fanout * math.ceil(groups_needed / slabs)
    groups: list[list[T]] = []
    for i in range(0, len(ordered), slab_size):
        groups.extend(
            _str_tile(ordered[i : i + slab_size], dimensions, fanout, center, tie, dim + 1)
        )
    return groups


def _finalize(draft: _Draft, start: int) -> RTreeNode:
    if draft.level == 0:
        entries = tuple(draft.children)
        return RTreeNode(draft.mbr, entries, 0, (start, start + len(entries)))
    children: list[RTreeNode] = []
    cursor = start
    for child in draft.children:
        node = _finalize(child, cursor)
        children.append(node)
        cursor = node.span[1]
    return RTreeNode(draft.mbr, tuple(children), draft.level, (start, cursor))


def build_str(entries: Sequence[Entry], fanout: int) -> RTreeNode:
    """Bulk-load ``entries`` into a height-balanced tree.

    Deterministic for a fixed input: sorting ties are broken by entry id.

    Raises:
        IndexBuildError: empty input, fanout < 2, mixed dimensionality or duplicate ids
    """
    if not entries:
        raise IndexBuildError("Cannot build an index from an empty dataset")
    if fanout < 2:
        raise IndexBuildError(f"Fanout must be >= 2, got {fanout}")

    dimensions = entries[0].mbr.dimensions
    seen: set[int] = set()
    for entry in entries:
        if entry.mbr.dimensions != dimensions:
            raise IndexBuildError(
                f"Entry {entry.id} has {entry.mbr.dimensions} dimensions, expected {dimensions}"
            )
        if entry.id in seen:
            raise IndexBuildError(f"Duplicate entry id {entry.id}")
        seen.add(entry.id)

    groups = _str_tile(
        list(entries),
        dimensions,
        fanout,
        center=lambda e: e.mbr.center,
        tie=lambda e: e.id,
    )
    level = [
        _Draft(Rect.union(e.mbr for e in g), list(g), 0, min(e.id for e in g)) for g in groups
    ]
    while len(level) > 1:
        parents = _str_tile(
            level,
            dimensions,
            fanout,
            center=lambda n: n.mbr.center,
            tie=lambda n: n.first_id,
        )
        next_level = level[0].level + 1
        level = [
            _Draft(
                Rect.union(n.mbr for n in g), list(g), next_level, min(n.first_id for n in g)
            )
            for g in parents
        ]

    root = _finalize(level[0], 0)
    record_tree_build()
    logger.debug(
        f"STR build: {len(entries)} entries, d={dimensions}, fanout={fanout}, "
        f"height={root.height}, leaves={sum(1 for n in root.iter_nodes() if n.is_leaf)}"
    )
    return root
