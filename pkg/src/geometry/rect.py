"""Points and axis-parallel rectangles in d dimensions."""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from src.geometry.exceptions import (
    GeometryError,
    IncompatibleOperandsError,
    InvalidIntervalError,
)
from src.geometry.interval import Interval


@dataclass(frozen=True, slots=True)
class Point:
    """A location in R^d with finite coordinates."""

    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        coords = tuple(float(c) for c in self.coords)
        if not coords:
            raise GeometryError("A point needs at least one coordinate")
        for i, c in enumerate(coords):
            if not math.isfinite(c):
                raise InvalidIntervalError(
                    f"Coordinate {i} must be finite, got {c}", dimension=i
                )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: float) -> Point:
        return cls(tuple(coords))

    @classmethod
    def parse(cls, literal: str) -> Point:
        """Parse a JSON array literal such as ``[0, 2]``."""
        try:
            raw = json.loads(literal)
        except json.JSONDecodeError as e:
            raise GeometryError(f"Malformed point literal {literal!r}: {e.msg}") from e
        if not isinstance(raw, list) or not all(
            isinstance(c, int | float) and not isinstance(c, bool) for c in raw
        ):
            raise GeometryError(f"Point literal must be a JSON array of numbers: {literal!r}")
        return cls(tuple(raw))

    @property
    def dimensions(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[float]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> float:
        return self.coords[index]


@dataclass(frozen=True, slots=True)
class Rect:
    """Axis-parallel rectangle stored as one closed ``Interval`` per dimension.

    A rectangle whose intervals are all degenerate is a point; ``Rect.from_point``
    and ``to_point`` convert between the two representations.
    """

    dims: tuple[Interval, ...]

    def __post_init__(self) -> None:
        dims = tuple(self.dims)
        if not dims:
            raise GeometryError("A rectangle needs at least one dimension")
        for d in dims:
            if not isinstance(d, Interval):
                raise GeometryError(f"Rectangle dimensions must be Interval, got {type(d)!r}")
        object.__setattr__(self, "dims", dims)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def from_bounds(cls, mins: Sequence[float], maxs: Sequence[float]) -> Rect:
        """Build from per-dimension lower and upper bounds.

        Raises:
            IncompatibleOperandsError: bounds differ in length
            InvalidIntervalError: some ``mins[i] > maxs[i]`` (``dimension`` is set)
        """
        if len(mins) != len(maxs):
            raise IncompatibleOperandsError(len(mins), len(maxs))
        dims = []
        for i, (lo, hi) in enumerate(zip(mins, maxs, strict=True)):
            try:
                dims.append(Interval(lo, hi))
            except InvalidIntervalError as e:
                raise InvalidIntervalError(f"Dimension {i}: {e}", dimension=i) from e
        return cls(tuple(dims))

    @classmethod
    def from_point(cls, point: Point | Sequence[float]) -> Rect:
        coords = point.coords if isinstance(point, Point) else tuple(point)
        return cls.from_bounds(coords, coords)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> Rect:
        """Build from ``[[lo, hi], ...]`` pairs, one per dimension."""
        mins: list[float] = []
        maxs: list[float] = []
        for i, pair in enumerate(pairs):
            if len(pair) != 2:
                raise GeometryError(f"Dimension {i}: expected [lo, hi], got {list(pair)!r}")
            mins.append(pair[0])
            maxs.append(pair[1])
        return cls.from_bounds(mins, maxs)

    @classmethod
    def parse(cls, literal: str) -> Rect:
        """Parse the CLI literal syntax ``[[lo, hi], [lo, hi], ...]``."""
        try:
            raw = json.loads(literal)
        except json.JSONDecodeError as e:
            raise GeometryError(f"Malformed rectangle literal {literal!r}: {e.msg}") from e
        if not isinstance(raw, list) or not all(
            isinstance(pair, list)
            and all(isinstance(v, int | float) and not isinstance(v, bool) for v in pair)
            for pair in raw
        ):
            raise GeometryError(
                f"Rectangle literal must be a JSON array of [lo, hi] pairs: {literal!r}"
            )
        return cls.from_pairs(raw)

    @classmethod
    def union(cls, rects: Iterable[Rect]) -> Rect:
        """Minimum bounding rectangle of ``rects``."""
        it = iter(rects)
        try:
            first = next(it)
        except StopIteration:
            raise GeometryError("Cannot bound an empty collection of rectangles") from None
        mins = list(first.mins)
        maxs = list(first.maxs)
        for rect in it:
            ensure_same_dimensions(first, rect)
            for i, interval in enumerate(rect.dims):
                if interval.lo < mins[i]:
                    mins[i] = interval.lo
                if interval.hi > maxs[i]:
                    maxs[i] = interval.hi
        return cls.from_bounds(mins, maxs)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    @property
    def dimensions(self) -> int:
        return len(self.dims)

    @property
    def mins(self) -> tuple[float, ...]:
        return tuple(d.lo for d in self.dims)

    @property
    def maxs(self) -> tuple[float, ...]:
        return tuple(d.hi for d in self.dims)

    @property
    def center(self) -> tuple[float, ...]:
        return tuple(d.center for d in self.dims)

    @property
    def is_point(self) -> bool:
        return all(d.is_degenerate for d in self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.dims)

    def __getitem__(self, index: int) -> Interval:
        return self.dims[index]

    def to_point(self) -> Point:
        if not self.is_point:
            raise GeometryError("Only a degenerate rectangle converts to a point")
        return Point(self.mins)

    # ------------------------------------------------------------------
    # Relations
    # ------------------------------------------------------------------
    def contains(self, other: Rect) -> bool:
        """Closed, componentwise containment of ``other`` in this rectangle."""
        ensure_same_dimensions(self, other)
        return all(
            mine.contains_interval(theirs)
            for mine, theirs in zip(self.dims, other.dims, strict=True)
        )

    def contains_point(self, point: Point) -> bool:
        ensure_same_dimensions(self, point)
        return all(d.contains(x) for d, x in zip(self.dims, point.coords, strict=True))

    def corners(self) -> Iterator[Point]:
        """Yield all 2^d corners; degenerate dimensions still contribute two."""
        for choice in product((False, True), repeat=self.dimensions):
            yield Point(
                tuple(d.hi if high else d.lo for d, high in zip(self.dims, choice, strict=True))
            )

    # ------------------------------------------------------------------
    # Rigid motions
    # ------------------------------------------------------------------
    def translate(self, offset: Sequence[float]) -> Rect:
        if len(offset) != self.dimensions:
            raise IncompatibleOperandsError(self.dimensions, len(offset))
        return Rect.from_bounds(
            [d.lo + o for d, o in zip(self.dims, offset, strict=True)],
            [d.hi + o for d, o in zip(self.dims, offset, strict=True)],
        )

    def scale(self, factor: float) -> Rect:
        if not factor > 0:
            raise GeometryError(f"Scale factor must be positive, got {factor}")
        return Rect.from_bounds(
            [d.lo * factor for d in self.dims], [d.hi * factor for d in self.dims]
        )

    def reflect(self, axis: int) -> Rect:
        """Mirror across the hyperplane x_axis = 0."""
        dims = list(self.dims)
        flipped = dims[axis]
        dims[axis] = Interval(-flipped.hi, -flipped.lo)
        return Rect(tuple(dims))

    def permute(self, order: Sequence[int]) -> Rect:
        if sorted(order) != list(range(self.dimensions)):
            raise GeometryError(f"{list(order)!r} is not a permutation of the dimensions")
        return Rect(tuple(self.dims[i] for i in order))


def ensure_same_dimensions(*operands: Rect | Point) -> int:
    """Return the shared dimensionality or raise ``IncompatibleOperandsError``."""
    expected = len(operands[0])
    for operand in operands[1:]:
        if len(operand) != expected:
            raise IncompatibleOperandsError(expected, len(operand))
    return expected
