"""Closed one-dimensional intervals and their distance to a scalar."""

from __future__ import annotations

import math
from dataclasses import dataclass

from src.geometry.exceptions import InvalidIntervalError


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed range [lo, hi] along one axis.

    A degenerate interval (lo == hi) is one coordinate of a point.
    Construction rejects lo > hi instead of swapping the bounds.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InvalidIntervalError(f"Interval bounds must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise InvalidIntervalError(f"Interval lower bound {lo} exceeds upper bound {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: float) -> Interval:
        return cls(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def center(self) -> float:
        return (self.lo + self.hi) / 2.0

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def interval_min_dist(interval: Interval, x: float) -> float:
    """Minimum distance between any point of ``interval`` and scalar ``x``.

    Zero when ``x`` lies inside the closed interval.
    """
    if x < interval.lo:
        return interval.lo - x
    if x <= interval.hi:
        return 0.0
    return x - interval.hi


def interval_max_dist(interval: Interval, x: float) -> float:
    """Maximum distance between any point of ``interval`` and scalar ``x``."""
    to_lo = abs(x - interval.lo)
    to_hi = abs(x - interval.hi)
    return to_lo if to_lo >= to_hi else to_hi
