"""Lp distances between points and rectangles.

The ``*_powered`` variants return the sum of |delta|^p without taking the
p-th root; comparisons in powered space are order-equivalent to comparisons
of true distances.
"""

from __future__ import annotations

from src.geometry.norm import LpNorm
from src.geometry.rect import Point, Rect, ensure_same_dimensions


def point_dist_powered(a: Point, b: Point, norm: LpNorm) -> float:
    ensure_same_dimensions(a, b)
    return sum(norm.powered(x - y) for x, y in zip(a.coords, b.coords, strict=True))


def point_dist(a: Point, b: Point, norm: LpNorm) -> float:
    """Lp distance between two points of equal dimensionality."""
    return norm.root(point_dist_powered(a, b, norm))


def rect_min_dist_powered(a: Rect, b: Rect, norm: LpNorm) -> float:
    ensure_same_dimensions(a, b)
    total = 0.0
    for x, y in zip(a.dims, b.dims, strict=True):
        gap = max(0.0, y.lo - x.hi, x.lo - y.hi)
        if gap > 0.0:
            total += norm.powered(gap)
    return total


def rect_min_dist(a: Rect, b: Rect, norm: LpNorm) -> float:
    """Smallest distance between any point of ``a`` and any point of ``b``.

    Zero iff the closed rectangles intersect.
    """
    return norm.root(rect_min_dist_powered(a, b, norm))


def rect_max_dist_powered(a: Rect, b: Rect, norm: LpNorm) -> float:
    ensure_same_dimensions(a, b)
    total = 0.0
    for x, y in zip(a.dims, b.dims, strict=True):
        total += norm.powered(max(abs(x.lo - y.hi), abs(x.hi - y.lo)))
    return total


def rect_max_dist(a: Rect, b: Rect, norm: LpNorm) -> float:
    """Largest distance between any point of ``a`` and any point of ``b``."""
    return norm.root(rect_max_dist_powered(a, b, norm))
