"""Spatial domination of rectangles under an Lp norm.

``A`` dominates ``B`` with respect to ``R`` when every point of ``A`` is
strictly closer to every point of ``R`` than any point of ``B`` is. The
decision decomposes per dimension: for each axis only the two endpoints of
``R_i`` need to be considered, and the verdict is the sign of the sum of the
larger endpoint term per axis. That makes the complete test linear in ``d``.

The min/max-dist baseline is kept alongside for comparison: it is sound but
misses dominations whenever the farthest point of ``R`` from ``A`` and the
nearest point of ``R`` to ``B`` are different locations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from src.domination.exceptions import MarginOverflowError
from src.geometry import (
    LpNorm,
    Point,
    Rect,
    ensure_same_dimensions,
    interval_max_dist,
    interval_min_dist,
    point_dist_powered,
    rect_max_dist_powered,
    rect_min_dist_powered,
)


@dataclass(frozen=True, slots=True)
class DominationVerdict:
    """Outcome of the complete domination test.

    ``margin`` is in powered distance units (distance^p). It is a diagnostic,
    not a metric distance: negative iff domination holds, and the closer to
    zero the nearer the configuration is to a tie.
    """

    dominated: bool
    margin: float
    per_dim_terms: tuple[float, ...]
    critical_corner: Point


def domination_margin(a: Rect, b: Rect, r: Rect, norm: LpNorm) -> DominationVerdict:
    """Evaluate the complete and sufficient domination criterion.

    Raises:
        IncompatibleOperandsError: the three rectangles differ in dimensionality
        MarginOverflowError: a powered distance overflows to infinity
    """
    ensure_same_dimensions(a, b, r)

    terms: list[float] = []
    corner: list[float] = []
    for dim, (a_i, b_i, r_i) in enumerate(zip(a.dims, b.dims, r.dims, strict=True)):
        at_lo = norm.powered(interval_max_dist(a_i, r_i.lo)) - norm.powered(
            interval_min_dist(b_i, r_i.lo)
        )
        at_hi = norm.powered(interval_max_dist(a_i, r_i.hi)) - norm.powered(
            interval_min_dist(b_i, r_i.hi)
        )
        if not (math.isfinite(at_lo) and math.isfinite(at_hi)):
            raise MarginOverflowError(dim)
        if at_lo >= at_hi:
            terms.append(at_lo)
            corner.append(r_i.lo)
        else:
            terms.append(at_hi)
            corner.append(r_i.hi)

    margin = math.fsum(terms)
    if not math.isfinite(margin):
        raise MarginOverflowError
    return DominationVerdict(
        dominated=margin < 0.0,
        margin=margin,
        per_dim_terms=tuple(terms),
        critical_corner=Point(tuple(corner)),
    )


def dominates(a: Rect, b: Rect, r: Rect, norm: LpNorm) -> bool:
    """Return True iff ``a`` strictly dominates ``b`` with respect to ``r``."""
    return domination_margin(a, b, r, norm).dominated


def minmax_margin(a: Rect, b: Rect, r: Rect, norm: LpNorm) -> float:
    """Powered MaxDist(a, r) minus powered MinDist(b, r); negative iff the baseline fires."""
    ensure_same_dimensions(a, b, r)
    margin = rect_max_dist_powered(a, r, norm) - rect_min_dist_powered(b, r, norm)
    if not math.isfinite(margin):
        raise MarginOverflowError
    return margin


def minmax_dominates(a: Rect, b: Rect, r: Rect, norm: LpNorm) -> bool:
    """Min/max-dist baseline: MaxDist(a, r) < MinDist(b, r).

    Sound but incomplete. Compared in powered space, which preserves order.
    """
    return minmax_margin(a, b, r, norm) < 0.0


def dominates_point(a: Point, b: Point, r: Point, norm: LpNorm) -> bool:
    """Domination for a single triple of points: dist(a, r) < dist(b, r)."""
    return point_dist_powered(a, r, norm) < point_dist_powered(b, r, norm)
