"""Classify a rectangle against the bisector of two points.

Reduces to two domination tests on degenerate rectangles: ``R`` lies fully on
``a``'s side iff ``{a}`` dominates ``{b}`` with respect to ``R``. Under L2 the
bisector is a hyperplane; for other norms the same three-way split is still
well defined, only the separating surface is curved.
"""

from __future__ import annotations

from enum import Enum

from src.domination.criterion import dominates
from src.geometry import DegenerateBisectorError, LpNorm, Point, Rect, ensure_same_dimensions


class HalfspaceClass(Enum):
    """Position of a rectangle relative to the bisector of a and b."""

    FULLY_CLOSER_TO_A = "fully_closer_to_a"  # R inside a's halfspace
    INTERSECTING = "intersecting"  # bisector meets R (tangency included)
    FULLY_CLOSER_TO_B = "fully_closer_to_b"  # R inside b's halfspace


def classify_halfspace(a: Point, b: Point, r: Rect, norm: LpNorm) -> HalfspaceClass:
    """Three-way classification of ``r`` against the bisector of ``a`` and ``b``.

    Raises:
        DegenerateBisectorError: ``a == b``
        IncompatibleOperandsError: dimensionality mismatch
    """
    ensure_same_dimensions(a, b, r)
    if a.coords == b.coords:
        raise DegenerateBisectorError(f"Bisector of identical points {list(a.coords)} is undefined")

    rect_a = Rect.from_point(a)
    rect_b = Rect.from_point(b)
    if dominates(rect_a, rect_b, r, norm):
        return HalfspaceClass.FULLY_CLOSER_TO_A
    if dominates(rect_b, rect_a, r, norm):
        return HalfspaceClass.FULLY_CLOSER_TO_B
    return HalfspaceClass.INTERSECTING
