"""Geometry primitives: intervals, rectangles, points and Lp distances."""

from src.geometry.distances import (
    point_dist,
    point_dist_powered,
    rect_max_dist,
    rect_max_dist_powered,
    rect_min_dist,
    rect_min_dist_powered,
)
from src.geometry.exceptions import (
    DegenerateBisectorError,
    GeometryError,
    IncompatibleOperandsError,
    InvalidIntervalError,
    InvalidNormError,
)
from src.geometry.interval import Interval, interval_max_dist, interval_min_dist
from src.geometry.norm import EUCLIDEAN, MANHATTAN, LpNorm
from src.geometry.rect import Point, Rect, ensure_same_dimensions

__all__ = [
    # Types
    "Interval",
    "Point",
    "Rect",
    "LpNorm",
    "EUCLIDEAN",
    "MANHATTAN",
    # Distances
    "interval_min_dist",
    "interval_max_dist",
    "point_dist",
    "point_dist_powered",
    "rect_min_dist",
    "rect_min_dist_powered",
    "rect_max_dist",
    "rect_max_dist_powered",
    "ensure_same_dimensions",
    # Exceptions
    "GeometryError",
    "InvalidIntervalError",
    "InvalidNormError",
    "IncompatibleOperandsError",
    "DegenerateBisectorError",
]
