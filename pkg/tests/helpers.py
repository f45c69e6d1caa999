"""Seeded random instance builders for oracle sweeps."""

from __future__ import annotations

import numpy as np

from src.geometry import Rect
from src.index import Entry


def random_rect(
    rng: np.random.Generator,
    d: int,
    *,
    spread: float = 10.0,
    max_side: float = 3.0,
    degenerate: float = 0.15,
) -> Rect:
    """Random rectangle; each dimension collapses to a point with prob. ``degenerate``."""
    centers = rng.uniform(-spread, spread, size=d)
    sides = rng.uniform(0.0, max_side, size=d)
    sides[rng.random(d) < degenerate] = 0.0
    return Rect.from_bounds((centers - sides / 2).tolist(), (centers + sides / 2).tolist())


def random_entries(
    rng: np.random.Generator, n: int, d: int, *, max_side: float = 0.1
) -> list[Entry]:
    """Random dataset in [0, 1]^d with ids 0..n-1."""
    lows = rng.uniform(0.0, 1.0 - max_side, size=(n, d))
    sides = rng.uniform(0.0, max_side, size=(n, d))
    return [
        Entry(i, Rect.from_bounds(lows[i].tolist(), (lows[i] + sides[i]).tolist()))
        for i in range(n)
    ]
