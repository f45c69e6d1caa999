"""Independent checks for the domination criterion.

- ``corner_oracle_dominates`` enumerates all 2^d corners of ``R`` and is used
  as an equivalence oracle; its cost grows exponentially with ``d``.
- ``sample_falsify`` draws random point triples and looks for one that
  violates the universal statement. It can only ever refute domination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from src.config import get_settings
from src.domination.exceptions import CornerLimitError, InvalidSampleCountError
from src.geometry import LpNorm, Point, Rect, ensure_same_dimensions
from src.logging_config import get_logger

logger: Any = get_logger(__name__)

# Corners evaluated per vectorized block (bounds peak memory at d <= 64)
CORNER_CHUNK = 1 << 15

# Falsifier batch size; fixed so that results only depend on the seed
SAMPLE_BATCH = 4096


@dataclass(frozen=True, slots=True)
class Counterexample:
    """A triple with dist(a, r) >= dist(b, r), refuting domination."""

    a: Point
    b: Point
    r: Point
    dist_a: float
    dist_b: float


def _powered(values: np.ndarray, p: float) -> np.ndarray:
    magnitude = np.abs(values)
    if p == 1.0:
        return magnitude
    if p == 2.0:
        return magnitude * magnitude
    return np.power(magnitude, p)


def _bounds(rect: Rect) -> tuple[np.ndarray, np.ndarray]:
    return np.asarray(rect.mins, dtype=np.float64), np.asarray(rect.maxs, dtype=np.float64)


def corner_oracle_margin(
    a: Rect,
    b: Rect,
    r: Rect,
    norm: LpNorm,
    *,
    corner_cap: int | None = None,
) -> float:
    """Largest powered sum over all corners of ``r``.

    For each corner ``c`` the sum is sum_i MaxDist(A_i, c_i)^p - MinDist(B_i, c_i)^p.

    Raises:
        CornerLimitError: d exceeds ``corner_cap`` (default: ``Settings.corner_cap``)
        IncompatibleOperandsError: dimensionality mismatch
    """
    d = ensure_same_dimensions(a, b, r)
    limit = corner_cap if corner_cap is not None else get_settings().corner_cap
    if d > limit:
        logger.warning(f"Corner oracle refused d={d} (cap {limit})")
        raise CornerLimitError(d, limit)

    a_lo, a_hi = _bounds(a)
    b_lo, b_hi = _bounds(b)
    r_lo, r_hi = _bounds(r)
    shifts = np.arange(d, dtype=np.uint64)
    total = 1 << d

    best = -np.inf
    for start in range(0, total, CORNER_CHUNK):
        index = np.arange(start, min(start + CORNER_CHUNK, total), dtype=np.uint64)
        high = ((index[:, None] >> shifts) & np.uint64(1)).astype(bool)
        corners = np.where(high, r_hi, r_lo)
        far = np.maximum(np.abs(corners - a_lo), np.abs(corners - a_hi))
        near = np.maximum(0.0, np.maximum(b_lo - corners, corners - b_hi))
        sums = (_powered(far, norm.p) - _powered(near, norm.p)).sum(axis=1)
        best = max(best, float(sums.max()))
    return best


def corner_oracle_dominates(
    a: Rect,
    b: Rect,
    r: Rect,
    norm: LpNorm,
    *,
    corner_cap: int | None = None,
) -> bool:
    """Exponential-time domination check over every corner of ``r``."""
    return corner_oracle_margin(a, b, r, norm, corner_cap=corner_cap) < 0.0


def sample_falsify(
    a: Rect,
    b: Rect,
    r: Rect,
    norm: LpNorm,
    n_samples: int,
    seed: int,
) -> Counterexample | None:
    """Search uniformly sampled triples for a violation of domination.

    Returns the first triple (in draw order) with dist(a, r) >= dist(b, r), or
    None. The generator is a Philox stream keyed by ``seed``, so the outcome is
    reproducible.
    """
    if n_samples < 1:
        raise InvalidSampleCountError(f"n_samples must be >= 1, got {n_samples}")
    d = ensure_same_dimensions(a, b, r)

    rng = np.random.Generator(np.random.Philox(seed))
    a_lo, a_hi = _bounds(a)
    b_lo, b_hi = _bounds(b)
    r_lo, r_hi = _bounds(r)

    remaining = n_samples
    while remaining > 0:
        size = min(SAMPLE_BATCH, remaining)
        remaining -= size
        pa = rng.uniform(a_lo, a_hi, size=(size, d))
        pb = rng.uniform(b_lo, b_hi, size=(size, d))
        pr = rng.uniform(r_lo, r_hi, size=(size, d))
        dist_a = _powered(pa - pr, norm.p).sum(axis=1)
        dist_b = _powered(pb - pr, norm.p).sum(axis=1)
        violations = np.flatnonzero(dist_a >= dist_b)
        if violations.size:
            i = int(violations[0])
            logger.debug(f"Falsifier found a counterexample within {n_samples - remaining} draws")
            return Counterexample(
                a=Point(tuple(pa[i].tolist())),
                b=Point(tuple(pb[i].tolist())),
                r=Point(tuple(pr[i].tolist())),
                dist_a=norm.root(float(dist_a[i])),
                dist_b=norm.root(float(dist_b[i])),
            )
    return None
