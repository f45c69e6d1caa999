"""Seeded synthetic rectangle workloads.

Randomness comes from numpy's Philox counter-based generator keyed by the
configured seed, so a config always yields the same dataset.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from src.data.schemas import GeneratorConfig
from src.geometry import Rect
from src.index import Entry
from src.logging_config import get_logger

logger: Any = get_logger(__name__)

# Cluster spread as a fraction of the domain width
CLUSTER_SIGMA = 0.05


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def generate(config: GeneratorConfig) -> list[Entry]:
    """Generate ``config.n`` rectangles with ids 0..n-1.

    Centres are uniform in the domain (``uniform``) or Gaussian around uniform
    cluster centres (``clustered``); side lengths are uniform in
    [0, max_side]. Rectangles are clipped to the domain.
    """
    rng = make_rng(config.seed)
    lo, hi = config.extent_lo, config.extent_hi
    shape = (config.n, config.d)

    if config.distribution == "uniform":
        centers = rng.uniform(lo, hi, size=shape)
    else:
        cluster_centers = rng.uniform(lo, hi, size=(config.clusters, config.d))
        labels = rng.integers(0, config.clusters, size=config.n)
        spread = rng.normal(0.0, CLUSTER_SIGMA * (hi - lo), size=shape)
        centers = np.clip(cluster_centers[labels] + spread, lo, hi)

    half_sides = rng.uniform(0.0, config.max_side, size=shape) / 2.0
    mins = np.clip(centers - half_sides, lo, hi)
    maxs = np.clip(centers + half_sides, lo, hi)

    entries = [
        Entry(i, Rect.from_bounds(mins[i].tolist(), maxs[i].tolist())) for i in range(config.n)
    ]
    logger.debug(
        f"Generated {config.n} {config.distribution} rectangles in d={config.d} "
        f"(seed={config.seed})"
    )
    return entries
