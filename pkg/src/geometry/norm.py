"""Lp norm order shared by every distance computation."""

from __future__ import annotations

import math
from dataclasses import dataclass

from src.geometry.exceptions import InvalidNormError


@dataclass(frozen=True, slots=True)
class LpNorm:
    """Minkowski norm of order ``p`` (finite, p >= 1).

    Distances inside the domination criterion are compared in powered
    space (sum of |delta|^p) so ``powered`` is the hot path; ``root`` is
    only applied when a true distance is published.
    """

    p: float = 2.0

    def __post_init__(self) -> None:
        try:
            p = float(self.p)
        except (TypeError, ValueError) as e:
            raise InvalidNormError(f"Norm order must be a real number, got {self.p!r}") from e
        if math.isnan(p) or math.isinf(p):
            # p = inf has no powered form; reject rather than extend
            raise InvalidNormError(f"Norm order must be finite, got {self.p!r}")
        if p < 1.0:
            raise InvalidNormError(f"Norm order must be >= 1, got {p}")
        object.__setattr__(self, "p", p)

    def powered(self, delta: float) -> float:
        """Return |delta|^p, saturating to infinity when it exceeds a double."""
        magnitude = abs(delta)
        if self.p == 1.0:
            return magnitude
        if self.p == 2.0:
            return magnitude * magnitude
        try:
            return magnitude**self.p
        except OverflowError:
            return math.inf

    def root(self, total: float) -> float:
        """Return total^(1/p), the inverse of a sum of powered terms."""
        if self.p == 1.0:
            return total
        if self.p == 2.0:
            return math.sqrt(total)
        return total ** (1.0 / self.p)

    def __str__(self) -> str:
        return f"L{self.p:g}"


EUCLIDEAN = LpNorm(2.0)
MANHATTAN = LpNorm(1.0)
