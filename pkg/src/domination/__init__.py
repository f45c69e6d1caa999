"""Spatial domination: complete criterion, min/max baseline, oracles, halfspace split."""

from src.domination.criterion import (
    DominationVerdict,
    domination_margin,
    dominates,
    dominates_point,
    minmax_dominates,
    minmax_margin,
)
from src.domination.exceptions import (
    CornerLimitError,
    DominationError,
    InvalidSampleCountError,
    MarginOverflowError,
)
from src.domination.halfspace import HalfspaceClass, classify_halfspace
from src.domination.oracles import (
    Counterexample,
    corner_oracle_dominates,
    corner_oracle_margin,
    sample_falsify,
)

__all__ = [
    # Criterion
    "DominationVerdict",
    "domination_margin",
    "dominates",
    "dominates_point",
    "minmax_dominates",
    "minmax_margin",
    # Oracles
    "Counterexample",
    "corner_oracle_dominates",
    "corner_oracle_margin",
    "sample_falsify",
    # Halfspace
    "HalfspaceClass",
    "classify_halfspace",
    # Exceptions
    "DominationError",
    "CornerLimitError",
    "InvalidSampleCountError",
    "MarginOverflowError",
]
