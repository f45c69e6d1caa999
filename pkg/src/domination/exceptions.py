"""Custom exceptions for domination decisions and oracles."""


class DominationError(Exception):
    """Base exception for domination errors."""

    pass


class CornerLimitError(DominationError):
    """Raised when corner enumeration would exceed the configured dimension cap."""

    def __init__(self, dimensions: int, limit: int) -> None:
        super().__init__(
            f"Corner oracle refuses d={dimensions} (2^{dimensions} corners); "
            f"limit is d={limit}. Raise SPATIAL_DOM_CORNER_CAP to allow it."
        )
        self.dimensions = dimensions
        self.limit = limit


class InvalidSampleCountError(DominationError, ValueError):
    """Raised when the falsifier is asked for fewer than one sample."""

    pass


class MarginOverflowError(DominationError, ArithmeticError):
    """Raised when powered distances overflow a double and the margin has no sign."""

    def __init__(self, dimension: int | None = None) -> None:
        where = f" in dimension {dimension}" if dimension is not None else ""
        super().__init__(
            f"Powered distance overflowed{where}; coordinates are too large for this norm"
        )
        self.dimension = dimension
