"""Custom exceptions for geometry primitives."""


class GeometryError(Exception):
    """Base exception for geometry errors."""

    pass


class InvalidIntervalError(GeometryError, ValueError):
    """Raised when an interval has lo > hi or a non-finite bound."""

    def __init__(self, message: str, dimension: int | None = None) -> None:
        super().__init__(message)
        self.dimension = dimension


class InvalidNormError(GeometryError, ValueError):
    """Raised when the norm order is not a finite real >= 1."""

    pass


class IncompatibleOperandsError(GeometryError, ValueError):
    """Raised when operands of one operation differ in dimensionality."""

    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(f"Dimension mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class DegenerateBisectorError(GeometryError, ValueError):
    """Raised when a bisector is requested for two identical points."""

    pass
