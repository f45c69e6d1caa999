"""Custom exceptions for the spatial index."""


class SpatialIndexError(Exception):
    """Base exception for spatial index errors."""

    pass


class IndexBuildError(SpatialIndexError, ValueError):
    """Raised when bulk loading gets empty, mixed-dimension or duplicate-id input."""

    pass


class InvalidQueryError(SpatialIndexError, ValueError):
    """Raised when a query parameter is out of range (e.g. k < 1)."""

    pass
