"""Custom exceptions for dataset reading and writing."""


class DatasetError(Exception):
    """Base exception for dataset errors."""

    pass


class DatasetParseError(DatasetError, ValueError):
    """Raised when a line is not a well-formed record."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DatasetValidationError(DatasetError, ValueError):
    """Raised when a well-formed record violates a rectangle invariant."""

    def __init__(
        self,
        message: str,
        record_id: int,
        dimension: int | None = None,
        line_number: int | None = None,
    ) -> None:
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}record {record_id}: {message}")
        self.record_id = record_id
        self.dimension = dimension
        self.line_number = line_number
