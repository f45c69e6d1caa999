"""JSON Lines dataset codec.

Canonical form, one record per LF-terminated line::

    {"id":1,"min":[0,2],"max":[0,2]}

Keys in order id, min, max; no whitespace; each number in the shortest
decimal that round-trips to the same double (integral values without a
fractional part). Reading a canonical file and writing it back reproduces
it byte for byte.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable
from pathlib import Path
from typing import IO, Any

from pydantic import ValidationError

from src.data.exceptions import DatasetError, DatasetParseError, DatasetValidationError
from src.data.schemas import DatasetRecord
from src.index import Entry
from src.logging_config import get_logger

logger: Any = get_logger(__name__)

# Integral doubles below this print exactly as integers
_EXACT_INT_LIMIT = 2.0**53


def format_number(value: float) -> str:
    """Shortest round-trip decimal for a finite double."""
    if value.is_integer() and abs(value) < _EXACT_INT_LIMIT:
        return str(int(value))
    return repr(value)


def format_record(entry: Entry) -> str:
    mins = ",".join(format_number(v) for v in entry.mbr.mins)
    maxs = ",".join(format_number(v) for v in entry.mbr.maxs)
    return f'{{"id":{entry.id},"min":[{mins}],"max":[{maxs}]}}'


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}" if location else first["msg"]


def read_jsonl(source: Iterable[bytes] | Iterable[str]) -> list[Entry]:
    """Parse a dataset stream into entries, in file order.

    Blank lines are skipped. All records must share one dimensionality.

    Raises:
        DatasetParseError: a line is not UTF-8, not valid JSON, or lacks/mistypes a field
        DatasetValidationError: min > max, unequal lengths, or mixed dimensionality
    """
    entries: list[Entry] = []
    dimensions: int | None = None
    for line_number, raw in enumerate(source, start=1):
        try:
            line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        except UnicodeDecodeError as e:
            raise DatasetParseError(f"not UTF-8 ({e.reason} at byte {e.start})", line_number) from e
        if not line.strip():
            continue
        try:
            record = DatasetRecord.model_validate_json(line)
        except ValidationError as e:
            raise DatasetParseError(_describe(e), line_number) from e
        entry = record.to_entry(line_number)
        if dimensions is None:
            dimensions = entry.mbr.dimensions
        elif entry.mbr.dimensions != dimensions:
            raise DatasetValidationError(
                f"has {entry.mbr.dimensions} dimensions, earlier records have {dimensions}",
                record_id=entry.id,
                line_number=line_number,
            )
        entries.append(entry)
    logger.debug(f"Read {len(entries)} records (d={dimensions})")
    return entries


def write_jsonl(entries: Iterable[Entry], sink: IO[bytes]) -> int:
    """Write entries in canonical form; returns the number of records written."""
    count = 0
    for entry in entries:
        sink.write(format_record(entry).encode("utf-8"))
        sink.write(b"\n")
        count += 1
    return count


def dumps_jsonl(entries: Iterable[Entry]) -> bytes:
    return b"".join(format_record(e).encode("utf-8") + b"\n" for e in entries)


def read_jsonl_path(path: str | Path) -> list[Entry]:
    """Read a dataset file; ``-`` reads stdin."""
    if str(path) == "-":
        return read_jsonl(sys.stdin.buffer)
    file_path = Path(path)
    if not file_path.is_file():
        raise DatasetError(f"Dataset not found: {file_path}")
    with file_path.open("rb") as f:
        return read_jsonl(f)


def write_jsonl_path(entries: Iterable[Entry], path: str | Path) -> int:
    """Write a dataset file; ``-`` writes stdout."""
    if str(path) == "-":
        count = write_jsonl(entries, sys.stdout.buffer)
        sys.stdout.buffer.flush()
        return count
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with file_path.open("wb") as f:
        return write_jsonl(entries, f)
