"""Dataset serialization and synthetic workload generation."""

from src.data.exceptions import DatasetError, DatasetParseError, DatasetValidationError
from src.data.generator import generate, make_rng
from src.data.jsonl import (
    dumps_jsonl,
    format_number,
    read_jsonl,
    read_jsonl_path,
    write_jsonl,
    write_jsonl_path,
)
from src.data.schemas import DatasetRecord, GeneratorConfig

__all__ = [
    # Schemas
    "DatasetRecord",
    "GeneratorConfig",
    # Codec
    "read_jsonl",
    "read_jsonl_path",
    "write_jsonl",
    "write_jsonl_path",
    "dumps_jsonl",
    "format_number",
    # Generation
    "generate",
    "make_rng",
    # Exceptions
    "DatasetError",
    "DatasetParseError",
    "DatasetValidationError",
]
