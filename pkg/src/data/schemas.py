"""Pydantic models for dataset records and workload generation."""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.data.exceptions import DatasetValidationError
from src.geometry import InvalidIntervalError, Rect
from src.index import Entry

Coordinate = Annotated[float, Field(strict=True, allow_inf_nan=False)]


class DatasetRecord(BaseModel):
    """One line of a dataset file: ``{"id": 1, "min": [...], "max": [...]}``.

    The model checks types only; ``to_entry`` enforces the rectangle
    invariants so that violations can name the offending dimension.
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    id: Annotated[int, Field(strict=True)]
    mins: Annotated[list[Coordinate], Field(alias="min", min_length=1)]
    maxs: Annotated[list[Coordinate], Field(alias="max", min_length=1)]

    def to_entry(self, line_number: int | None = None) -> Entry:
        if len(self.mins) != len(self.maxs):
            raise DatasetValidationError(
                f"min has {len(self.mins)} coordinates but max has {len(self.maxs)}",
                record_id=self.id,
                line_number=line_number,
            )
        try:
            mbr = Rect.from_bounds(self.mins, self.maxs)
        except InvalidIntervalError as e:
            raise DatasetValidationError(
                str(e), record_id=self.id, dimension=e.dimension, line_number=line_number
            ) from e
        return Entry(self.id, mbr)


class GeneratorConfig(BaseModel):
    """Parameters of a synthetic rectangle workload."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(ge=1, description="Number of rectangles")
    d: int = Field(ge=1, description="Dimensionality")
    extent_lo: float = Field(default=0.0, allow_inf_nan=False)
    extent_hi: float = Field(default=1.0, allow_inf_nan=False)
    max_side: float = Field(default=0.05, ge=0.0, allow_inf_nan=False)
    distribution: Literal["uniform", "clustered"] = "uniform"
    clusters: int = Field(default=8, ge=1, description="Cluster count (clustered only)")
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_domain(self) -> GeneratorConfig:
        if not self.extent_lo < self.extent_hi:
            raise ValueError(
                f"extent_lo ({self.extent_lo}) must be below extent_hi ({self.extent_hi})"
            )
        if self.max_side > self.extent_hi - self.extent_lo:
            raise ValueError(
                f"max_side ({self.max_side}) exceeds the domain width "
                f"({self.extent_hi - self.extent_lo})"
            )
        return self
