"""Library and CLI configuration using Pydantic Settings.

Values are read from environment variables prefixed with ``SPATIAL_DOM_``
(and an optional ``.env`` file). CLI flags override them per invocation.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SPATIAL_DOM_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
    )

    # ==========================================================================
    # Domination
    # ==========================================================================
    corner_cap: int = Field(
        default=20,
        ge=1,
        description="Largest dimensionality the corner oracle will enumerate (2^d corners)",
    )
    falsify_samples: int = Field(
        default=100_000,
        ge=1,
        description="Default number of sampled triples for the falsifier",
    )

    # ==========================================================================
    # Spatial Index
    # ==========================================================================
    default_fanout: int = Field(
        default=16,
        ge=2,
        description="Maximum children per node for STR bulk loading",
    )

    # ==========================================================================
    # Benchmark
    # ==========================================================================
    bench_repeats: int = Field(
        default=3,
        ge=1,
        description="Timing repeats per configuration (median is reported)",
    )

    # ==========================================================================
    # Logging
    # ==========================================================================
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING", description="Logging level"
    )
    log_dir: str = Field(default="logs", description="Directory for rotated log files")
    log_to_file: bool = Field(default=False, description="Also write logs to log_dir")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Tests that change the environment must call ``get_settings.cache_clear()``.
    """
    return Settings()
