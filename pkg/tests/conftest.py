"""Shared pytest fixtures for spatial-dom tests."""

from __future__ import annotations

from collections.abc import Callable, Generator

import numpy as np
import pytest

from src.config import Settings, get_settings
from src.geometry import LpNorm, Rect
from src.index import Entry


def build_settings(**overrides) -> Settings:
    """Create a Settings object with test defaults."""
    base = {
        "corner_cap": 20,
        "default_fanout": 16,
        "log_level": "WARNING",
        "log_to_file": False,
    }
    base.update(overrides)
    return Settings(**base)


@pytest.fixture
def settings_factory() -> Callable[..., Settings]:
    """Return a factory to build Settings with overrides."""
    return build_settings


@pytest.fixture
def settings(settings_factory: Callable[..., Settings]) -> Settings:
    """Default Settings fixture."""
    return settings_factory()


@pytest.fixture(autouse=True)
def _fresh_settings() -> Generator[None, None, None]:
    """Drop the cached settings so environment patches take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# =============================================================================
# Worked example: a=(0,2), b=(0,0), R=[2,10]x[2,4] under L2
# =============================================================================


@pytest.fixture
def example_a() -> Rect:
    return Rect.from_point((0, 2))


@pytest.fixture
def example_b() -> Rect:
    return Rect.from_point((0, 0))


@pytest.fixture
def example_r() -> Rect:
    return Rect.from_pairs([[2, 10], [2, 4]])


@pytest.fixture
def l2() -> LpNorm:
    return LpNorm(2)


@pytest.fixture
def example_entries(example_a: Rect, example_b: Rect) -> list[Entry]:
    """Two-object dataset: id 1 is a, id 2 is b."""
    return [Entry(1, example_a), Entry(2, example_b)]


# =============================================================================
# Random instances
# =============================================================================


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator; each test gets the same stream."""
    return np.random.Generator(np.random.Philox(20240229))
