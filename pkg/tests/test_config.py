"""Tests for environment-driven settings."""

import pytest
from pydantic import ValidationError

from src.config import Settings, get_settings


class TestSettings:
    def test_defaults(self, settings: Settings) -> None:
        assert settings.corner_cap == 20
        assert settings.default_fanout == 16
        assert settings.log_level == "WARNING"

    def test_environment_overrides(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SPATIAL_DOM_CORNER_CAP", "12")
        monkeypatch.setenv("SPATIAL_DOM_BENCH_REPEATS", "5")
        settings = get_settings()
        assert settings.corner_cap == 12
        assert settings.bench_repeats == 5

    def test_cached(self) -> None:
        assert get_settings() is get_settings()

    @pytest.mark.parametrize(
        "overrides",
        [{"corner_cap": 0}, {"default_fanout": 1}, {"falsify_samples": 0}, {"log_level": "TRACE"}],
    )
    def test_rejects_invalid(self, settings_factory, overrides: dict) -> None:
        with pytest.raises(ValidationError):
            settings_factory(**overrides)
