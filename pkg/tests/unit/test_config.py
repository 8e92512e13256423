"""Tests for configuration module."""

import io
import logging
import os
import sys
from unittest.mock import patch

import pytest
import structlog

from quiver_cohomology.config.logging_config import (
    CurrentStderrHandler,
    configure_logging,
    get_logger,
)
from quiver_cohomology.config.settings import Settings, get_settings


class TestSettings:
    """Tests for Settings class."""

    def test_default_settings(self) -> None:
        """Test that default settings are created correctly with no env vars."""
        env_overrides = {
            "QUIVER_COHOMOLOGY_CACHE_ENABLED": "",
            "QUIVER_COHOMOLOGY_LOG_LEVEL": "",
            "QUIVER_COHOMOLOGY_MAX_CONCURRENCY": "",
        }
        with patch.dict(os.environ, env_overrides, clear=False):
            for key in env_overrides:
                os.environ.pop(key, None)
            settings = Settings(_env_file=None)
            assert settings.cache_enabled is True
            assert settings.cache_max_size == 4096
            assert settings.log_level == "WARNING"
            assert settings.max_concurrency == 4
            assert settings.default_characteristic == 0
            assert settings.default_output_format == "text"
            assert settings.presentation_max_power == 3

    def test_settings_from_env(self) -> None:
        """Test that settings can be loaded from environment variables."""
        with patch.dict(
            os.environ,
            {
                "QUIVER_COHOMOLOGY_CACHE_ENABLED": "false",
                "QUIVER_COHOMOLOGY_LOG_LEVEL": "DEBUG",
                "QUIVER_COHOMOLOGY_DEFAULT_CHARACTERISTIC": "5",
                "QUIVER_COHOMOLOGY_DEFAULT_OUTPUT_FORMAT": "json",
            },
        ):
            settings = Settings()
            assert settings.cache_enabled is False
            assert settings.log_level == "DEBUG"
            assert settings.default_characteristic == 5
            assert settings.default_output_format == "json"

    def test_characteristic_validation(self) -> None:
        """Test that the default characteristic must be 0 or a prime."""
        assert Settings(default_characteristic=7).default_characteristic == 7
        with pytest.raises(ValueError, match="Characteristic must be 0 or a prime number"):
            Settings(default_characteristic=9)

    def test_concurrency_bounds(self) -> None:
        """Test that concurrency is bounded correctly."""
        with pytest.raises(ValueError):
            Settings(max_concurrency=0)
        with pytest.raises(ValueError):
            Settings(max_concurrency=65)

    def test_power_bounds(self) -> None:
        """Test that the presentation and nilpotence powers are bounded."""
        with pytest.raises(ValueError):
            Settings(presentation_max_power=5)
        with pytest.raises(ValueError):
            Settings(nilpotence_max_power=1)

    def test_unknown_output_format(self) -> None:
        with pytest.raises(ValueError):
            Settings(default_output_format="xml")


class TestGetSettings:
    """Tests for get_settings function."""

    def test_get_settings_returns_settings(self) -> None:
        """Test that get_settings returns a Settings instance."""
        get_settings.cache_clear()
        settings = get_settings()
        assert isinstance(settings, Settings)

    def test_get_settings_is_cached(self) -> None:
        """Test that get_settings returns cached instance."""
        get_settings.cache_clear()
        settings1 = get_settings()
        settings2 = get_settings()
        assert settings1 is settings2


class TestLogging:
    """Tests for structlog configuration."""

    @pytest.mark.parametrize("log_format", ["json", "console"])
    def test_configure_logging(self, log_format: str) -> None:
        configure_logging(level="DEBUG", log_format=log_format)
        assert structlog.is_configured()

    def test_get_logger_binds_context(self) -> None:
        configure_logging(level="INFO", log_format="console")
        logger = get_logger(__name__, component="test")
        assert logger is not None

    def test_logs_follow_replaced_stderr(self, monkeypatch: pytest.MonkeyPatch) -> None:
        configure_logging(level="INFO", log_format="console")
        logger = get_logger(__name__, component="test")

        first = io.StringIO()
        monkeypatch.setattr(sys, "stderr", first)
        logger.info("first_event")
        assert "first_event" in first.getvalue()
        first.close()

        second = io.StringIO()
        monkeypatch.setattr(sys, "stderr", second)
        logger.warning("second_event")
        assert "second_event" in second.getvalue()

    def test_logger_bound_before_configuration_survives(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        configure_logging(level="DEBUG", log_format="console")
        logger = get_logger(__name__).bind(stage="early")
        configure_logging(level="DEBUG", log_format="console")

        stream = io.StringIO()
        monkeypatch.setattr(sys, "stderr", stream)
        logger.debug("late_event")

        assert "late_event" in stream.getvalue()
        assert "stage=early" in stream.getvalue()

    def test_level_filters_records(self, monkeypatch: pytest.MonkeyPatch) -> None:
        configure_logging(level="WARNING", log_format="console")
        stream = io.StringIO()
        monkeypatch.setattr(sys, "stderr", stream)

        get_logger(__name__).info("quiet_event")
        assert "quiet_event" not in stream.getvalue()

    def test_reconfiguring_keeps_one_handler(self) -> None:
        configure_logging(level="INFO")
        configure_logging(level="DEBUG")
        handlers = [h for h in logging.getLogger().handlers if isinstance(h, CurrentStderrHandler)]
        assert len(handlers) == 1
        assert handlers[0].level == logging.DEBUG
