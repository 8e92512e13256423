"""Configuration module - Settings and logging configuration."""

from quiver_cohomology.config.logging_config import configure_logging
from quiver_cohomology.config.settings import Settings, get_settings

__all__ = ["Settings", "configure_logging", "get_settings"]
