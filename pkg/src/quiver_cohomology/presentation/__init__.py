"""Presentation layer - command-line interface."""

from quiver_cohomology.presentation.cli import build_parser, main, parse_config, run

__all__ = ["build_parser", "main", "parse_config", "run"]
