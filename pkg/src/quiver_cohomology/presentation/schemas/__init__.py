"""Presentation schemas."""

from quiver_cohomology.presentation.schemas.requests import Command, OutputFormat, RunConfig

__all__ = ["Command", "OutputFormat", "RunConfig"]
