"""Presentation handlers."""

from quiver_cohomology.presentation.handlers.command_handler import (
    CommandHandler,
    CommandOutcome,
    failure_outcome,
)

__all__ = ["CommandHandler", "CommandOutcome", "failure_outcome"]
