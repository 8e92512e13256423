"""Presentation utilities."""

from quiver_cohomology.presentation.utils.error_formatter import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_UNEXPECTED,
    EXIT_USAGE,
    exit_code_for,
    format_error_line,
    format_error_response,
    format_success_response,
    root_cause,
)

__all__ = [
    "EXIT_CHECK_FAILED",
    "EXIT_OK",
    "EXIT_UNEXPECTED",
    "EXIT_USAGE",
    "exit_code_for",
    "format_error_line",
    "format_error_response",
    "format_success_response",
    "root_cause",
]
