"""Logging configuration using structlog for structured logging.

All log output goes to stderr; stdout is reserved for command results. structlog renders each
event to a string and hands it to the standard library logger, whose handler looks up
``sys.stderr`` per record. Loggers bound before a reconfiguration, or before stderr is swapped,
keep writing to the live stream.
"""

import logging
import sys
from typing import TYPE_CHECKING, Any, TextIO

import structlog

if TYPE_CHECKING:
    from structlog.types import Processor

LOGGER_NAMESPACE = "quiver_cohomology"


class CurrentStderrHandler(logging.StreamHandler):  # type: ignore[type-arg]
    """Stream handler bound to whatever ``sys.stderr`` is when a record is emitted."""

    def __init__(self, level: int = logging.NOTSET) -> None:
        logging.Handler.__init__(self, level)

    @property
    def stream(self) -> TextIO:  # type: ignore[override]
        return sys.stderr


def _install_handler(level: int) -> None:
    root = logging.getLogger()
    for handler in [h for h in root.handlers if isinstance(h, CurrentStderrHandler)]:
        root.removeHandler(handler)
    handler = CurrentStderrHandler(level)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


def configure_logging(
    level: str = "WARNING",
    log_format: str = "console",
) -> None:
    """Configure structured logging for the application.

    Safe to call repeatedly; each call replaces the previous handler and processor chain.

    Args:
        level: The logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        log_format: The output format ('json' for machine consumption, 'console' for humans).
    """
    numeric_level = getattr(logging, level.upper(), logging.WARNING)
    _install_handler(numeric_level)

    shared_processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.StackInfoRenderer(),
        structlog.dev.set_exc_info,
        structlog.processors.TimeStamper(fmt="iso"),
    ]

    if log_format == "json":
        processors: list[Processor] = [
            *shared_processors,
            structlog.processors.dict_tracebacks,
            structlog.processors.JSONRenderer(),
        ]
    else:
        processors = [
            *shared_processors,
            structlog.dev.ConsoleRenderer(
                colors=False,
                exception_formatter=structlog.dev.plain_traceback,
            ),
        ]

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str | None = None, **initial_context: Any) -> structlog.BoundLogger:
    """Get a structured logger instance with optional bound context."""
    logger: structlog.BoundLogger = structlog.get_logger(name or LOGGER_NAMESPACE)
    if initial_context:
        logger = logger.bind(**initial_context)
    return logger
