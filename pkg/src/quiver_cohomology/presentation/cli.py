"""Command-line entry point for quiver-cohomology.

Entry point defined in pyproject.toml: quiver-cohomology = "quiver_cohomology.presentation.cli:main"

Results go to stdout (or --out); logs and one-line error messages go to stderr.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError as PydanticValidationError

from quiver_cohomology import __version__
from quiver_cohomology.config import Settings, configure_logging, get_settings
from quiver_cohomology.config.logging_config import get_logger
from quiver_cohomology.domain.errors.domain_errors import ConfigurationError
from quiver_cohomology.infrastructure.computation_factory import ComputationFactory
from quiver_cohomology.presentation.handlers.command_handler import (
    CommandHandler,
    CommandOutcome,
    failure_outcome,
)
from quiver_cohomology.presentation.schemas.requests import Command, RunConfig
from quiver_cohomology.presentation.utils.error_formatter import (
    EXIT_UNEXPECTED,
    EXIT_USAGE,
    format_error_line,
)

_COMMAND_HELP = {
    Command.DIMS: "per-degree Hochschild cohomology dimensions with closed-form cross-check",
    Command.VERIFY_RESOLUTION: "check the resolution is a minimal exact complex",
    Command.VERIFY_BASES: "check the listed image, kernel and cohomology families (s >= 3)",
    Command.YONEDA: "table of Yoneda products of the ring generators (s >= 3)",
    Command.RING_CHECK: "verify the presentation modulo nilpotence (s >= 3)",
}


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """Top-level parser with one subcommand per Command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, required=True, help="number of vertices (s >= 1)")
    common.add_argument(
        "--char",
        dest="characteristic",
        type=int,
        default=settings.default_characteristic,
        help="field characteristic, 0 or a prime (default: %(default)s)",
    )
    common.add_argument(
        "--max-degree",
        dest="max_degree",
        type=int,
        default=None,
        help="highest degree N (default 3s+2)",
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=("text", "json", "csv"),
        default=settings.default_output_format,
        help="output format (default: %(default)s)",
    )
    common.add_argument("--out", type=Path, default=None, help="write output to this file")
    common.add_argument(
        "--log-level",
        dest="log_level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        type=str.upper,
        default=None,
        help=f"log level on stderr (default: {settings.log_level})",
    )

    parser = argparse.ArgumentParser(
        prog="quiver-cohomology",
        description="Exact Hochschild cohomology of the two-arrow cyclic quiver algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in Command:
        sub = commands.add_parser(command.value, parents=[common], help=_COMMAND_HELP[command])
        if command is Command.YONEDA:
            sub.add_argument(
                "--skip-theta",
                dest="with_theta",
                action="store_false",
                help="do not cross-check products against the explicit liftings",
            )
        if command is Command.RING_CHECK:
            sub.add_argument(
                "--max-power",
                dest="max_power",
                type=int,
                default=None,
                help=f"highest power checked (default: {settings.presentation_max_power})",
            )
    return parser


def parse_config(argv: Sequence[str] | None, settings: Settings) -> RunConfig:
    """Parse arguments into a RunConfig.

    Raises:
        SystemExit: argparse usage errors (exit code 2)
        pydantic.ValidationError: values argparse accepts but RunConfig rejects
    """
    namespace = build_parser(settings).parse_args(argv)
    return RunConfig.model_validate(
        {key: value for key, value in vars(namespace).items() if value is not None}
    )


async def run(
    config: RunConfig,
    settings: Settings,
    factory: ComputationFactory | None = None,
) -> CommandOutcome:
    handler = CommandHandler(factory or ComputationFactory(settings), settings)
    return await handler.handle(config)


def _emit(outcome: CommandOutcome, out: Path | None) -> None:
    if outcome.output:
        if out is not None:
            out.write_text(outcome.output, encoding="utf-8")
        else:
            sys.stdout.write(outcome.output)
            sys.stdout.flush()
    if outcome.error_line:
        print(outcome.error_line, file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point; returns the process exit code."""
    try:
        settings = get_settings()
    except PydanticValidationError as e:
        fields = sorted({str(err["loc"][0]) for err in e.errors() if err["loc"]})
        error = ConfigurationError(
            "Invalid QUIVER_COHOMOLOGY_ environment settings",
            setting=",".join(fields) or None,
        )
        print(format_error_line(error), file=sys.stderr)
        return EXIT_USAGE
    configure_logging(level=settings.log_level, log_format=settings.log_format)

    try:
        config = parse_config(argv, settings)
    except PydanticValidationError as e:
        wants_json = "json" in (argv if argv is not None else sys.argv[1:])
        outcome = failure_outcome(e, "json" if wants_json else "text")
        _emit(outcome, None)
        return outcome.exit_code

    if config.log_level:
        configure_logging(level=config.log_level, log_format=settings.log_format)

    log = get_logger(__name__, component="cli", command=config.command.value)
    log.debug("config_parsed", s=config.s, max_degree=config.max_degree)

    try:
        outcome = asyncio.run(run(config, settings))
    except KeyboardInterrupt:
        log.warning("interrupted")
        return EXIT_UNEXPECTED

    try:
        _emit(outcome, config.out)
    except OSError as e:
        log.error("output_write_failed", path=str(config.out), error=str(e))
        print(f"error [OUTPUT_ERROR]: cannot write {config.out}: {e}", file=sys.stderr)
        return EXIT_UNEXPECTED
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
