"""Command handler: runs a use case for a RunConfig and renders the outcome."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import structlog

from quiver_cohomology.application.use_cases.check_ring import CheckRingUseCase
from quiver_cohomology.application.use_cases.compute_dimensions import ComputeDimensionsUseCase
from quiver_cohomology.application.use_cases.compute_products import ComputeProductsUseCase
from quiver_cohomology.application.use_cases.verify_resolution import (
    VerifyResolutionUseCase,
    VerifyStatedBasesUseCase,
)
from quiver_cohomology.domain.common.result import Err, Ok
from quiver_cohomology.presentation.renderers import (
    render_dimension_table,
    render_product_table,
    render_ring_check,
    render_verification,
)
from quiver_cohomology.presentation.schemas.requests import Command, OutputFormat, RunConfig
from quiver_cohomology.presentation.utils.error_formatter import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    exit_code_for,
    format_error_line,
    format_error_response,
)

if TYPE_CHECKING:
    from quiver_cohomology.config.settings import Settings
    from quiver_cohomology.infrastructure.computation_factory import ComputationFactory

logger = structlog.get_logger()


@dataclass(frozen=True)
class CommandOutcome:
    """Rendered stdout text, an optional stderr line and the process exit code."""

    output: str
    exit_code: int
    error_line: str = ""


def _status_code(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def failure_outcome(error: BaseException, output_format: OutputFormat) -> CommandOutcome:
    """JSON error document on stdout for --format json, a one-line message otherwise."""
    code = exit_code_for(error)
    if output_format == "json":
        return CommandOutcome(output=format_error_response(error), exit_code=code)
    return CommandOutcome(output="", exit_code=code, error_line=format_error_line(error))


class CommandHandler:
    """Dispatches CLI commands to the application use cases."""

    def __init__(self, factory: ComputationFactory, settings: Settings) -> None:
        self._dimensions = ComputeDimensionsUseCase(factory, settings)
        self._resolution = VerifyResolutionUseCase(factory, settings)
        self._bases = VerifyStatedBasesUseCase(factory, settings)
        self._products = ComputeProductsUseCase(factory, settings)
        self._ring = CheckRingUseCase(factory, settings)
        self._logger = logger.bind(handler="command")

    async def handle(self, config: RunConfig) -> CommandOutcome:
        """Run ``config.command`` and render its result in ``config.output_format``."""
        self._logger.info(
            "command_started",
            command=config.command.value,
            s=config.s,
            characteristic=config.characteristic,
        )
        fmt = config.output_format
        try:
            outcome = await self._dispatch(config)
        except Exception as e:
            self._logger.exception("command_error", error=str(e))
            return failure_outcome(e, fmt)
        self._logger.info(
            "command_completed", command=config.command.value, exit_code=outcome.exit_code
        )
        return outcome

    async def _dispatch(self, config: RunConfig) -> CommandOutcome:
        fmt = config.output_format
        s, characteristic, n = config.s, config.characteristic, config.degree_bound

        match config.command:
            case Command.DIMS:
                match await self._dimensions.execute(s, characteristic, n):
                    case Ok(table):
                        return CommandOutcome(
                            render_dimension_table(table, fmt), _status_code(table.all_agree)
                        )
                    case Err(error):
                        return failure_outcome(error, fmt)

            case Command.VERIFY_RESOLUTION | Command.VERIFY_BASES:
                use_case = (
                    self._resolution
                    if config.command is Command.VERIFY_RESOLUTION
                    else self._bases
                )
                match await use_case.execute(s, characteristic, n):
                    case Ok(summary):
                        return CommandOutcome(
                            render_verification(summary, fmt), _status_code(summary.passed)
                        )
                    case Err(error):
                        return failure_outcome(error, fmt)

            case Command.YONEDA:
                match await self._products.execute(s, characteristic, config.with_theta):
                    case Ok(product_table):
                        return CommandOutcome(
                            render_product_table(product_table, fmt),
                            _status_code(product_table.passed),
                        )
                    case Err(error):
                        return failure_outcome(error, fmt)

            case Command.RING_CHECK:
                match await self._ring.execute(s, characteristic, config.max_power):
                    case Ok(report):
                        return CommandOutcome(
                            render_ring_check(report, fmt), _status_code(report.passed)
                        )
                    case Err(error):
                        return failure_outcome(error, fmt)

        raise AssertionError(f"Unhandled command {config.command}")
