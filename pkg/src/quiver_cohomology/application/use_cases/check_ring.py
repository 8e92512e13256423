"""Ring presentation check use case."""

from __future__ import annotations

import asyncio
import time
from collections.abc import Sequence
from typing import TYPE_CHECKING

import structlog

from quiver_cohomology.application.dtos.product_dtos import RingCheckReport
from quiver_cohomology.domain.common.result import Err, Ok, Result
from quiver_cohomology.domain.errors.domain_errors import DomainError, FormulaRangeError

if TYPE_CHECKING:
    from quiver_cohomology.config.settings import Settings
    from quiver_cohomology.infrastructure.computation_factory import ComputationFactory

logger = structlog.get_logger()

# Degrees 1 and 2 always carry nonzero cohomology off the generator degree.
DEFAULT_NILPOTENCE_DEGREES: tuple[int, ...] = (1, 2)


class RingCheckError(DomainError):
    """Error while checking the ring presentation."""

    def __init__(self, message: str, original: Exception | None = None) -> None:
        context: dict[str, object] = {}
        if original:
            context["original_error"] = str(original)
        super().__init__(message, "RING_CHECK_ERROR", context)
        self.original = original


class CheckRingUseCase:
    """Presentation of cohomology modulo nilpotence and nilpotence samples (s >= 3)."""

    def __init__(self, factory: ComputationFactory, settings: Settings) -> None:
        self._factory = factory
        self._settings = settings
        self._logger = logger.bind(use_case="check_ring")

    async def execute(
        self,
        s: int,
        characteristic: int,
        max_power: int | None = None,
        nilpotence_degrees: Sequence[int] = DEFAULT_NILPOTENCE_DEGREES,
    ) -> Result[RingCheckReport, RingCheckError]:
        power = max_power or self._settings.presentation_max_power
        self._logger.info("ring_check_started", s=s, characteristic=characteristic, max_power=power)
        start_time = time.perf_counter()
        try:
            if s < 3:
                raise FormulaRangeError("ring-check", s)
            calculator = self._factory.create_calculator(s, characteristic)
            presentation, nilpotence = await asyncio.gather(
                asyncio.to_thread(calculator.verify_presentation, power),
                asyncio.to_thread(calculator.verify_nilpotence_samples, list(nilpotence_degrees)),
            )
        except DomainError as e:
            self._logger.error("ring_check_failed", error=e.message, code=e.code)
            return Err(RingCheckError(f"Ring check failed: {e.message}", original=e))

        report = RingCheckReport(
            s=s,
            characteristic=characteristic,
            case=presentation.case,
            generator_degree=presentation.generator_degree,
            generator_count=presentation.generator_count,
            presentation=presentation,
            nilpotence=nilpotence,
        )
        duration_ms = (time.perf_counter() - start_time) * 1000
        self._logger.info(
            "ring_check_completed", duration_ms=round(duration_ms, 2), passed=report.passed
        )
        return Ok(report)
