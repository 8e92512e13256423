"""Compute Yoneda product table use case."""

from __future__ import annotations

import asyncio
from typing import TYPE_CHECKING

import structlog

from quiver_cohomology.application.dtos.product_dtos import ProductEntry, ProductTable
from quiver_cohomology.domain.common.result import Err, Ok, Result
from quiver_cohomology.domain.errors.domain_errors import DomainError, FormulaRangeError
from quiver_cohomology.domain.services.yoneda import presentation_case

if TYPE_CHECKING:
    from quiver_cohomology.config.settings import Settings
    from quiver_cohomology.domain.services.yoneda import YonedaCalculator
    from quiver_cohomology.infrastructure.computation_factory import ComputationFactory

logger = structlog.get_logger()


class ProductComputationError(DomainError):
    """Error while computing Yoneda products."""

    def __init__(self, message: str, original: Exception | None = None) -> None:
        context: dict[str, object] = {}
        if original:
            context["original_error"] = str(original)
        super().__init__(message, "PRODUCT_COMPUTATION_ERROR", context)
        self.original = original


class ComputeProductsUseCase:
    """All products z_k x z_l of the ring generators, classified in degree 2D."""

    def __init__(self, factory: ComputationFactory, settings: Settings) -> None:
        self._factory = factory
        self._settings = settings
        self._logger = logger.bind(use_case="compute_products")

    async def execute(
        self, s: int, characteristic: int, with_theta: bool = True
    ) -> Result[ProductTable, ProductComputationError]:
        self._logger.info("products_started", s=s, characteristic=characteristic)
        try:
            if s < 3:
                raise FormulaRangeError("yoneda product table", s)
            calculator = self._factory.create_calculator(s, characteristic)
            count = calculator.generator_degree + 1
            # Lifting chains are per right factor l; evaluate one column per job.
            semaphore = asyncio.Semaphore(self._settings.max_concurrency)

            async def column(l: int) -> list[ProductEntry]:  # noqa: E741
                async with semaphore:
                    return await asyncio.to_thread(self._column, calculator, l, count, with_theta)

            columns = await asyncio.gather(*(column(l) for l in range(count)))
        except DomainError as e:
            self._logger.error("products_failed", error=e.message, code=e.code)
            return Err(
                ProductComputationError(f"Product computation failed: {e.message}", original=e)
            )

        entries = sorted((e for col in columns for e in col), key=lambda e: (e.k, e.l))
        table = ProductTable(
            s=s,
            characteristic=characteristic,
            case=presentation_case(s, calculator.field),
            generator_degree=calculator.generator_degree,
            entries=entries,
        )
        self._logger.info("products_completed", entries=len(entries), passed=table.passed)
        return Ok(table)

    @staticmethod
    def _column(
        calculator: YonedaCalculator, l: int, count: int, with_theta: bool  # noqa: E741
    ) -> list[ProductEntry]:
        entries: list[ProductEntry] = []
        for k in range(count):
            check = calculator.product_check((k, l))
            theta_agrees: bool | None = None
            if with_theta:
                theta_agrees = calculator.cohomologous(
                    calculator.generator_product((k, l)),
                    calculator.theta_product(calculator.z(k), l),
                )
            entries.append(
                ProductEntry(
                    k=k,
                    l=l,
                    degree=check.degree,
                    class_coordinates=check.class_coordinates,
                    matches=check.matches,
                    theta_agrees=theta_agrees,
                )
            )
        return entries
