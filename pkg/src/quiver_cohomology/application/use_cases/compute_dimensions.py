"""Compute dimensions use case."""

from __future__ import annotations

import asyncio
import time
from typing import TYPE_CHECKING

import structlog

from quiver_cohomology.application.dtos.cohomology_dtos import DimensionRow, DimensionTable
from quiver_cohomology.domain.common.result import Err, Ok, Result
from quiver_cohomology.domain.errors.domain_errors import DomainError
from quiver_cohomology.domain.services.closed_forms import (
    branch_label,
    hh_dimension_formula,
    im_ker_dimension_formula,
)

if TYPE_CHECKING:
    from quiver_cohomology.config.settings import Settings
    from quiver_cohomology.domain.services.cochains import CochainComplex
    from quiver_cohomology.infrastructure.computation_factory import ComputationFactory

logger = structlog.get_logger()


class DimensionComputationError(DomainError):
    """Error while building a dimension table."""

    def __init__(
        self,
        message: str,
        degree: int | None = None,
        original: Exception | None = None,
    ) -> None:
        context: dict[str, object] = {}
        if degree is not None:
            context["degree"] = degree
        if original:
            context["original_error"] = str(original)
        super().__init__(message, "DIMENSION_COMPUTATION_ERROR", context)
        self.degree = degree
        self.original = original


class ComputeDimensionsUseCase:
    """Exact Hochschild cohomology dimensions for degrees 0..N, with closed-form cross-checks."""

    def __init__(self, factory: ComputationFactory, settings: Settings) -> None:
        self._factory = factory
        self._settings = settings
        self._logger = logger.bind(use_case="compute_dimensions")

    async def execute(
        self,
        s: int,
        characteristic: int,
        max_degree: int,
    ) -> Result[DimensionTable, DimensionComputationError]:
        """Evaluate every degree concurrently and assemble the rows in degree order."""
        self._logger.info(
            "dimensions_started", s=s, characteristic=characteristic, max_degree=max_degree
        )
        start_time = time.perf_counter()

        try:
            complex_ = self._factory.create_complex(s, characteristic)
        except DomainError as e:
            return Err(DimensionComputationError(f"Invalid algebra: {e.message}", original=e))

        semaphore = asyncio.Semaphore(self._settings.max_concurrency)

        async def evaluate(n: int) -> DimensionRow:
            async with semaphore:
                return await asyncio.to_thread(self._row, complex_, n)

        try:
            rows = await asyncio.gather(*(evaluate(n) for n in range(max_degree + 1)))
        except DomainError as e:
            self._logger.error("dimensions_failed", error=e.message, code=e.code)
            return Err(
                DimensionComputationError(
                    f"Dimension computation failed: {e.message}",
                    degree=e.context.get("degree"),
                    original=e,
                )
            )

        table = DimensionTable(
            s=s,
            characteristic=characteristic,
            field=complex_.field.label,
            max_degree=max_degree,
            formula_checked=s >= 3,
            rows=list(rows),
        )
        duration_ms = (time.perf_counter() - start_time) * 1000
        self._logger.info(
            "degree_table_completed",
            duration_ms=round(duration_ms, 2),
            rows=len(table.rows),
            all_agree=table.all_agree,
        )
        return Ok(table)

    @staticmethod
    def _row(complex_: CochainComplex, n: int) -> DimensionRow:
        dims = complex_.hh_dimension_computed(n)
        s = complex_.s
        if s < 3:
            return DimensionRow(
                n=n,
                dim_hom=dims.dim_hom,
                dim_ker=dims.dim_ker,
                dim_im=dims.dim_im_outgoing,
                dim_hh_computed=dims.dim_hh,
            )
        field = complex_.field
        dim_im_formula, dim_ker_formula = im_ker_dimension_formula(n, s, field)
        return DimensionRow(
            n=n,
            dim_hom=dims.dim_hom,
            dim_ker=dims.dim_ker,
            dim_im=dims.dim_im_outgoing,
            dim_hh_computed=dims.dim_hh,
            dim_hh_formula=hh_dimension_formula(n, s, field),
            dim_im_formula=dim_im_formula,
            dim_ker_formula=dim_ker_formula,
            branch=branch_label(n, s, field),
        )
