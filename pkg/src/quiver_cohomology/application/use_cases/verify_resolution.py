"""Verify resolution and stated-basis use cases."""

from __future__ import annotations

import asyncio
import time
from typing import TYPE_CHECKING

import structlog

from quiver_cohomology.application.dtos.verification_dtos import CheckResult, VerificationSummary
from quiver_cohomology.domain.common.result import Err, Ok, Result
from quiver_cohomology.domain.errors.domain_errors import DomainError, FormulaRangeError
from quiver_cohomology.domain.services.closed_forms import verify_stated_bases
from quiver_cohomology.domain.services.resolution import (
    expansion_is_full_binomial,
    g_set,
    uniform_endpoints,
    verify_left_recursion,
    verify_one_sided_coefficients,
)

if TYPE_CHECKING:
    from quiver_cohomology.config.settings import Settings
    from quiver_cohomology.domain.services.resolution import MinimalResolution, SignRule
    from quiver_cohomology.infrastructure.computation_factory import ComputationFactory

logger = structlog.get_logger()


class VerificationError(DomainError):
    """Error while running verification checks (not a failed check)."""

    def __init__(self, message: str, original: Exception | None = None) -> None:
        context: dict[str, object] = {}
        if original:
            context["original_error"] = str(original)
        super().__init__(message, "VERIFICATION_ERROR", context)
        self.original = original


class VerifyStatedBasesUseCase:
    """Check the listed image, kernel and cohomology families in degrees 0..N (s >= 3)."""

    def __init__(self, factory: ComputationFactory, settings: Settings) -> None:
        self._factory = factory
        self._settings = settings
        self._logger = logger.bind(use_case="verify_stated_bases")

    async def checks(self, s: int, characteristic: int, max_degree: int) -> list[CheckResult]:
        if s < 3:
            raise FormulaRangeError("verify_stated_bases", s)
        complex_ = self._factory.create_complex(s, characteristic)
        semaphore = asyncio.Semaphore(self._settings.max_concurrency)

        async def check(n: int) -> CheckResult:
            async with semaphore:
                report = await asyncio.to_thread(verify_stated_bases, complex_, n)
            failure = report.first_failure
            detail = f"{report.branch}: " + ", ".join(
                f"{c.kind} {c.listed}/{c.expected}" for c in report.checks
            )
            if failure is not None:
                detail += f"; first failure in {failure.kind}"
                if failure.first_failing_element:
                    detail += f" at {failure.first_failing_element}"
            return CheckResult(
                name=f"stated_bases[n={n}]",
                passed=report.passed,
                detail=detail,
                notes=report.notes,
            )

        return list(await asyncio.gather(*(check(n) for n in range(max_degree + 1))))

    async def execute(
        self, s: int, characteristic: int, max_degree: int
    ) -> Result[VerificationSummary, VerificationError]:
        self._logger.info(
            "bases_started", s=s, characteristic=characteristic, max_degree=max_degree
        )
        try:
            checks = await self.checks(s, characteristic, max_degree)
        except DomainError as e:
            self._logger.error("bases_failed", error=e.message, code=e.code)
            return Err(VerificationError(f"Basis verification failed: {e.message}", original=e))
        summary = VerificationSummary(
            command="verify-bases",
            s=s,
            characteristic=characteristic,
            max_degree=max_degree,
            checks=checks,
        )
        self._logger.info("bases_completed", passed=summary.passed)
        return Ok(summary)


class VerifyResolutionUseCase:
    """Complex, exactness, minimality and recursion checks, plus stated bases when s >= 3."""

    def __init__(
        self,
        factory: ComputationFactory,
        settings: Settings,
        sign_rule: SignRule | None = None,
    ) -> None:
        self._factory = factory
        self._settings = settings
        self._sign_rule = sign_rule
        self._bases = VerifyStatedBasesUseCase(factory, settings)
        self._logger = logger.bind(use_case="verify_resolution")

    async def execute(
        self, s: int, characteristic: int, max_degree: int
    ) -> Result[VerificationSummary, VerificationError]:
        self._logger.info(
            "verification_started", s=s, characteristic=characteristic, max_degree=max_degree
        )
        start_time = time.perf_counter()
        try:
            resolution = self._factory.create_resolution(s, characteristic, self._sign_rule)
            checks = [
                await asyncio.to_thread(self._complex_check, resolution, max_degree),
                await self._exactness_check(resolution, max(max_degree, 2)),
                await asyncio.to_thread(self._recursion_check, s, max_degree),
            ]
            if s >= 3 and self._sign_rule is None:
                checks.extend(await self._bases.checks(s, characteristic, max_degree))
        except DomainError as e:
            self._logger.error("verification_failed", error=e.message, code=e.code)
            return Err(VerificationError(f"Verification failed: {e.message}", original=e))

        summary = VerificationSummary(
            command="verify-resolution",
            s=s,
            characteristic=characteristic,
            max_degree=max_degree,
            checks=checks,
        )
        duration_ms = (time.perf_counter() - start_time) * 1000
        self._logger.info(
            "verification_completed", duration_ms=round(duration_ms, 2), passed=summary.passed
        )
        return Ok(summary)

    @staticmethod
    def _complex_check(resolution: MinimalResolution, max_degree: int) -> CheckResult:
        report = resolution.verify_complex(max_degree)
        detail = f"{report.checked_composites} composites"
        if report.first_failure is not None:
            f = report.first_failure
            detail += (
                f"; {report.failure_count} failing generators, "
                f"first b^{f.n}_{{{f.i},{f.j}}}: {f.message}"
            )
        return CheckResult(name="complex", passed=report.passed, detail=detail)

    async def _exactness_check(self, resolution: MinimalResolution, max_degree: int) -> CheckResult:
        semaphore = asyncio.Semaphore(self._settings.max_concurrency)

        async def rank_of(n: int) -> int:
            async with semaphore:
                return await asyncio.to_thread(resolution.differential_rank, n)

        ranks = await asyncio.gather(*(rank_of(n) for n in range(max_degree + 1)))
        report = await asyncio.to_thread(
            resolution.verify_exact_and_minimal, max_degree, dict(enumerate(ranks))
        )
        parts = []
        if report.first_inexact_degree is not None:
            parts.append(f"rank bookkeeping fails at degree {report.first_inexact_degree}")
        if report.first_non_minimal is not None:
            f = report.first_non_minimal
            parts.append(f"not minimal at b^{f.n}_{{{f.i},{f.j}}}")
        detail = "; ".join(parts) or f"exact and minimal through degree {max_degree}"
        return CheckResult(name="exact_and_minimal", passed=report.passed, detail=detail)

    def _recursion_check(self, s: int, max_degree: int) -> CheckResult:
        top = min(max_degree, self._settings.recursion_check_max_degree)
        failures: list[str] = []
        for n in range(1, top + 1):
            if not verify_left_recursion(n, s):
                failures.append(f"left recursion at n={n}")
            if not verify_one_sided_coefficients(n, s):
                failures.append(f"one-sided coefficients at n={n}")
            for g in g_set(n, s):
                if not (expansion_is_full_binomial(g) and uniform_endpoints(g, s)):
                    failures.append(f"expansion of {g}")
                    break
        detail = failures[0] if failures else f"recursions agree through degree {top}"
        return CheckResult(name="recursion", passed=not failures, detail=detail)
