"""Tests for the application use cases."""

import pytest

from quiver_cohomology.application.use_cases.check_ring import CheckRingUseCase, RingCheckError
from quiver_cohomology.application.use_cases.compute_dimensions import (
    ComputeDimensionsUseCase,
    DimensionComputationError,
)
from quiver_cohomology.application.use_cases.compute_products import (
    ComputeProductsUseCase,
    ProductComputationError,
)
from quiver_cohomology.application.use_cases.verify_resolution import (
    VerificationError,
    VerifyResolutionUseCase,
    VerifyStatedBasesUseCase,
)
from quiver_cohomology.config.settings import Settings
from quiver_cohomology.domain.common.result import Err, Ok, unwrap
from quiver_cohomology.domain.errors.domain_errors import FormulaRangeError, ValidationError
from quiver_cohomology.infrastructure.computation_factory import ComputationFactory


class TestComputeDimensions:
    """Tests for ComputeDimensionsUseCase."""

    @pytest.mark.anyio
    async def test_s3_rationals(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        use_case = ComputeDimensionsUseCase(factory, test_settings)
        table = unwrap(await use_case.execute(3, 0, 9))

        assert [row.dim_hh_computed for row in table.rows] == [1, 4, 3, 0, 0, 0, 7, 16, 9, 0]
        assert [row.n for row in table.rows] == list(range(10))
        assert table.all_agree
        assert table.field == "QQ"
        assert table.rows[4].branch == "r=1 non-regular"

    @pytest.mark.anyio
    async def test_s3_characteristic_two(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        use_case = ComputeDimensionsUseCase(factory, test_settings)
        table = unwrap(await use_case.execute(3, 2, 3))
        assert [row.dim_hh_computed for row in table.rows] == [1, 4, 3, 4]
        assert table.field == "GF(2)"

    @pytest.mark.anyio
    async def test_small_s_has_no_formula(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        use_case = ComputeDimensionsUseCase(factory, test_settings)
        table = unwrap(await use_case.execute(2, 0, 4))
        assert not table.formula_checked
        assert all(row.agree is None for row in table.rows)
        assert table.all_agree

    @pytest.mark.anyio
    async def test_invalid_characteristic(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        use_case = ComputeDimensionsUseCase(factory, test_settings)
        match await use_case.execute(3, 4, 2):
            case Err(error):
                assert isinstance(error, DimensionComputationError)
                assert isinstance(error.original, ValidationError)
            case Ok(_):
                pytest.fail("characteristic 4 must be rejected")


class TestVerifyResolution:
    """Tests for VerifyResolutionUseCase."""

    @pytest.mark.anyio
    async def test_standard_resolution_passes(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        use_case = VerifyResolutionUseCase(factory, test_settings)
        summary = unwrap(await use_case.execute(3, 0, 5))
        names = [check.name for check in summary.checks]

        assert summary.passed
        assert names[:3] == ["complex", "exact_and_minimal", "recursion"]
        assert "stated_bases[n=5]" in names

    @pytest.mark.anyio
    async def test_small_s_skips_bases(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        summary = unwrap(await VerifyResolutionUseCase(factory, test_settings).execute(1, 0, 4))
        assert summary.passed
        assert len(summary.checks) == 3

    @pytest.mark.anyio
    async def test_wrong_sign_rule_fails(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        use_case = VerifyResolutionUseCase(factory, test_settings, sign_rule=lambda n: -1)
        summary = unwrap(await use_case.execute(3, 0, 4))
        complex_check = summary.checks[0]

        assert not summary.passed
        assert not complex_check.passed
        assert "first b^2_" in complex_check.detail
        assert len(summary.checks) == 3

    @pytest.mark.anyio
    async def test_invalid_degree_is_an_error(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        result = await VerifyResolutionUseCase(factory, test_settings).execute(3, 0, 0)
        assert isinstance(result, Err)
        assert isinstance(result.error, VerificationError)


class TestVerifyStatedBases:
    """Tests for VerifyStatedBasesUseCase."""

    @pytest.mark.anyio
    async def test_s4_rationals(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        summary = unwrap(await VerifyStatedBasesUseCase(factory, test_settings).execute(4, 0, 6))
        assert summary.passed
        assert summary.command == "verify-bases"
        assert len(summary.checks) == 7

    @pytest.mark.anyio
    async def test_requires_s_at_least_three(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        result = await VerifyStatedBasesUseCase(factory, test_settings).execute(2, 0, 4)
        assert isinstance(result, Err)
        assert isinstance(result.error.original, FormulaRangeError)


class TestComputeProducts:
    """Tests for ComputeProductsUseCase."""

    @pytest.mark.anyio
    async def test_characteristic_two_table(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        table = unwrap(await ComputeProductsUseCase(factory, test_settings).execute(3, 2))

        assert table.passed
        assert table.case == "ii"
        assert len(table.entries) == 16
        assert [(e.k, e.l) for e in table.entries[:3]] == [(0, 0), (0, 1), (0, 2)]
        assert all(e.theta_agrees for e in table.entries)

    @pytest.mark.anyio
    async def test_skip_theta(self, factory: ComputationFactory, test_settings: Settings) -> None:
        table = unwrap(await ComputeProductsUseCase(factory, test_settings).execute(3, 2, False))
        assert all(e.theta_agrees is None for e in table.entries)

    @pytest.mark.anyio
    async def test_requires_s_at_least_three(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        result = await ComputeProductsUseCase(factory, test_settings).execute(2, 0)
        assert isinstance(result, Err)
        assert isinstance(result.error, ProductComputationError)


class TestCheckRing:
    """Tests for CheckRingUseCase."""

    @pytest.mark.anyio
    async def test_characteristic_two(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        report = unwrap(await CheckRingUseCase(factory, test_settings).execute(3, 2))

        assert report.passed
        assert (report.case, report.generator_degree, report.generator_count) == ("ii", 3, 4)
        assert report.presentation.max_power == 2
        assert report.relation_matrix[0][3] == 3

    @pytest.mark.slow
    @pytest.mark.anyio
    async def test_rationals_case_i(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        report = unwrap(await CheckRingUseCase(factory, test_settings).execute(3, 0, max_power=2))
        assert report.passed
        assert (report.case, report.generator_degree, report.generator_count) == ("i", 6, 7)

    @pytest.mark.anyio
    async def test_requires_s_at_least_three(
        self, factory: ComputationFactory, test_settings: Settings
    ) -> None:
        result = await CheckRingUseCase(factory, test_settings).execute(2, 0)
        match result:
            case Err(RingCheckError() as error):
                assert error.code == "RING_CHECK_ERROR"
                assert isinstance(error.original, FormulaRangeError)
            case _:
                pytest.fail("s = 2 must be rejected")
