"""Tests for the domain error hierarchy."""

import pytest

from quiver_cohomology.domain.errors.domain_errors import (
    CohomologyError,
    ConfigurationError,
    DimensionMismatchError,
    DomainError,
    FormulaRangeError,
    IncompatibleOperandsError,
    LiftingError,
    NotACocycleError,
    ResolutionError,
    ValidationError,
)


class TestDomainError:
    """Tests for the base error."""

    def test_defaults_code_to_class_name(self) -> None:
        error = DomainError("boom")
        assert error.code == "DomainError"
        assert error.context == {}
        assert str(error) == "[DomainError] boom"

    def test_str_includes_context(self) -> None:
        error = DomainError("boom", "CODE", {"degree": 3})
        assert "degree" in str(error)
        assert "CODE" in repr(error)

    def test_with_context_merges(self) -> None:
        error = DomainError("boom", "CODE", {"a": 1}).with_context(b=2)
        assert error.context == {"a": 1, "b": 2}
        assert error.code == "CODE"


class TestValidationErrors:
    """Validation errors and their subclasses."""

    def test_validation_error_records_field(self) -> None:
        error = ValidationError("bad s", field="s", value=0)
        assert error.code == "VALIDATION_ERROR"
        assert error.field == "s"
        assert error.context == {"field": "s", "value": "0"}

    def test_incompatible_operands_is_validation(self) -> None:
        error = IncompatibleOperandsError("mixed fields")
        assert isinstance(error, ValidationError)
        assert error.code == "INCOMPATIBLE_OPERANDS"

    def test_dimension_mismatch(self) -> None:
        error = DimensionMismatchError("apply", 4, 3)
        assert isinstance(error, IncompatibleOperandsError)
        assert error.expected == 4
        assert error.actual == 3
        assert "apply" in error.message

    def test_formula_range(self) -> None:
        error = FormulaRangeError("hh_dimension_formula", 2)
        assert isinstance(error, ValidationError)
        assert error.code == "FORMULA_OUT_OF_RANGE"
        assert error.formula == "hh_dimension_formula"
        assert error.value == 2
        assert "s >= 3" in error.message

    def test_not_a_cocycle(self) -> None:
        error = NotACocycleError(4, "beta[0,1]^4")
        assert isinstance(error, ValidationError)
        assert error.degree == 4
        assert error.context["cochain"] == "beta[0,1]^4"


class TestComputationErrors:
    """Errors raised by failed internal consistency checks."""

    @pytest.mark.parametrize(
        ("error", "code"),
        [
            (ResolutionError("bad", degree=2), "RESOLUTION_ERROR"),
            (CohomologyError("bad", degree=2), "COHOMOLOGY_ERROR"),
        ],
    )
    def test_degree_in_context(self, error: DomainError, code: str) -> None:
        assert error.code == code
        assert error.context["degree"] == 2

    def test_lifting_error(self) -> None:
        error = LiftingError("no solution", step=3, generator="b^9_{0,2}")
        assert error.step == 3
        assert error.context == {"step": 3, "generator": "b^9_{0,2}"}
        assert not isinstance(error, ValidationError)

    def test_configuration_error(self) -> None:
        error = ConfigurationError("bad env", setting="max_concurrency")
        assert error.code == "CONFIGURATION_ERROR"
        assert error.context["setting"] == "max_concurrency"
