"""Domain error hierarchy for the cohomology engine.

All domain errors inherit from DomainError, so callers can catch the whole
family at the presentation boundary and map it to an exit code.
"""

from __future__ import annotations

from typing import Any


class DomainError(Exception):
    """Base domain error carrying a code and structured context."""

    def __init__(
        self,
        message: str,
        code: str | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        """Initialize domain error.

        Args:
            message: Human-readable error message
            code: Optional error code for programmatic handling
            context: Optional additional context about the error
        """
        self.message = message
        self.code = code or self.__class__.__name__
        self.context = context or {}
        super().__init__(message)

    def __str__(self) -> str:
        if self.context:
            return f"[{self.code}] {self.message} (context: {self.context})"
        return f"[{self.code}] {self.message}"

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"message={self.message!r}, "
            f"code={self.code!r}, "
            f"context={self.context!r})"
        )

    def with_context(self, **kwargs: Any) -> DomainError:
        """Return a plain DomainError with merged context."""
        return DomainError(
            message=self.message,
            code=self.code,
            context={**self.context, **kwargs},
        )


class ValidationError(DomainError):
    """Invalid input: vertex count, characteristic, degree, word or index out of range."""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        value: Any = None,
        code: str | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        self.field = field
        self.value = value
        ctx = context or {}
        if field:
            ctx["field"] = field
        if value is not None:
            ctx["value"] = str(value)
        super().__init__(message, code or "VALIDATION_ERROR", ctx)


class IncompatibleOperandsError(ValidationError):
    """Operands built over different algebras or fields were combined."""

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="INCOMPATIBLE_OPERANDS", context=context)


class DimensionMismatchError(IncompatibleOperandsError):
    """Matrix and vector shapes do not fit together."""

    def __init__(
        self,
        operation: str,
        expected: int | tuple[int, int],
        actual: int | tuple[int, int],
    ) -> None:
        self.operation = operation
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Shape mismatch in {operation}: expected {expected}, got {actual}",
            context={"operation": operation, "expected": str(expected), "actual": str(actual)},
        )


class FormulaRangeError(ValidationError):
    """A closed-form formula was requested outside its range (it needs s >= 3)."""

    def __init__(self, formula: str, s: int) -> None:
        self.formula = formula
        super().__init__(
            f"Closed form '{formula}' requires s >= 3, got s={s}",
            field="s",
            value=s,
            code="FORMULA_OUT_OF_RANGE",
            context={"formula": formula},
        )


class NotACocycleError(ValidationError):
    """A cochain used as a cocycle is not annihilated by the next differential."""

    def __init__(self, degree: int, label: str | None = None) -> None:
        self.degree = degree
        ctx: dict[str, Any] = {"degree": degree}
        if label:
            ctx["cochain"] = label
        super().__init__(
            f"Cochain of degree {degree} is not a cocycle",
            code="NOT_A_COCYCLE",
            context=ctx,
        )


class ResolutionError(DomainError):
    """The bimodule resolution is internally inconsistent at some degree."""

    def __init__(
        self,
        message: str,
        degree: int | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        self.degree = degree
        ctx = context or {}
        if degree is not None:
            ctx["degree"] = degree
        super().__init__(message, "RESOLUTION_ERROR", ctx)


class CohomologyError(DomainError):
    """Cochain complex bookkeeping failed (image not in kernel, value outside its corner)."""

    def __init__(
        self,
        message: str,
        degree: int | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        self.degree = degree
        ctx = context or {}
        if degree is not None:
            ctx["degree"] = degree
        super().__init__(message, "COHOMOLOGY_ERROR", ctx)


class LiftingError(DomainError):
    """A lifting step has no solution."""

    def __init__(
        self,
        message: str,
        step: int,
        generator: str | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        self.step = step
        self.generator = generator
        ctx = context or {}
        ctx["step"] = step
        if generator:
            ctx["generator"] = generator
        super().__init__(message, "LIFTING_ERROR", ctx)


class ConfigurationError(DomainError):
    """Invalid or inconsistent configuration."""

    def __init__(
        self,
        message: str,
        setting: str | None = None,
        code: str | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        self.setting = setting
        ctx = context or {}
        if setting:
            ctx["setting"] = setting
        super().__init__(message, code or "CONFIGURATION_ERROR", ctx)
