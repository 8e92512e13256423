"""Verification summary DTOs."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class CheckResult(BaseModel):
    """Outcome of one named check."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Check name, e.g. complex or stated_bases[n=4]")
    passed: bool = Field(...)
    detail: str = Field(default="", description="Short human-readable summary")
    notes: list[str] = Field(default_factory=list)


class VerificationSummary(BaseModel):
    """All checks of one verification command."""

    model_config = ConfigDict(frozen=True)

    command: str = Field(...)
    s: int = Field(..., ge=1)
    characteristic: int = Field(..., ge=0)
    max_degree: int = Field(..., ge=1)
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def notes(self) -> list[str]:
        return [note for check in self.checks for note in check.notes]
