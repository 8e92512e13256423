"""Yoneda product and ring-check DTOs."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from quiver_cohomology.domain.entities.verification import NilpotenceReport, PresentationReport


class ProductEntry(BaseModel):
    """z_k x z_l with its class in the degree-2D basis."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0)
    l: int = Field(..., ge=0)  # noqa: E741
    degree: int = Field(..., ge=0)
    class_coordinates: list[str] = Field(default_factory=list)
    matches: bool = Field(..., description="Class equals the basis class at index k + l")
    theta_agrees: bool | None = Field(
        default=None, description="Cohomologous to the explicit-lifting product, when checked"
    )


class ProductTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=1)
    characteristic: int = Field(..., ge=0)
    case: str = Field(...)
    generator_degree: int = Field(..., ge=1)
    entries: list[ProductEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.matches and e.theta_agrees is not False for e in self.entries)


class RingCheckReport(BaseModel):
    """Presentation of cohomology modulo nilpotence plus nilpotence samples."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=3)
    characteristic: int = Field(..., ge=0)
    case: str = Field(...)
    generator_degree: int = Field(..., ge=1)
    generator_count: int = Field(..., ge=2)
    presentation: PresentationReport
    nilpotence: NilpotenceReport

    @property
    def relation_matrix(self) -> list[list[int]]:
        return self.presentation.relation_matrix

    @property
    def passed(self) -> bool:
        return self.presentation.passed and self.nilpotence.passed
