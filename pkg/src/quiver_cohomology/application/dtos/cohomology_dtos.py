"""Dimension-table DTOs for the application layer."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

# Column order of the CSV rendering and of the leading JSON row keys.
TABLE_COLUMNS: tuple[str, ...] = (
    "n",
    "dim_hom",
    "dim_ker",
    "dim_im",
    "dim_hh_computed",
    "dim_hh_formula",
    "agree",
)


class Provenance(str, Enum):
    """Where the numbers of a row come from."""

    COMPUTED = "computed"
    BOTH_AGREE = "both-agree"
    DISAGREE = "disagree"


class DimensionRow(BaseModel):
    """Dimensions at one degree n; dim_ker and dim_im refer to the coboundary out of degree n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Cochain degree")
    dim_hom: int = Field(..., ge=0, description="dim of the degree-n cochain space")
    dim_ker: int = Field(..., ge=0, description="dim Ker of the coboundary out of degree n")
    dim_im: int = Field(..., ge=0, description="dim Im of the coboundary out of degree n")
    dim_hh_computed: int = Field(..., ge=0, description="dim HH^n by exact rank computation")
    dim_hh_formula: int | None = Field(default=None, description="Closed form, when s >= 3")
    dim_im_formula: int | None = Field(default=None)
    dim_ker_formula: int | None = Field(default=None)
    branch: str | None = Field(default=None, description="Closed-form branch label")

    @property
    def agree(self) -> bool | None:
        if self.dim_hh_formula is None:
            return None
        return (
            self.dim_hh_formula == self.dim_hh_computed
            and self.dim_im_formula == self.dim_im
            and self.dim_ker_formula == self.dim_ker
        )

    @property
    def provenance(self) -> Provenance:
        match self.agree:
            case None:
                return Provenance.COMPUTED
            case True:
                return Provenance.BOTH_AGREE
            case _:
                return Provenance.DISAGREE


class EulerWindow(BaseModel):
    """Alternating-sum bookkeeping over the degrees start..end = ms..ms+s-1."""

    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=0)
    end: int = Field(..., ge=0)
    alternating_hh: int = Field(..., description="sum of (-1)^n dim HH^n")
    alternating_corrected: int = Field(
        ..., description="sum of (-1)^n dim_hom minus the two boundary rank terms"
    )

    @property
    def holds(self) -> bool:
        return self.alternating_hh == self.alternating_corrected


class DimensionTable(BaseModel):
    """Per-degree dimensions for one algebra, ordered by degree."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=1)
    characteristic: int = Field(..., ge=0)
    field: str = Field(..., description="Field label, QQ or GF(p)")
    max_degree: int = Field(..., ge=0)
    formula_checked: bool = Field(..., description="False when s < 3")
    rows: list[DimensionRow] = Field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(row.agree is not False for row in self.rows)

    def row(self, n: int) -> DimensionRow:
        return self.rows[n]

    def euler_windows(self) -> list[EulerWindow]:
        """Windows [ms, ms+s-1] lying completely inside the table."""
        windows: list[EulerWindow] = []
        start = 0
        while start + self.s - 1 <= self.max_degree:
            end = start + self.s - 1
            span = self.rows[start : end + 1]
            hh = sum((-1) ** r.n * r.dim_hh_computed for r in span)
            hom = sum((-1) ** r.n * r.dim_hom for r in span)
            before = self.rows[start - 1].dim_im if start >= 1 else 0
            corrected = hom - (-1) ** end * self.rows[end].dim_im - (-1) ** start * before
            windows.append(
                EulerWindow(
                    start=start, end=end, alternating_hh=hh, alternating_corrected=corrected
                )
            )
            start += self.s
        return windows
