"""Verification reports produced by the resolution, cochain and Yoneda services."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class GeneratorFailure(BaseModel):
    """A check that failed on the generator b^n_{i,j}."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Degree of the generator the map failed on")
    i: int = Field(..., ge=0, description="Start vertex")
    j: int = Field(..., ge=0, description="Number of letters x")
    message: str = Field(..., description="What went wrong")


class ComplexReport(BaseModel):
    """Outcome of checking that consecutive differentials compose to zero."""

    model_config = ConfigDict(frozen=True)

    max_degree: int = Field(..., ge=1)
    checked_composites: int = Field(..., ge=0, description="Number of composites checked")
    failure_count: int = Field(default=0, ge=0)
    first_failure: GeneratorFailure | None = Field(default=None)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0


class ExactnessReport(BaseModel):
    """Rank bookkeeping for exactness plus the radical condition for minimality."""

    model_config = ConfigDict(frozen=True)

    max_degree: int = Field(..., ge=2)
    dimensions: dict[int, int] = Field(..., description="dim_K Q^n for n = 0..N")
    ranks: dict[int, int] = Field(..., description="rank of the n-th differential, n = 0..N")
    first_inexact_degree: int | None = Field(default=None)
    first_non_minimal: GeneratorFailure | None = Field(default=None)

    @property
    def exact(self) -> bool:
        return self.first_inexact_degree is None

    @property
    def minimal(self) -> bool:
        return self.first_non_minimal is None

    @property
    def passed(self) -> bool:
        return self.exact and self.minimal


class FamilyCheck(BaseModel):
    """Check of one listed family against a computed subspace."""

    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., description="image, kernel or cohomology")
    degree: int = Field(..., ge=0, description="Cochain degree the family lives in")
    listed: int = Field(..., ge=0, description="Number of listed elements")
    expected: int = Field(..., ge=0, description="Computed dimension of the subspace")
    membership: bool = Field(...)
    independent: bool = Field(...)
    first_failing_element: str | None = Field(default=None)

    @property
    def passed(self) -> bool:
        return self.membership and self.independent and self.listed == self.expected


class StatedBasisReport(BaseModel):
    """All family checks for one cohomological degree."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    r: int = Field(..., ge=0)
    branch: str = Field(..., description="Closed-form branch label")
    checks: list[FamilyCheck] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> FamilyCheck | None:
        return next((check for check in self.checks if not check.passed), None)


class ProductCheck(BaseModel):
    """Class of a product of ring generators z_k1 x ... x z_kt."""

    model_config = ConfigDict(frozen=True)

    indices: tuple[int, ...] = Field(..., description="Generator indices, in multiplication order")
    degree: int = Field(..., ge=0)
    class_coordinates: list[str] = Field(
        ..., description="Coordinates in the sum-of-alpha basis of the degree, as exact strings"
    )
    expected_index: int = Field(..., ge=0, description="Index sum the class should sit at")
    matches: bool = Field(...)


class PresentationReport(BaseModel):
    """Verification of the polynomial presentation of cohomology modulo nilpotence."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=3)
    characteristic: int = Field(..., ge=0)
    case: str = Field(..., description="'i' when D = 2s, 'ii' when D = s")
    generator_degree: int = Field(..., ge=1)
    generator_count: int = Field(..., ge=2)
    max_power: int = Field(..., ge=1)
    products: list[ProductCheck] = Field(default_factory=list)
    span_dimensions: dict[int, int] = Field(
        default_factory=dict, description="power t -> dimension of the span of t-fold products"
    )
    cohomology_dimensions: dict[int, int] = Field(
        default_factory=dict, description="power t -> computed dim HH^{Dt}"
    )
    commutative: bool = Field(default=True)
    failing_relations: list[tuple[int, int, int, int]] = Field(default_factory=list)

    @property
    def relation_matrix(self) -> list[list[int]]:
        """Entry (k, l) is the index sum detected for z_k x z_l, or -1 if undetected."""
        size = self.generator_count
        matrix = [[-1] * size for _ in range(size)]
        for product in self.products:
            if len(product.indices) == 2 and product.matches:
                k, l = product.indices
                matrix[k][l] = product.expected_index
        return matrix

    @property
    def passed(self) -> bool:
        return (
            all(p.matches for p in self.products)
            and self.commutative
            and not self.failing_relations
            and all(
                self.span_dimensions.get(t) == self.generator_degree * t + 1
                and self.cohomology_dimensions.get(t) == self.generator_degree * t + 1
                for t in range(1, self.max_power + 1)
            )
        )


class NilpotenceSample(BaseModel):
    """Nilpotence check of one cohomology basis class."""

    model_config = ConfigDict(frozen=True)

    degree: int = Field(..., ge=0)
    label: str = Field(...)
    values_in_radical: bool = Field(...)
    vanishing_power: int | None = Field(
        default=None, description="Smallest power found to be a coboundary"
    )

    @property
    def passed(self) -> bool:
        return self.values_in_radical and self.vanishing_power is not None


class NilpotenceReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    degrees: list[int] = Field(default_factory=list)
    samples: list[NilpotenceSample] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(sample.passed for sample in self.samples)


class HomologyDimensions(BaseModel):
    """Dimensions around one cochain degree n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    dim_hom: int = Field(..., ge=0, description="dim of the degree-n cochain space")
    dim_ker: int = Field(..., ge=0, description="dim Ker of the outgoing coboundary map")
    dim_im_incoming: int = Field(..., ge=0, description="dim Im of the incoming coboundary map")
    dim_im_outgoing: int = Field(..., ge=0, description="rank of the outgoing coboundary map")
    dim_hh: int = Field(..., ge=0)


class OracleComparison(BaseModel):
    """z_{u2} o theta_{u1} against the generic-lift product of the same pair."""

    model_config = ConfigDict(frozen=True)

    u1: int = Field(..., ge=0)
    u2: int = Field(..., ge=0)
    cohomologous: bool = Field(...)
