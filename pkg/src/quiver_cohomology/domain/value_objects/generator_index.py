"""Index of a free generator b^n_{i,j} of the n-th projective bimodule."""

from __future__ import annotations

from dataclasses import dataclass

from quiver_cohomology.domain.errors.domain_errors import ValidationError


@dataclass(frozen=True, slots=True, order=True)
class GeneratorIndex:
    """The generator b^n_{i,j}: degree n, start vertex i, j letters x (0 <= j <= n).

    Field order makes sorting degree-major, then i, then j.
    """

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError("Generator degree must be non-negative", field="n", value=self.n)
        if not 0 <= self.j <= self.n:
            raise ValidationError(
                f"Generator index j must lie in [0, {self.n}]", field="j", value=self.j
            )
        if self.i < 0:
            raise ValidationError("Generator vertex must be non-negative", field="i", value=self.i)

    def origin(self) -> int:
        return self.i

    def terminus(self, s: int) -> int:
        return (self.i + self.n) % s

    def __str__(self) -> str:
        return f"b^{self.n}_{{{self.i},{self.j}}}"


def generators(n: int, s: int) -> list[GeneratorIndex]:
    """All s(n+1) generators of degree n, i outer and j inner."""
    return [GeneratorIndex(n, i, j) for i in range(s) for j in range(n + 1)]
