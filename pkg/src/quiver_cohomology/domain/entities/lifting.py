"""Lifting chains of cocycles through the resolution and the ring presentation they detect."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from quiver_cohomology.domain.entities.bimodule import BimoduleMap
from quiver_cohomology.domain.entities.cochain import Cochain
from quiver_cohomology.domain.errors.domain_errors import ValidationError


@dataclass(frozen=True)
class LiftingChain:
    """Maps lift_v: Q^{n+v} -> Q^v lifting a degree-n cocycle z.

    The chain satisfies z = (multiplication) o lift_0 and
    lift_v o d^{n+v+1} = d^{v+1} o lift_{v+1}.
    """

    base: Cochain
    lifts: tuple[BimoduleMap, ...]
    method: str = "generic"

    def __post_init__(self) -> None:
        for v, lift in enumerate(self.lifts):
            if lift.source_degree != self.base.degree + v or lift.target_degree != v:
                raise ValidationError(
                    f"Lift {v} must map Q^{self.base.degree + v} to Q^{v}",
                    field="lifts",
                    value=(lift.source_degree, lift.target_degree),
                )

    @property
    def degree(self) -> int:
        return self.base.degree

    @property
    def steps(self) -> int:
        return len(self.lifts) - 1

    def lift(self, v: int) -> BimoduleMap:
        if not 0 <= v < len(self.lifts):
            raise ValidationError(
                f"Chain has lifts 0..{self.steps}", field="v", value=v
            )
        return self.lifts[v]

    def truncated(self, steps: int) -> LiftingChain:
        return LiftingChain(self.base, self.lifts[: steps + 1], self.method)


@dataclass(frozen=True)
class RingPresentation:
    """K[z_0, ..., z_D] modulo z_k z_l - z_q z_r for k + l = q + r."""

    s: int
    characteristic: int
    generator_degree: int
    case: str
    max_power: int = 3

    @property
    def generator_count(self) -> int:
        return self.generator_degree + 1

    def relations(self) -> list[tuple[int, int, int, int]]:
        """All (k, l, q, r) with k <= l, q <= r, (k, l) < (q, r) and k + l = q + r."""
        pairs = list(combinations_with_replacement(range(self.generator_count), 2))
        return [
            (k, l, q, r)
            for a, (k, l) in enumerate(pairs)
            for (q, r) in pairs[a + 1 :]
            if k + l == q + r
        ]

    def graded_dimension(self, t: int) -> int:
        """Dimension of the degree-t component: the number of index sums of t generators."""
        if t < 0:
            raise ValidationError("Power must be non-negative", field="t", value=t)
        return self.generator_degree * t + 1
