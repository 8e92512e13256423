"""Cochains: bimodule maps Q^n -> A recorded by their values on generators."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from quiver_cohomology.domain.entities.quiver_algebra import AlgebraElement, QuiverAlgebra
from quiver_cohomology.domain.errors.domain_errors import (
    IncompatibleOperandsError,
    ValidationError,
)
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex

# Greek names of the cochains sending one generator to e_i, e_i x, e_i y, e_i xy.
WORD_NAMES: dict[Word, str] = {
    Word.ONE: "alpha",
    Word.X: "beta",
    Word.Y: "gamma",
    Word.XY: "delta",
}


class Cochain:
    """Element of Hom(Q^n, A): generator b^n_{i,j} -> value in e_i A e_{i+n}.

    Values are checked to start at vertex i and end at vertex i+n.
    """

    __slots__ = ("algebra", "degree", "label", "values")

    def __init__(
        self,
        algebra: QuiverAlgebra,
        degree: int,
        values: Mapping[GeneratorIndex, AlgebraElement] | None = None,
        label: str | None = None,
    ) -> None:
        s = algebra.s
        kept: dict[GeneratorIndex, AlgebraElement] = {}
        for g, value in (values or {}).items():
            if g.n != degree:
                raise ValidationError(
                    f"Generator {g} is not in degree {degree}", field="generator", value=g
                )
            for basis in value.coeffs:
                if basis.vertex != g.i % s or basis.terminus(s) != g.terminus(s):
                    raise ValidationError(
                        f"Value {basis} at {g} leaves the corner e_{g.i} A e_{g.terminus(s)}",
                        field="value",
                        value=str(basis),
                    )
            if not value.is_zero():
                kept[g] = value
        self.algebra = algebra
        self.degree = degree
        self.values = kept
        self.label = label

    @classmethod
    def basis_cochain(
        cls, algebra: QuiverAlgebra, word: Word, i: int, j: int, n: int
    ) -> Cochain:
        """The named cochain sending b^n_{i,j} to e_i * word and every other generator to 0."""
        s = algebra.s
        g = GeneratorIndex(n, i % s, j)
        value = algebra.element({BasisElement(i % s, word): 1})
        return cls(algebra, n, {g: value}, label=f"{WORD_NAMES[word]}[{i % s},{j}]^{n}")

    @classmethod
    def zero(cls, algebra: QuiverAlgebra, degree: int) -> Cochain:
        return cls(algebra, degree, {}, label="0")

    def value(self, g: GeneratorIndex) -> AlgebraElement:
        found = self.values.get(g)
        return found if found is not None else self.algebra.zero()

    def _check(self, other: Cochain) -> None:
        if other.algebra.key != self.algebra.key or other.degree != self.degree:
            raise IncompatibleOperandsError(
                "Cannot combine cochains of different algebras or degrees",
                context={"left_degree": self.degree, "right_degree": other.degree},
            )

    def __add__(self, other: Cochain) -> Cochain:
        self._check(other)
        values = dict(self.values)
        for g, value in other.values.items():
            values[g] = values[g] + value if g in values else value
        return Cochain(self.algebra, self.degree, values, label=_join(self.label, "+", other.label))

    def __neg__(self) -> Cochain:
        label = f"-({self.label})" if self.label else None
        return Cochain(self.algebra, self.degree, {g: -v for g, v in self.values.items()}, label)

    def __sub__(self, other: Cochain) -> Cochain:
        self._check(other)
        return Cochain(
            self.algebra,
            self.degree,
            (self + (-other)).values,
            label=_join(self.label, "-", other.label),
        )

    def scale(self, c: Any) -> Cochain:
        return Cochain(
            self.algebra, self.degree, {g: v.scale(c) for g, v in self.values.items()}, self.label
        )

    def relabel(self, label: str) -> Cochain:
        return Cochain(self.algebra, self.degree, self.values, label)

    def is_zero(self) -> bool:
        return not self.values

    def is_in_radical(self) -> bool:
        """All generator values lie in the radical (only words of positive degree)."""
        return all(value.is_in_radical() for value in self.values.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.algebra.key == other.algebra.key
            and self.degree == other.degree
            and self.values == other.values
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        name = self.label or "cochain"
        return f"Cochain({name}, degree={self.degree}, support={len(self.values)})"


def _join(left: str | None, op: str, right: str | None) -> str | None:
    if left is None or right is None:
        return None
    return f"{left} {op} {right}"


def sum_cochains(
    cochains: list[Cochain], algebra: QuiverAlgebra, degree: int, label: str | None = None
) -> Cochain:
    """Sum of a list of cochains of one degree."""
    total = Cochain.zero(algebra, degree)
    for cochain in cochains:
        total = total + cochain
    return total.relabel(label) if label else total
