"""The algebra of the cyclic quiver with double arrows modulo x^2, xy + yx, y^2.

Every vertex i carries the four basis elements e_i, e_i x, e_i y, e_i xy,
where x (resp. y) is the sum of all arrows a_i (resp. b_i). Multiplication
is a closed table: the relations are quadratic and homogeneous, so every
path of length three vanishes and yx is rewritten as -xy.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import structlog

from quiver_cohomology.domain.errors.domain_errors import (
    IncompatibleOperandsError,
    ValidationError,
)
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec

logger = structlog.get_logger()

# (left word, right word) -> (sign, product word); missing pairs multiply to zero.
_WORD_PRODUCTS: dict[tuple[Word, Word], tuple[int, Word]] = {
    (Word.ONE, Word.ONE): (1, Word.ONE),
    (Word.ONE, Word.X): (1, Word.X),
    (Word.ONE, Word.Y): (1, Word.Y),
    (Word.ONE, Word.XY): (1, Word.XY),
    (Word.X, Word.ONE): (1, Word.X),
    (Word.Y, Word.ONE): (1, Word.Y),
    (Word.XY, Word.ONE): (1, Word.XY),
    (Word.X, Word.Y): (1, Word.XY),
    (Word.Y, Word.X): (-1, Word.XY),
}


@dataclass(frozen=True, slots=True)
class Arrow:
    """Arrow of the quiver: ``name`` is "a" (contributes to x) or "b" (contributes to y)."""

    name: str
    source: int
    target: int


class CircularQuiver:
    """Cycle on s vertices with two parallel arrows a_i, b_i: i -> i+1 (mod s)."""

    def __init__(self, s: int) -> None:
        if s < 1:
            raise ValidationError("The quiver needs at least one vertex", field="s", value=s)
        self.s = s

    @property
    def vertices(self) -> range:
        return range(self.s)

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return tuple(
            Arrow(name, i, (i + 1) % self.s) for i in range(self.s) for name in ("a", "b")
        )

    def __repr__(self) -> str:
        return f"CircularQuiver(s={self.s})"


class QuiverAlgebra:
    """Handle on the algebra for a fixed vertex count and field.

    Immutable once built; obtain instances through ``build_algebra`` so that
    equal parameters share one handle.
    """

    def __init__(self, s: int, field: FieldSpec) -> None:
        self.quiver = CircularQuiver(s)
        self.field = field
        self.basis: tuple[BasisElement, ...] = tuple(
            BasisElement(i, word) for i in range(s) for word in Word
        )
        self._ending_at: dict[int, tuple[BasisElement, ...]] = {
            v: tuple(b for b in self.basis if b.terminus(s) == v) for v in range(s)
        }
        self._starting_at: dict[int, tuple[BasisElement, ...]] = {
            v: tuple(b for b in self.basis if b.vertex == v) for v in range(s)
        }
        self._table: dict[tuple[BasisElement, BasisElement], tuple[int, BasisElement]] = {}
        for a in self.basis:
            for b in self.basis:
                product = self._multiply_words(a, b)
                if product is not None:
                    self._table[(a, b)] = product

    @property
    def s(self) -> int:
        return self.quiver.s

    @property
    def key(self) -> tuple[int, int]:
        return (self.s, self.field.characteristic)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _multiply_words(self, a: BasisElement, b: BasisElement) -> tuple[int, BasisElement] | None:
        if b.vertex != a.terminus(self.s):
            return None
        entry = _WORD_PRODUCTS.get((a.word, b.word))
        if entry is None:
            return None
        sign, word = entry
        return sign, BasisElement(a.vertex, word)

    def multiply_basis(self, a: BasisElement, b: BasisElement) -> tuple[int, BasisElement] | None:
        """Product of two basis elements as (sign, basis element), or None when it vanishes."""
        return self._table.get((a, b))

    def ending_at(self, vertex: int) -> tuple[BasisElement, ...]:
        """The four basis elements whose terminus is ``vertex``, in canonical order."""
        return self._ending_at[vertex % self.s]

    def starting_at(self, vertex: int) -> tuple[BasisElement, ...]:
        return self._starting_at[vertex % self.s]

    def corner_basis(self, i: int, n: int) -> list[BasisElement]:
        """Basis of e_i A e_{i+n} seen as the target of a degree-n cochain.

        Words are those whose degree is congruent to n mod s: for s >= 3 a single
        degree, for s = 2 the words of the parity of n, for s = 1 all four words.
        Empty when s >= 4 and n is not 0, 1 or 2 mod s.
        """
        if n < 0:
            raise ValidationError("Corner degree must be non-negative", field="n", value=n)
        s = self.s
        vertex = i % s
        return [BasisElement(vertex, w) for w in Word if (w.degree - n) % s == 0]

    # -- elements -----------------------------------------------------------

    def element(self, coeffs: Mapping[BasisElement, Any] | None = None) -> AlgebraElement:
        return AlgebraElement(self, coeffs or {})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def basis_element(self, vertex: int, word: Word | str) -> AlgebraElement:
        return AlgebraElement(self, {BasisElement(vertex % self.s, Word(word)): 1})

    def idempotent(self, i: int) -> AlgebraElement:
        return self.basis_element(i, Word.ONE)

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {BasisElement(i, Word.ONE): 1 for i in range(self.s)})

    def arrow_a(self, i: int) -> AlgebraElement:
        return self.basis_element(i, Word.X)

    def arrow_b(self, i: int) -> AlgebraElement:
        return self.basis_element(i, Word.Y)

    def x(self) -> AlgebraElement:
        return AlgebraElement(self, {BasisElement(i, Word.X): 1 for i in range(self.s)})

    def y(self) -> AlgebraElement:
        return AlgebraElement(self, {BasisElement(i, Word.Y): 1 for i in range(self.s)})

    def multiply(self, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of the basis multiplication table."""
        if u.algebra.key != self.key or v.algebra.key != self.key:
            raise IncompatibleOperandsError(
                "Cannot multiply elements of different algebras",
                context={"left": str(u.algebra.key), "right": str(v.algebra.key)},
            )
        out: dict[BasisElement, Any] = {}
        zero = self.field.zero
        for a, ca in u.coeffs.items():
            for b, cb in v.coeffs.items():
                product = self._table.get((a, b))
                if product is None:
                    continue
                sign, basis = product
                term = ca * cb if sign > 0 else -(ca * cb)
                out[basis] = out.get(basis, zero) + term
        return AlgebraElement(self, out)

    def __repr__(self) -> str:
        return f"QuiverAlgebra(s={self.s}, field={self.field.label}, dim={self.dimension})"


class AlgebraElement:
    """Sparse linear combination of canonical basis elements; zero coefficients are dropped."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: QuiverAlgebra, coeffs: Mapping[BasisElement, Any]) -> None:
        field = algebra.field
        kept: dict[BasisElement, Any] = {}
        for basis, value in coeffs.items():
            scalar = field.element(value)
            if scalar:
                kept[basis] = scalar
        self.algebra = algebra
        self.coeffs = kept

    def _check(self, other: AlgebraElement) -> None:
        if other.algebra.key != self.algebra.key:
            raise IncompatibleOperandsError(
                "Cannot combine elements of different algebras",
                context={"left": str(self.algebra.key), "right": str(other.algebra.key)},
            )

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.coeffs)
        zero = self.algebra.field.zero
        for basis, value in other.coeffs.items():
            out[basis] = out.get(basis, zero) + value
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {b: -v for b, v in self.coeffs.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return self.algebra.multiply(self, other)

    def scale(self, c: Any) -> AlgebraElement:
        scalar = self.algebra.field.element(c)
        return AlgebraElement(self.algebra, {b: scalar * v for b, v in self.coeffs.items()})

    def coefficient(self, basis: BasisElement) -> Any:
        return self.coeffs.get(basis, self.algebra.field.zero)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[BasisElement]:
        return sorted(self.coeffs, key=lambda b: b.index)

    def radical_degree(self) -> int | None:
        """Smallest word degree in the support; None for zero."""
        return min((b.degree for b in self.coeffs), default=None)

    def is_in_radical(self) -> bool:
        return all(b.degree >= 1 for b in self.coeffs)

    def is_homogeneous(self) -> bool:
        return len({b.degree for b in self.coeffs}) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.key == other.algebra.key and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        fmt = self.algebra.field.format
        return " + ".join(f"{fmt(self.coeffs[b])}*{b}" for b in self.support())


@lru_cache(maxsize=64)
def build_algebra(s: int, field: FieldSpec) -> QuiverAlgebra:
    """Build (or reuse) the algebra for ``s`` vertices over ``field``."""
    algebra = QuiverAlgebra(s, field)
    logger.debug("algebra_built", s=s, field=field.label, dimension=algebra.dimension)
    return algebra

