"""Free bimodules Q^n and the homomorphisms between them.

An element of Q^n is a finite sum of terms c * (left) b^n_{i,j} (right) with
``left`` ending at vertex i and ``right`` starting at vertex i+n. A bimodule
map is determined by the images of the generators.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from typing import Any

from quiver_cohomology.domain.entities.quiver_algebra import QuiverAlgebra
from quiver_cohomology.domain.errors.domain_errors import (
    IncompatibleOperandsError,
    ValidationError,
)
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex, generators

TensorKey = tuple[GeneratorIndex, BasisElement, BasisElement]


class TensorBasis:
    """K-basis of Q^n: generator-major (i outer, j inner), then left, then right factor.

    Left factors are the four basis elements ending at vertex i, right factors the
    four starting at vertex i+n, both in canonical order, so dim Q^n = 16 s (n+1).
    """

    def __init__(self, algebra: QuiverAlgebra, n: int) -> None:
        s = algebra.s
        self.degree = n
        elements: list[TensorKey] = []
        for g in generators(n, s):
            for left in algebra.ending_at(g.i):
                for right in algebra.starting_at(g.terminus(s)):
                    elements.append((g, left, right))
        self.elements: tuple[TensorKey, ...] = tuple(elements)
        self.index: dict[TensorKey, int] = {key: k for k, key in enumerate(self.elements)}
        corners: dict[tuple[int, int], list[int]] = {}
        for k, (_, left, right) in enumerate(self.elements):
            corners.setdefault((left.vertex, right.terminus(s)), []).append(k)
        self._corners = corners

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def corner(self, origin: int, terminus: int) -> list[int]:
        """Positions of basis tensors whose left factor starts at ``origin``
        and whose right factor ends at ``terminus``."""
        return self._corners.get((origin, terminus), [])

    def __len__(self) -> int:
        return len(self.elements)


class BimoduleElement:
    """Sparse element of Q^n; stored terms are nonzero and vertex compatible."""

    __slots__ = ("algebra", "degree", "terms")

    def __init__(
        self,
        algebra: QuiverAlgebra,
        degree: int,
        terms: Mapping[TensorKey, Any] | None = None,
    ) -> None:
        s = algebra.s
        field = algebra.field
        kept: dict[TensorKey, Any] = {}
        for key, value in (terms or {}).items():
            g, left, right = key
            if g.n != degree:
                raise ValidationError(
                    f"Generator {g} does not belong to Q^{degree}", field="generator", value=g
                )
            if left.terminus(s) != g.i % s or right.vertex != g.terminus(s):
                raise ValidationError(
                    f"Term {left} {g} {right} is not vertex compatible",
                    field="term",
                    value=(str(left), str(g), str(right)),
                )
            scalar = field.element(value)
            if scalar:
                kept[key] = scalar
        self.algebra = algebra
        self.degree = degree
        self.terms = kept

    @classmethod
    def _trusted(
        cls, algebra: QuiverAlgebra, degree: int, terms: dict[TensorKey, Any]
    ) -> BimoduleElement:
        element = cls.__new__(cls)
        element.algebra = algebra
        element.degree = degree
        element.terms = {k: v for k, v in terms.items() if v}
        return element

    @classmethod
    def generator(cls, algebra: QuiverAlgebra, g: GeneratorIndex) -> BimoduleElement:
        """The generator b^n_{i,j} itself, i.e. e_i b e_{i+n}."""
        s = algebra.s
        key = (g, BasisElement(g.i % s, Word.ONE), BasisElement(g.terminus(s), Word.ONE))
        return cls(algebra, g.n, {key: 1})

    @classmethod
    def zero(cls, algebra: QuiverAlgebra, degree: int) -> BimoduleElement:
        return cls._trusted(algebra, degree, {})

    def _check(self, other: BimoduleElement) -> None:
        if other.algebra.key != self.algebra.key or other.degree != self.degree:
            raise IncompatibleOperandsError(
                "Cannot combine bimodule elements of different algebras or degrees",
                context={"left_degree": self.degree, "right_degree": other.degree},
            )

    def __add__(self, other: BimoduleElement) -> BimoduleElement:
        self._check(other)
        out = dict(self.terms)
        zero = self.algebra.field.zero
        for key, value in other.terms.items():
            out[key] = out.get(key, zero) + value
        return BimoduleElement._trusted(self.algebra, self.degree, out)

    def __neg__(self) -> BimoduleElement:
        return BimoduleElement._trusted(
            self.algebra, self.degree, {k: -v for k, v in self.terms.items()}
        )

    def __sub__(self, other: BimoduleElement) -> BimoduleElement:
        return self + (-other)

    def scale(self, c: Any) -> BimoduleElement:
        scalar = self.algebra.field.element(c)
        return BimoduleElement._trusted(
            self.algebra, self.degree, {k: scalar * v for k, v in self.terms.items()}
        )

    def sandwich(self, left: BasisElement, right: BasisElement) -> BimoduleElement:
        """The element left * self * right."""
        algebra = self.algebra
        zero = algebra.field.zero
        out: dict[TensorKey, Any] = {}
        for (g, lam, mu), value in self.terms.items():
            left_product = algebra.multiply_basis(left, lam)
            if left_product is None:
                continue
            right_product = algebra.multiply_basis(mu, right)
            if right_product is None:
                continue
            sign = left_product[0] * right_product[0]
            key = (g, left_product[1], right_product[1])
            out[key] = out.get(key, zero) + (value if sign > 0 else -value)
        return BimoduleElement._trusted(algebra, self.degree, out)

    def items(self) -> Iterator[tuple[TensorKey, Any]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def is_in_radical(self) -> bool:
        """True when every term has a left or right factor of positive degree."""
        return all(left.degree + right.degree >= 1 for _, left, right in self.terms)

    def coordinates(self, basis: TensorBasis) -> list[Any]:
        vector = [self.algebra.field.zero] * basis.dimension
        for key, value in self.terms.items():
            vector[basis.index[key]] = value
        return vector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BimoduleElement):
            return NotImplemented
        return (
            self.algebra.key == other.algebra.key
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 in Q^{self.degree}"
        fmt = self.algebra.field.format
        parts = [
            f"{fmt(v)}*({lam})({g})({mu})"
            for (g, lam, mu), v in sorted(
                self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].index, kv[0][2].index)
            )
        ]
        return " + ".join(parts)


class BimoduleMap:
    """Bimodule homomorphism Q^source -> Q^target given by generator images."""

    def __init__(
        self,
        algebra: QuiverAlgebra,
        source_degree: int,
        target_degree: int,
        images: Mapping[GeneratorIndex, BimoduleElement],
    ) -> None:
        for g, image in images.items():
            if g.n != source_degree:
                raise ValidationError(
                    f"Generator {g} is not in Q^{source_degree}", field="generator", value=g
                )
            if image.degree != target_degree:
                raise ValidationError(
                    f"Image of {g} lies in Q^{image.degree}, expected Q^{target_degree}",
                    field="image",
                    value=g,
                )
        self.algebra = algebra
        self.source_degree = source_degree
        self.target_degree = target_degree
        self.images: dict[GeneratorIndex, BimoduleElement] = {
            g: image for g, image in images.items() if not image.is_zero()
        }

    def image(self, g: GeneratorIndex) -> BimoduleElement:
        found = self.images.get(g)
        if found is None:
            return BimoduleElement.zero(self.algebra, self.target_degree)
        return found

    def apply(self, x: BimoduleElement) -> BimoduleElement:
        """Extend the generator images left and right linearly."""
        if x.degree != self.source_degree:
            raise IncompatibleOperandsError(
                f"Map from Q^{self.source_degree} applied to an element of Q^{x.degree}",
                context={"source_degree": self.source_degree, "element_degree": x.degree},
            )
        zero = self.algebra.field.zero
        out: dict[TensorKey, Any] = {}
        for (g, left, right), value in x.terms.items():
            image = self.images.get(g)
            if image is None:
                continue
            for key, coefficient in image.sandwich(left, right).terms.items():
                out[key] = out.get(key, zero) + value * coefficient
        return BimoduleElement._trusted(self.algebra, self.target_degree, out)

    def compose(self, inner: BimoduleMap) -> BimoduleMap:
        """The composite self o inner."""
        if inner.target_degree != self.source_degree:
            raise IncompatibleOperandsError(
                "Composite of non-adjacent bimodule maps",
                context={"inner_target": inner.target_degree, "outer_source": self.source_degree},
            )
        images = {g: self.apply(image) for g, image in inner.images.items()}
        return BimoduleMap(self.algebra, inner.source_degree, self.target_degree, images)

    def is_zero(self) -> bool:
        return not self.images

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BimoduleMap):
            return NotImplemented
        return (
            self.source_degree == other.source_degree
            and self.target_degree == other.target_degree
            and self.images == other.images
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"BimoduleMap(Q^{self.source_degree} -> Q^{self.target_degree}, "
            f"{len(self.images)} nonzero generator images)"
        )
