"""Uniform elements g^n_{i,j} of the path algebra with their word expansions."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex


@dataclass(frozen=True)
class GElement:
    """A sum of length-n paths starting at vertex i, each with exactly j letters x.

    ``expansion`` maps a word over {x, y} (read left to right, "" for e_i)
    to its coefficient in the path algebra; absent words have coefficient 0.
    """

    n: int
    i: int
    j: int
    expansion: dict[str, int] = field(default_factory=dict)

    @property
    def index(self) -> GeneratorIndex:
        return GeneratorIndex(self.n, self.i, self.j)

    def origin(self) -> int:
        return self.i

    def terminus(self, s: int) -> int:
        return (self.i + self.n) % s

    def words(self) -> list[str]:
        return sorted(w for w, c in self.expansion.items() if c)

    def has_uniform_endpoints(self) -> bool:
        """Every word is a path of length n, so it runs from e_i to e_{i+n}."""
        return all(len(w) == self.n for w, c in self.expansion.items() if c)

    def is_full_binomial(self) -> bool:
        """True when the expansion is the sum of all C(n, j) words with j letters x."""
        support = {w: c for w, c in self.expansion.items() if c}
        if len(support) != comb(self.n, self.j):
            return False
        return all(
            c == 1 and len(w) == self.n and w.count("x") == self.j for w, c in support.items()
        )

    def without_word(self, word: str) -> GElement:
        """Copy with one word removed."""
        return GElement(
            self.n, self.i, self.j, {w: c for w, c in self.expansion.items() if w != word}
        )

    def __str__(self) -> str:
        return f"g^{self.n}_{{{self.i},{self.j}}}"
