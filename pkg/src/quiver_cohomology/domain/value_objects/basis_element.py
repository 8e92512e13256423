"""Canonical basis elements of the algebra: a vertex idempotent times a word."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Word(str, Enum):
    """Normal-form words in x and y; yx is rewritten as -xy."""

    ONE = "1"
    X = "x"
    Y = "y"
    XY = "xy"

    @property
    def degree(self) -> int:
        return len(self.value) if self is not Word.ONE else 0

    @property
    def position(self) -> int:
        """Offset of the word inside the four basis elements of a vertex."""
        return _POSITIONS[self]

    @classmethod
    def of_degree(cls, degree: int) -> tuple[Word, ...]:
        return tuple(w for w in cls if w.degree == degree)


_POSITIONS = {Word.ONE: 0, Word.X: 1, Word.Y: 2, Word.XY: 3}


@dataclass(frozen=True, slots=True)
class BasisElement:
    """The basis element e_vertex * word of the algebra.

    The element starts at ``vertex`` and ends at ``vertex + degree`` (mod s).
    Canonical order is vertex-major, then word position; sort by ``index``.
    """

    vertex: int
    word: Word

    @property
    def degree(self) -> int:
        return self.word.degree

    @property
    def index(self) -> int:
        return 4 * self.vertex + self.word.position

    def origin(self) -> int:
        return self.vertex

    def terminus(self, s: int) -> int:
        return (self.vertex + self.degree) % s

    def __str__(self) -> str:
        if self.word is Word.ONE:
            return f"e{self.vertex}"
        return f"e{self.vertex}{self.word.value}"
