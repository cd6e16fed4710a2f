"""Finite universes and fuzzy sets with exact rational membership grades.

Grades are `fractions.Fraction` values in [0, 1]. Floats are rejected at
every entry point: decimal text is parsed exactly, so `min`, `max` and
complement stay on whatever grid k/D the input lived on. Sets are immutable
and hashable; all operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import (
    GradeOffGrid,
    LengthMismatch,
    UniverseMismatch,
    UnknownElement,
)

#: Default grid resolution: grades are multiples of 1/DEFAULT_GRID unless a
#: document or caller says otherwise.
DEFAULT_GRID = 10000

GradeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Universe:
    """Ordered finite universe of discourse. Element labels must be unique."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for i, label in enumerate(self.labels):
            if label in index:
                raise UnknownElement(f"duplicate element label {label!r}")
            index[label] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, labels: Iterable[str]) -> "Universe":
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"element {label!r} is not in the universe") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index


def parse_grade(value: GradeLike, grid: int | None = None, *, path: str | None = None) -> Fraction:
    """Turn a grade literal into an exact Fraction in [0, 1].

    Accepts Fraction, int, or text like "0.45", "1", "2/3". Floats are
    refused: binary floats do not represent decimal grades exactly. When
    `grid` is given the value must be an exact multiple of 1/grid.
    """
    if isinstance(value, bool):
        raise GradeOffGrid(f"grade must be a number or string, got {value!r}", path=path)
    if isinstance(value, float):
        raise GradeOffGrid(
            f"float grade {value!r} rejected; pass decimals as strings to keep them exact",
            path=path,
        )
    if isinstance(value, Fraction):
        q = value
    elif isinstance(value, int):
        q = Fraction(value)
    elif isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GradeOffGrid(f"cannot parse grade {value!r}", path=path) from None
    else:
        raise GradeOffGrid(f"grade must be a number or string, got {type(value).__name__}", path=path)
    if q < 0 or q > 1:
        raise GradeOffGrid(f"grade {q} outside [0, 1]", path=path)
    if grid is not None:
        if grid <= 0:
            raise GradeOffGrid(f"grid denominator must be positive, got {grid}", path=path)
        if (q * grid).denominator != 1:
            raise GradeOffGrid(f"grade {q} is not a multiple of 1/{grid}", path=path)
    return q


def format_grade(q: Fraction) -> str:
    """Render a grade as exact decimal text when possible, else as n/d."""
    n, d = q.numerator, q.denominator
    if d == 1:
        return str(n)
    # finite decimal expansion iff the denominator is 2^a * 5^b
    d2 = d
    exp = 0
    for p in (2, 5):
        while d2 % p == 0:
            d2 //= p
            exp += 1
    if d2 != 1:
        return f"{n}/{d}"
    # scale to 10^k
    k = 0
    scaled = Fraction(n, d)
    while scaled.denominator != 1:
        scaled *= 10
        k += 1
    digits = str(scaled.numerator).rjust(k + 1, "0")
    return f"{digits[:-k]}.{digits[-k:]}" if k else digits


@dataclass(frozen=True)
class FuzzySet:
    """A fuzzy subset of a finite universe, one exact grade per element."""

    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.universe):
            raise LengthMismatch(
                f"{len(self.values)} grades for a universe of {len(self.universe)} elements"
            )
        for v in self.values:
            if not isinstance(v, Fraction):
                raise GradeOffGrid(f"internal grade {v!r} is not a Fraction")
            if v < 0 or v > 1:
                raise GradeOffGrid(f"grade {v} outside [0, 1]")

    @classmethod
    def empty(cls, universe: Universe) -> "FuzzySet":
        return cls(universe, (ZERO,) * len(universe))

    @classmethod
    def whole(cls, universe: Universe) -> "FuzzySet":
        return cls(universe, (ONE,) * len(universe))

    def __call__(self, label: str) -> Fraction:
        return self.values[self.universe.index(label)]

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def _check_same_universe(self, other: "FuzzySet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch("fuzzy sets live on different universes")

    def union(self, other: "FuzzySet") -> "FuzzySet":
        """Pointwise max."""
        self._check_same_universe(other)
        return FuzzySet(self.universe, tuple(map(max, self.values, other.values)))

    def intersect(self, other: "FuzzySet") -> "FuzzySet":
        """Pointwise min."""
        self._check_same_universe(other)
        return FuzzySet(self.universe, tuple(map(min, self.values, other.values)))

    def complement(self) -> "FuzzySet":
        """Pointwise 1 - x. Exact: stays on the input's grid."""
        return FuzzySet(self.universe, tuple(ONE - v for v in self.values))

    def issubset(self, other: "FuzzySet") -> bool:
        """Pointwise <= on every element."""
        self._check_same_universe(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        return self.union(other)

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        return self.intersect(other)

    def __le__(self, other: "FuzzySet") -> bool:
        return self.issubset(other)

    def is_null(self) -> bool:
        return all(v == 0 for v in self.values)

    def support(self) -> frozenset[int]:
        """Indices with positive grade."""
        return frozenset(i for i, v in enumerate(self.values) if v > 0)

    def strict_cut(self, threshold: Fraction) -> frozenset[int]:
        """Indices whose grade strictly exceeds the threshold."""
        return frozenset(i for i, v in enumerate(self.values) if v > threshold)

    def cardinality(self) -> Fraction:
        """Scalar cardinality: the exact sum of all grades."""
        return sum(self.values, start=ZERO)

    def grid(self) -> int:
        """Least common denominator of the grades actually present."""
        return lcm(*(v.denominator for v in self.values)) if self.values else 1

    def describe(self) -> str:
        inner = ", ".join(
            f"{label}: {format_grade(v)}" for label, v in zip(self.universe.labels, self.values)
        )
        return "{" + inner + "}"


def make_fuzzy_set(
    universe: Universe,
    values: Sequence[GradeLike],
    grid: int | None = None,
    *,
    path: str | None = None,
) -> FuzzySet:
    """Build a fuzzy set from grade literals, validating length and grid."""
    if len(values) != len(universe):
        raise LengthMismatch(
            f"{len(values)} grades for a universe of {len(universe)} elements", path=path
        )
    parsed = tuple(
        parse_grade(v, grid, path=f"{path}[{i}]" if path else None) for i, v in enumerate(values)
    )
    return FuzzySet(universe, parsed)


def union_all(sets: Iterable[FuzzySet], universe: Universe | None = None) -> FuzzySet:
    """Pointwise max over a collection; the empty union is the null set."""
    result: FuzzySet | None = None
    for s in sets:
        result = s if result is None else result.union(s)
    if result is None:
        if universe is None:
            raise LengthMismatch("empty union needs an explicit universe")
        return FuzzySet.empty(universe)
    return result


def intersect_all(sets: Iterable[FuzzySet], universe: Universe | None = None) -> FuzzySet:
    """Pointwise min over a collection; the empty intersection is the whole universe."""
    result: FuzzySet | None = None
    for s in sets:
        result = s if result is None else result.intersect(s)
    if result is None:
        if universe is None:
            raise LengthMismatch("empty intersection needs an explicit universe")
        return FuzzySet.whole(universe)
    return result
