"""Bridge between fuzzy coverings and fuzzy binary relations.

A relation's rows, read as fuzzy sets, form a covering when every column
has a positive entry; conversely the neighborhood operator of a covering
induces a relation R(x, y) = nbr(x)(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .covering import FuzzyCovering
from .errors import LengthMismatch
from .sets import FuzzySet, Universe


@dataclass(frozen=True)
class FuzzyRelation:
    """Square matrix of exact grades over one universe, stored by rows."""

    universe: Universe
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise LengthMismatch(f"relation matrix must be {n}x{n}")

    def __call__(self, a: str, b: str) -> Fraction:
        return self.rows[self.universe.index(a)][self.universe.index(b)]

    def row_set(self, i: int) -> FuzzySet:
        return FuzzySet(self.universe, self.rows[i])


def covering_from_relation(r: FuzzyRelation) -> FuzzyCovering:
    """Rows as members, deduplicated; the usual covering validation applies.

    An all-zero row raises NullMember, an all-zero column CoverageGap.
    """
    named = [
        (f"row({label})", r.row_set(i))
        for i, label in enumerate(r.universe.labels)
    ]
    return FuzzyCovering(r.universe, named)


@dataclass(frozen=True)
class NeighborhoodRelation:
    relation: FuzzyRelation
    #: Smallest self-degree min over x of R(x, x); always positive here.
    alpha: Fraction


def relation_from_neighborhoods(c: FuzzyCovering) -> NeighborhoodRelation:
    """R(x, y) := nbr(x)(y), with the guaranteed reflexivity level alpha."""
    nbhds = c.neighborhoods()
    rows = tuple(n.values for n in nbhds)
    alpha = min(nbhds[i].values[i] for i in range(len(c.universe)))
    return NeighborhoodRelation(FuzzyRelation(c.universe, rows), alpha)


@dataclass(frozen=True)
class RelationChecks:
    """Structural facts about a relation, each computed independently."""

    #: Largest alpha with R(x, x) >= alpha everywhere; None when a diagonal is 0.
    alpha_reflexive: Optional[Fraction]
    reflexive: bool
    symmetric: bool
    min_transitive: bool


def relation_checks(r: FuzzyRelation) -> RelationChecks:
    n = len(r.universe)
    diag = [r.rows[i][i] for i in range(n)]
    alpha = min(diag)
    checks_alpha = alpha if alpha > 0 else None
    reflexive = all(d == 1 for d in diag)
    symmetric = all(r.rows[i][j] == r.rows[j][i] for i in range(n) for j in range(i + 1, n))
    transitive = all(
        min(r.rows[i][k], r.rows[k][j]) <= r.rows[i][j]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )
    return RelationChecks(checks_alpha, reflexive, symmetric, transitive)
