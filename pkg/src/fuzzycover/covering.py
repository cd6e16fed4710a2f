"""Fuzzy coverings: validation, neighborhoods, reduction, and lattice ops.

A fuzzy covering is a finite family of non-null fuzzy sets whose pointwise
max is positive at every element. Members are named; two members with equal
grade vectors are merged (the family is a set) and the merge is recorded.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    CoverageGap,
    DuplicateName,
    EmptyFamily,
    GridOverflow,
    MemberIndexError,
    NotCovered,
    NullMember,
    SizeGuard,
    UniverseMismatch,
    UnknownName,
)
from .sets import FuzzySet, Universe, intersect_all, union_all

#: Exhaustive subset enumeration refuses to run past this many members.
SUBSET_ENUMERATION_LIMIT = 20

#: Unioning coverings from different grids refuses to pass this denominator.
MAX_MERGED_GRID = 10**6


class FuzzyCovering:
    """Immutable named family of fuzzy sets that covers its universe.

    Duplicate grade vectors are merged on construction, keeping the first
    name; the dropped names are kept in `merged` as (kept, dropped) pairs
    so callers can surface a warning.
    """

    __slots__ = ("universe", "names", "members", "merged", "_neighborhoods", "_name_index")

    def __init__(self, universe: Universe, named_members: Iterable[tuple[str, FuzzySet]]):
        names: list[str] = []
        members: list[FuzzySet] = []
        merged: list[tuple[str, str]] = []
        seen: dict[tuple[Fraction, ...], int] = {}
        for name, member in named_members:
            if member.universe != universe:
                raise UniverseMismatch(f"member {name!r} lives on a different universe")
            if member.is_null():
                raise NullMember(f"member {name!r} is the null set")
            if name in names:
                raise DuplicateName(f"member name {name!r} appears twice")
            key = member.values
            if key in seen:
                merged.append((names[seen[key]], name))
                continue
            seen[key] = len(members)
            names.append(name)
            members.append(member)
        if not members:
            raise EmptyFamily("a covering needs at least one member")
        for i, label in enumerate(universe.labels):
            if all(m.values[i] == 0 for m in members):
                raise CoverageGap(f"no member is positive at {label!r}")
        self.universe = universe
        self.names = tuple(names)
        self.members = tuple(members)
        self.merged = tuple(merged)
        self._neighborhoods: tuple[FuzzySet, ...] | None = None
        self._name_index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(zip(self.names, self.members))

    def member(self, i: int) -> FuzzySet:
        if not 0 <= i < len(self.members):
            raise MemberIndexError(f"member index {i} out of range 0..{len(self.members) - 1}")
        return self.members[i]

    def member_named(self, name: str) -> FuzzySet:
        if name not in self._name_index:
            raise UnknownName(f"no member named {name!r}")
        return self.members[self._name_index[name]]

    def grid(self) -> int:
        """Least common grade denominator across all members."""
        return lcm(*(m.grid() for m in self.members))

    def neighborhoods(self) -> tuple[FuzzySet, ...]:
        """Neighborhood of every element, in element order.

        The neighborhood of x is the intersection of every member positive
        at x; the covering condition guarantees the pool is never empty, so
        each neighborhood is itself positive at its own element.
        """
        if self._neighborhoods is None:
            out = []
            for i in range(len(self.universe)):
                pool = [m for m in self.members if m.values[i] > 0]
                out.append(intersect_all(pool))
            self._neighborhoods = tuple(out)
        return self._neighborhoods

    def neighborhood(self, label: str) -> FuzzySet:
        return self.neighborhoods()[self.universe.index(label)]

    def vector_set(self) -> frozenset[tuple[Fraction, ...]]:
        return frozenset(m.values for m in self.members)

    def describe(self) -> str:
        return ", ".join(f"{n}={m.describe()}" for n, m in self)


def make_covering(
    universe: Universe,
    named_members: Iterable[tuple[str, FuzzySet]],
) -> FuzzyCovering:
    """Validate and build a covering; see FuzzyCovering for the rules."""
    return FuzzyCovering(universe, named_members)


def covering_equal(a: FuzzyCovering, b: FuzzyCovering) -> bool:
    """Equality as sets of grade vectors; names are presentation only."""
    if a.universe != b.universe:
        raise UniverseMismatch("coverings live on different universes")
    return a.vector_set() == b.vector_set()


def _neighborhood_name(label: str) -> str:
    return f"nbr({label})"


def induced_covering(c: FuzzyCovering) -> FuzzyCovering:
    """The covering formed by all neighborhoods, deduplicated in element order."""
    named = [
        (_neighborhood_name(label), nbhd)
        for label, nbhd in zip(c.universe.labels, c.neighborhoods())
    ]
    return FuzzyCovering(c.universe, named)


def subcoverings(
    c: FuzzyCovering,
    x: FuzzySet,
    limit: int = SUBSET_ENUMERATION_LIMIT,
) -> list[tuple[int, ...]]:
    """All member-index subsets whose union contains x, smallest first.

    Subsets are enumerated size-major, lexicographic within a size. Raises
    NotCovered when even the full covering misses x, and SizeGuard when the
    member count makes exhaustive enumeration unreasonable.
    """
    if x.universe != c.universe:
        raise UniverseMismatch("set lives on a different universe than the covering")
    if len(c) > limit:
        raise SizeGuard(f"{len(c)} members exceed the enumeration bound {limit}")
    if not x.issubset(union_all(c.members)):
        raise NotCovered("the covering does not contain the given set")
    found: list[tuple[int, ...]] = []
    indices = range(len(c))
    for size in range(1, len(c) + 1):
        for combo in combinations(indices, size):
            if x.issubset(union_all(c.members[i] for i in combo)):
                found.append(combo)
    return found


def minimal_subcoverings(c: FuzzyCovering, x: FuzzySet) -> list[tuple[int, ...]]:
    """Inclusion-minimal member subsets whose union contains x.

    Subsets are nonempty, matching the one-member floor on coverings, so
    the null set's minimal subcoverings are exactly the singletons.

    Depth-first over member indices, never materializing the full subset
    lattice: a branch closes as soon as its union covers x (any extension
    is a strict superset), and is cut when the remaining members cannot
    finish the job. Completed candidates still get the full one-out
    minimality check because an early member may have become redundant.
    """
    if x.universe != c.universe:
        raise UniverseMismatch("set lives on a different universe than the covering")
    n = len(c)
    members = c.members
    if not x.issubset(union_all(members)):
        raise NotCovered("the covering does not contain the given set")
    if x.is_null():
        return [(i,) for i in range(n)]

    suffix_union: list[FuzzySet] = [FuzzySet.empty(c.universe)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_union[i] = members[i].union(suffix_union[i + 1])

    out: list[tuple[int, ...]] = []

    def is_minimal(combo: tuple[int, ...]) -> bool:
        if len(combo) == 1:
            return True
        for drop in combo:
            rest = union_all(members[i] for i in combo if i != drop)
            if x.issubset(rest):
                return False
        return True

    def walk(i: int, chosen: tuple[int, ...], acc: FuzzySet) -> None:
        if x.issubset(acc):
            if chosen and is_minimal(chosen):
                out.append(chosen)
            return
        if i == n:
            return
        if not x.issubset(acc.union(suffix_union[i])):
            return
        walk(i + 1, chosen + (i,), acc.union(members[i]))
        walk(i + 1, chosen, acc)

    walk(0, (), FuzzySet.empty(c.universe))
    out.sort(key=lambda combo: (len(combo), combo))
    return out


def is_reducible(c: FuzzyCovering, i: int) -> bool:
    """True when member i is the union of other members.

    Equivalent test: i equals the union of every other member lying below
    it. Any witnessing subset sits inside that lower set, and the lower
    set's union never exceeds the member itself.
    """
    target = c.member(i)
    below = [m for j, m in enumerate(c.members) if j != i and m.issubset(target)]
    if not below:
        return False
    return union_all(below).values == target.values


def reduce_covering(c: FuzzyCovering) -> FuzzyCovering:
    """Remove reducible members until none remain (the reduct RED).

    One member is removed per round, the lexicographically smallest grade
    vector among the currently reducible ones, so the output order is
    deterministic; the fixpoint itself does not depend on the order.
    """
    names = list(c.names)
    members = list(c.members)
    while True:
        current = FuzzyCovering(c.universe, list(zip(names, members)))
        reducible = [i for i in range(len(members)) if is_reducible(current, i)]
        if not reducible:
            return current
        drop = min(reducible, key=lambda i: members[i].values)
        del names[drop]
        del members[drop]


def is_intersectional(c: FuzzyCovering, i: int) -> bool:
    """True when member i is the intersection of other members.

    Dual test to is_reducible: i equals the intersection of every other
    member lying above it.
    """
    target = c.member(i)
    above = [m for j, m in enumerate(c.members) if j != i and target.issubset(m)]
    if not above:
        return False
    return intersect_all(above).values == target.values


def intersection_core(c: FuzzyCovering) -> FuzzyCovering:
    """Remove intersectional members until none remain (the core IS).

    Mirror image of reduce_covering with the same deterministic removal
    order; supersets of a removed member keep the universe covered, so the
    result is always a valid covering.
    """
    names = list(c.names)
    members = list(c.members)
    while True:
        current = FuzzyCovering(c.universe, list(zip(names, members)))
        meets = [i for i in range(len(members)) if is_intersectional(current, i)]
        if not meets:
            return current
        drop = min(meets, key=lambda i: members[i].values)
        del names[drop]
        del members[drop]


def covering_union(
    a: FuzzyCovering,
    b: FuzzyCovering,
    max_grid: int = MAX_MERGED_GRID,
) -> FuzzyCovering:
    """Set union of the two member families, deduplicated.

    The merged family lives on the least common grade grid of the inputs;
    the merge is refused when that grid would exceed max_grid.
    """
    if a.universe != b.universe:
        raise UniverseMismatch("coverings live on different universes")
    merged_grid = lcm(a.grid(), b.grid())
    if merged_grid > max_grid:
        raise GridOverflow(
            f"combined grade grid 1/{merged_grid} is finer than the allowed 1/{max_grid}"
        )
    seen = {m.values for m in a.members}
    named = list(zip(a.names, a.members))
    taken = set(a.names)
    for name, member in b:
        if member.values in seen:
            continue
        fresh = name
        serial = 2
        while fresh in taken:
            fresh = f"{name}_{serial}"
            serial += 1
        named.append((fresh, member))
        taken.add(fresh)
        seen.add(member.values)
    return FuzzyCovering(a.universe, named)


def covering_intersection(a: FuzzyCovering, b: FuzzyCovering) -> FuzzyCovering:
    """Elementwise meet: the family of all nbr_a(x) & nbr_b(x), deduplicated.

    Coincides with the induced covering of the member-family union.
    """
    if a.universe != b.universe:
        raise UniverseMismatch("coverings live on different universes")
    na, nb = a.neighborhoods(), b.neighborhoods()
    named = [
        (_neighborhood_name(label), na[i].intersect(nb[i]))
        for i, label in enumerate(a.universe.labels)
    ]
    return FuzzyCovering(a.universe, named)


def is_coarser(fine: FuzzyCovering, coarse: FuzzyCovering) -> bool:
    """True when every member of `fine` lies below some member of `coarse`."""
    if fine.universe != coarse.universe:
        raise UniverseMismatch("coverings live on different universes")
    return all(any(m.issubset(big) for big in coarse.members) for m in fine.members)


class CoveringFamily:
    """An ordered collection of named coverings over one universe."""

    __slots__ = ("universe", "names", "coverings", "_name_index")

    def __init__(self, universe: Universe, named_coverings: Iterable[tuple[str, FuzzyCovering]]):
        names: list[str] = []
        coverings: list[FuzzyCovering] = []
        for name, covering in named_coverings:
            if covering.universe != universe:
                raise UniverseMismatch(f"covering {name!r} lives on a different universe")
            if name in names:
                raise DuplicateName(f"covering name {name!r} appears twice")
            names.append(name)
            coverings.append(covering)
        if not coverings:
            raise EmptyFamily("a family needs at least one covering")
        self.universe = universe
        self.names = tuple(names)
        self.coverings = tuple(coverings)
        self._name_index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.coverings)

    def __iter__(self):
        return iter(zip(self.names, self.coverings))

    def covering_named(self, name: str) -> FuzzyCovering:
        if name not in self._name_index:
            raise UnknownName(f"no covering named {name!r}")
        return self.coverings[self._name_index[name]]


def induced_family_covering(
    family: CoveringFamily, subset: Sequence[str] | None = None
) -> FuzzyCovering:
    """Covering of elementwise meets of per-covering neighborhoods.

    For each element x, intersect x's neighborhoods across the chosen
    coverings (all of them by default); deduplicate in element order.
    """
    from .errors import EmptySubset

    if subset is None:
        chosen = list(family.coverings)
    else:
        if not subset:
            raise EmptySubset("need at least one covering")
        chosen = [family.covering_named(name) for name in subset]
    per = [c.neighborhoods() for c in chosen]
    named = [
        (_neighborhood_name(label), intersect_all(nbhds[i] for nbhds in per))
        for i, label in enumerate(family.universe.labels)
    ]
    return FuzzyCovering(family.universe, named)
