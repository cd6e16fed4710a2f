"""Fuzzy covering information systems: partitions, compression, reducts.

A system is a covering family over one universe. Its per-covering
partitions group elements with equal neighborhoods; the family partition
is their meet. Compression quotients the universe through a consistent
onto mapping and carries every covering to the image, where reducts can
be computed on a smaller system and pulled back by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .covering import (
    CoveringFamily,
    FuzzyCovering,
    covering_equal,
    induced_family_covering,
)
from .errors import (
    DuplicateName,
    EmptySubset,
    InternalInconsistency,
    LastCovering,
    SizeGuard,
    UniverseMismatch,
    UnknownName,
)
from .mapping import Partition, PointMapping, image_covering, is_consistent, meet_all
from .sets import Universe

#: Exhaustive reduct search refuses to run past this many coverings.
REDUCT_ENUMERATION_LIMIT = 20


def covering_partition(c: FuzzyCovering) -> Partition:
    """Elements grouped by equal neighborhoods."""
    nbhds = c.neighborhoods()
    return Partition.from_key(c.universe, lambda i: nbhds[i].values)


def profile_partition(c: FuzzyCovering) -> Partition:
    """Elements grouped by equal member-value profiles.

    The finest partition on which every member of c is constant; always
    refines covering_partition (equal profiles force equal neighborhoods).
    """
    return Partition.from_key(
        c.universe, lambda i: tuple(m.values[i] for m in c.members)
    )


def family_partition(family: CoveringFamily, subset: Sequence[str] | None = None) -> Partition:
    """Meet of the per-covering partitions (blockwise intersection)."""
    if subset is None:
        chosen = list(family.coverings)
    else:
        if not subset:
            raise EmptySubset("need at least one covering")
        chosen = [family.covering_named(n) for n in subset]
    return meet_all([covering_partition(c) for c in chosen])


def family_intersection(family: CoveringFamily, subset: Sequence[str] | None = None) -> FuzzyCovering:
    """Covering of elementwise meets of neighborhoods across the chosen coverings."""
    return induced_family_covering(family, subset)


@dataclass(frozen=True)
class PartitionTable:
    """Cached per-covering partitions plus their meets.

    `neighborhood` partitions follow neighborhood equality and drive the
    reported family partition; `profile` partitions follow member-value
    equality and drive compression. Incremental updates only ever touch
    the entry being added or removed and then re-meet the cached rest.
    """

    universe: Universe
    names: tuple[str, ...]
    neighborhood: tuple[Partition, ...]
    profile: tuple[Partition, ...]
    delta: Partition
    profile_delta: Partition

    @classmethod
    def from_family(cls, family: CoveringFamily) -> "PartitionTable":
        nparts = tuple(covering_partition(c) for c in family.coverings)
        pparts = tuple(profile_partition(c) for c in family.coverings)
        return cls(
            family.universe,
            family.names,
            nparts,
            pparts,
            meet_all(nparts),
            meet_all(pparts),
        )

    def partition_for(self, name: str) -> Partition:
        try:
            return self.neighborhood[self.names.index(name)]
        except ValueError:
            raise UnknownName(f"no covering named {name!r}") from None


@dataclass(frozen=True)
class CompressionResult:
    """A consistent onto mapping and the system it carries the family to."""

    mapping: PointMapping
    image: CoveringFamily
    #: Partition actually quotiented by (member-value profiles, blockwise meet).
    blocks: Partition
    #: Family partition per neighborhood equality; coarser or equal to blocks.
    delta: Partition
    #: (target label, source labels) per block, in target order.
    provenance: tuple[tuple[str, tuple[str, ...]], ...]
    #: True when blocks is strictly finer than delta, meaning the plain
    #: neighborhood quotient would not have been consistent.
    refined: bool


def build_homomorphism(
    family: CoveringFamily, table: Optional[PartitionTable] = None
) -> CompressionResult:
    """Quotient the system by the finest partition every member is constant on.

    Blocks are ordered by least source index and labeled y1..yK; every
    covering is carried over memberwise. Whenever members happen to be
    constant on the neighborhood-equality blocks, the quotient is exactly
    the family partition; otherwise the profile partition refines it so
    the mapping stays consistent. Consistency is re-verified and an
    inconsistent result would be an internal bug, not an input error.
    """
    if table is None:
        table = PartitionTable.from_family(family)
    blocks = table.profile_delta
    delta = table.delta
    target = Universe.of(f"y{k + 1}" for k in range(len(blocks.blocks)))
    image_ix = [0] * len(family.universe)
    for k, block in enumerate(blocks.blocks):
        for i in block:
            image_ix[i] = k
    mapping = PointMapping(family.universe, target, tuple(image_ix), strict=True)
    carried = []
    for name, covering in family:
        if not is_consistent(mapping, covering):
            raise InternalInconsistency(
                f"quotient mapping is not consistent with covering {name!r}"
            )
        carried.append((name, image_covering(mapping, covering)))
    image = CoveringFamily(target, carried)
    provenance = tuple(
        (target.labels[k], tuple(family.universe.labels[i] for i in block))
        for k, block in enumerate(blocks.blocks)
    )
    return CompressionResult(
        mapping, image, blocks, delta, provenance, refined=blocks.blocks != delta.blocks
    )


@dataclass(frozen=True)
class ReductReport:
    """Exhaustive reduct scan of a covering family."""

    #: Name subsets preserving the family intersection, none of whose
    #: proper subsets preserve it; each sorted by family order.
    reducts: tuple[tuple[str, ...], ...]
    #: Indispensable coverings: dropping any one changes the intersection.
    core: tuple[str, ...]
    #: Coverings whose single removal keeps the intersection.
    superfluous: tuple[str, ...]
    #: Names common to every reduct, for comparison against core.
    reduct_intersection: tuple[str, ...]
    core_matches_reduct_intersection: bool


def reduct_report(family: CoveringFamily, limit: int = REDUCT_ENUMERATION_LIMIT) -> ReductReport:
    """Scan all non-empty covering subsets for intersection-preserving ones.

    A reduct preserves the full family intersection while no proper subset
    of it does. Exhaustive by design; refuses families larger than `limit`.
    """
    names = family.names
    m = len(names)
    if m > limit:
        raise SizeGuard(f"{m} coverings exceed the enumeration bound {limit}")
    full = family_intersection(family)
    preserving: list[tuple[str, ...]] = []
    for size in range(1, m + 1):
        for combo in combinations(names, size):
            if covering_equal(family_intersection(family, combo), full):
                preserving.append(combo)
    preserving_sets = [frozenset(p) for p in preserving]
    reducts = tuple(
        p
        for p, ps in zip(preserving, preserving_sets)
        if not any(qs < ps for qs in preserving_sets)
    )
    if m == 1:
        superfluous: tuple[str, ...] = ()
    else:
        superfluous = tuple(
            name
            for name in names
            if frozenset(names) - {name} in preserving_sets
            or covering_equal(
                family_intersection(family, [n for n in names if n != name]), full
            )
        )
    core = tuple(n for n in names if n not in superfluous)
    common = set(names)
    for r in reducts:
        common &= set(r)
    reduct_intersection = tuple(n for n in names if n in common)
    return ReductReport(
        reducts,
        core,
        superfluous,
        reduct_intersection,
        core == reduct_intersection,
    )


def add_covering(
    family: CoveringFamily,
    table: PartitionTable,
    name: str,
    covering: FuzzyCovering,
) -> tuple[CoveringFamily, PartitionTable, CompressionResult]:
    """Extend the system by one covering, updating partitions incrementally.

    Only the new covering's partitions are computed; the cached ones are
    reused and the meets are extended by one step.
    """
    if covering.universe != family.universe:
        raise UniverseMismatch(f"covering {name!r} lives on a different universe")
    if name in family.names:
        raise DuplicateName(f"covering name {name!r} already present")
    new_family = CoveringFamily(family.universe, list(family) + [(name, covering)])
    nbhd = covering_partition(covering)
    prof = profile_partition(covering)
    new_table = PartitionTable(
        family.universe,
        new_family.names,
        table.neighborhood + (nbhd,),
        table.profile + (prof,),
        table.delta.meet(nbhd),
        table.profile_delta.meet(prof),
    )
    return new_family, new_table, build_homomorphism(new_family, new_table)


def remove_covering(
    family: CoveringFamily,
    table: PartitionTable,
    name: str,
) -> tuple[CoveringFamily, PartitionTable, CompressionResult]:
    """Drop one covering, re-meeting the remaining cached partitions.

    Per-covering partitions are never recomputed on removal; only the
    meets are rebuilt from the cache.
    """
    if name not in family.names:
        raise UnknownName(f"no covering named {name!r}")
    if len(family) == 1:
        raise LastCovering("cannot remove the only covering")
    keep = [k for k, n in enumerate(family.names) if n != name]
    new_family = CoveringFamily(
        family.universe, [(family.names[k], family.coverings[k]) for k in keep]
    )
    nparts = tuple(table.neighborhood[k] for k in keep)
    pparts = tuple(table.profile[k] for k in keep)
    new_table = PartitionTable(
        family.universe,
        new_family.names,
        nparts,
        pparts,
        meet_all(list(nparts)),
        meet_all(list(pparts)),
    )
    return new_family, new_table, build_homomorphism(new_family, new_table)
