"""Point mappings between universes, consistency, and image machinery.

Images of fuzzy sets follow the extension principle (max over the fiber);
preimages compose with the map. A mapping is consistent with a covering
when every member is constant on each fiber of the map, which is exactly
when images and preimages lose no information.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .covering import FuzzyCovering
from .errors import (
    LengthMismatch,
    NotSurjective,
    UnknownElement,
    UniverseMismatch,
)
from .sets import ZERO, FuzzySet, Universe


@dataclass(frozen=True)
class Partition:
    """Blocks of element indices, each sorted, ordered by least member."""

    universe: Universe
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(i for b in self.blocks for i in b)
        if seen != list(range(len(self.universe))):
            raise LengthMismatch("blocks must partition the universe exactly")

    @classmethod
    def from_key(cls, universe: Universe, key) -> "Partition":
        """Group elements by key(index); blocks come out in least-index order."""
        groups: dict = {}
        for i in range(len(universe)):
            groups.setdefault(key(i), []).append(i)
        blocks = sorted((tuple(g) for g in groups.values()), key=lambda b: b[0])
        return cls(universe, tuple(blocks))

    @classmethod
    def discrete(cls, universe: Universe) -> "Partition":
        return cls(universe, tuple((i,) for i in range(len(universe))))

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise UnknownElement(f"index {i} outside the universe")

    def block_index(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise UnknownElement(f"index {i} outside the universe")

    def meet(self, other: "Partition") -> "Partition":
        """Coarsest common refinement."""
        if self.universe != other.universe:
            raise UniverseMismatch("partitions live on different universes")
        mine = {i: k for k, b in enumerate(self.blocks) for i in b}
        theirs = {i: k for k, b in enumerate(other.blocks) for i in b}
        return Partition.from_key(self.universe, lambda i: (mine[i], theirs[i]))

    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def label_blocks(self) -> tuple[tuple[str, ...], ...]:
        labels = self.universe.labels
        return tuple(tuple(labels[i] for i in b) for b in self.blocks)

    def describe(self) -> str:
        return " | ".join("{" + ", ".join(b) + "}" for b in self.label_blocks())


def meet_all(parts: Sequence[Partition]) -> Partition:
    result = parts[0]
    for p in parts[1:]:
        result = result.meet(p)
    return result


@dataclass(frozen=True)
class PointMapping:
    """A map between universes given by the target index of every source element.

    strict mappings must be surjective; that is what image_covering and the
    compression pipeline require. Generic non-surjective maps are allowed
    with strict=False (images then take grade 0 on targets with empty fiber).
    """

    source: Universe
    target: Universe
    image: tuple[int, ...]
    strict: bool = True
    _fibers: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.image) != len(self.source):
            raise LengthMismatch("need one target index per source element")
        for t in self.image:
            if not 0 <= t < len(self.target):
                raise UnknownElement(f"target index {t} outside the target universe")
        fibers = tuple(
            tuple(i for i, t in enumerate(self.image) if t == j)
            for j in range(len(self.target))
        )
        if self.strict and any(not f for f in fibers):
            missing = [self.target.labels[j] for j, f in enumerate(fibers) if not f]
            raise NotSurjective(f"no source element maps to {', '.join(missing)}")
        object.__setattr__(self, "_fibers", fibers)

    @classmethod
    def from_pairs(
        cls,
        source: Universe,
        target: Universe,
        pairs: Iterable[tuple[str, str]],
        strict: bool = True,
    ) -> "PointMapping":
        assigned: dict[int, int] = {}
        for s, t in pairs:
            i = source.index(s)
            if i in assigned:
                raise LengthMismatch(f"source element {s!r} mapped twice")
            assigned[i] = target.index(t)
        if len(assigned) != len(source):
            missing = [l for l in source.labels if source.index(l) not in assigned]
            raise LengthMismatch(f"unmapped source elements: {', '.join(missing)}")
        return cls(source, target, tuple(assigned[i] for i in range(len(source))), strict)

    def __call__(self, label: str) -> str:
        return self.target.labels[self.image[self.source.index(label)]]

    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            (s, self.target.labels[t]) for s, t in zip(self.source.labels, self.image)
        )

    def fiber(self, j: int) -> tuple[int, ...]:
        return self._fibers[j]


def kernel_partition(f: PointMapping) -> Partition:
    """Source elements grouped by shared image."""
    return Partition.from_key(f.source, lambda i: f.image[i])


def is_consistent(f: PointMapping, c: FuzzyCovering) -> bool:
    """True when every member of c is constant on every fiber of f."""
    if c.universe != f.source:
        raise UniverseMismatch("covering lives on a universe the mapping does not start from")
    for m in c.members:
        for fiber in f._fibers:
            if len(fiber) > 1:
                first = m.values[fiber[0]]
                if any(m.values[i] != first for i in fiber[1:]):
                    return False
    return True


def image_set(f: PointMapping, s: FuzzySet) -> FuzzySet:
    """Extension-principle image: grade at y is the max of s over the fiber of y."""
    if s.universe != f.source:
        raise UniverseMismatch("set lives on a universe the mapping does not start from")
    values = tuple(
        max((s.values[i] for i in fiber), default=ZERO) for fiber in f._fibers
    )
    return FuzzySet(f.target, values)


def preimage_set(f: PointMapping, t: FuzzySet) -> FuzzySet:
    """Composition t(f(x)); exact and grid-preserving."""
    if t.universe != f.target:
        raise UniverseMismatch("set lives on a universe the mapping does not land in")
    return FuzzySet(f.source, tuple(t.values[j] for j in f.image))


def image_covering(f: PointMapping, c: FuzzyCovering) -> FuzzyCovering:
    """Memberwise image; needs a surjective mapping to stay a covering."""
    if c.universe != f.source:
        raise UniverseMismatch("covering lives on a universe the mapping does not start from")
    if any(not fiber for fiber in f._fibers):
        raise NotSurjective("image covering needs a surjective mapping")
    return FuzzyCovering(f.target, [(f"f({n})", image_set(f, m)) for n, m in c])


def preimage_covering(f: PointMapping, c: FuzzyCovering) -> FuzzyCovering:
    """Memberwise preimage of a covering on the target."""
    if c.universe != f.target:
        raise UniverseMismatch("covering lives on a universe the mapping does not land in")
    return FuzzyCovering(f.source, [(f"f^-1({n})", preimage_set(f, m)) for n, m in c])
