from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from fuzzycover.covering import (
    FuzzyCovering,
    covering_equal,
    covering_intersection,
    covering_union,
    induced_covering,
    is_coarser,
)
from fuzzycover.errors import GridOverflow, UniverseMismatch
from fuzzycover.sets import FuzzySet, Universe

U3 = Universe.of(["x1", "x2", "x3"])

grade = st.integers(min_value=0, max_value=4).map(lambda k: Fraction(k, 4))
vector = st.tuples(grade, grade, grade)


def build(vectors):
    named = [(f"C{i + 1}", FuzzySet(U3, v)) for i, v in enumerate(vectors)]
    return FuzzyCovering(U3, named)


def coverings(max_members=3):
    # reject families with a null member or a coverage gap
    return (
        st.lists(vector, min_size=1, max_size=max_members)
        .filter(lambda rows: all(any(g > 0 for g in r) for r in rows))
        .filter(lambda rows: all(any(r[j] > 0 for r in rows) for j in range(3)))
        .map(build)
    )


@given(coverings(), coverings())
@settings(max_examples=150, deadline=None)
def test_union_commutes_and_meet_commutes(a, b):
    assert covering_equal(covering_union(a, b), covering_union(b, a))
    assert covering_equal(covering_intersection(a, b), covering_intersection(b, a))


@given(coverings(), coverings(), coverings())
@settings(max_examples=100, deadline=None)
def test_associativity(a, b, c):
    assert covering_equal(
        covering_union(covering_union(a, b), c),
        covering_union(a, covering_union(b, c)),
    )
    assert covering_equal(
        covering_intersection(covering_intersection(a, b), c),
        covering_intersection(a, covering_intersection(b, c)),
    )


@given(coverings())
@settings(max_examples=150, deadline=None)
def test_idempotence_and_self_order(a):
    assert covering_equal(covering_union(a, a), a)
    assert is_coarser(covering_intersection(a, a), a)


@given(coverings(), coverings())
@settings(max_examples=150, deadline=None)
def test_absorption_is_coarseness_not_equality(a, b):
    assert is_coarser(covering_union(a, covering_intersection(a, b)), a)
    assert is_coarser(covering_intersection(a, covering_union(a, b)), a)


@given(coverings(), coverings())
@settings(max_examples=150, deadline=None)
def test_meet_is_induced_union(a, b):
    met = covering_intersection(a, b)
    assert covering_equal(met, induced_covering(covering_union(a, b)))


def test_exhaustive_tiny_grid():
    # every covering with at most two distinct 0/1 members over two elements
    u = Universe.of(["x1", "x2"])
    vectors = [v for v in product([Fraction(0), Fraction(1)], repeat=2) if any(v)]
    singles = [
        FuzzyCovering(u, [("a", FuzzySet(u, v))]) for v in vectors if all(v)
    ]
    pairs = [
        FuzzyCovering(u, [("a", FuzzySet(u, v)), ("b", FuzzySet(u, w))])
        for v, w in combinations(vectors, 2)
        if all(max(p, q) > 0 for p, q in zip(v, w))
    ]
    everything = singles + pairs
    for a in everything:
        assert covering_equal(covering_union(a, a), a)
        assert is_coarser(covering_intersection(a, a), a)
        for b in everything:
            assert covering_equal(covering_union(a, b), covering_union(b, a))
            assert covering_equal(
                covering_intersection(a, b), covering_intersection(b, a)
            )
            assert is_coarser(covering_union(a, covering_intersection(a, b)), a)
            assert is_coarser(covering_intersection(a, covering_union(a, b)), a)
            for c in everything:
                assert covering_equal(
                    covering_union(covering_union(a, b), c),
                    covering_union(a, covering_union(b, c)),
                )
                assert covering_equal(
                    covering_intersection(covering_intersection(a, b), c),
                    covering_intersection(a, covering_intersection(b, c)),
                )


def test_union_renames_colliding_member():
    a = build([(Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(1))])
    b = build([(Fraction(1), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))])
    merged = covering_union(a, b)
    # both inputs use the names C1, C2; the late arrivals get a suffix
    assert merged.names == ("C1", "C2", "C1_2", "C2_2")
    assert len(merged) == 4


def test_union_drops_duplicate_vectors():
    a = build([(Fraction(1), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))])
    merged = covering_union(a, a)
    assert merged.names == ("C1", "C2")
    assert covering_equal(merged, a)


def test_union_refuses_oversized_grid():
    a = build([(Fraction(1), Fraction(1), Fraction(1))])
    b = build([(Fraction(1), Fraction(1, 3), Fraction(1))])
    with pytest.raises(GridOverflow):
        covering_union(a, b, max_grid=2)


def test_union_rejects_foreign_universe():
    other = Universe.of(["y1", "y2", "y3"])
    a = build([(Fraction(1), Fraction(1), Fraction(1))])
    b = FuzzyCovering(other, [("C1", FuzzySet(other, (Fraction(1), Fraction(1), Fraction(1))))])
    with pytest.raises(UniverseMismatch):
        covering_union(a, b)
    with pytest.raises(UniverseMismatch):
        covering_intersection(a, b)
    with pytest.raises(UniverseMismatch):
        is_coarser(a, b)


def test_coarser_is_a_preorder_here():
    a = build([(Fraction(1), Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1), Fraction(1))])
    b = build([(Fraction(1), Fraction(1), Fraction(1))])
    assert is_coarser(a, b)
    assert not is_coarser(b, a)
    assert is_coarser(a, a)


def test_family_meet_selects_named_subset():
    from fuzzycover.covering import CoveringFamily, induced_family_covering
    from fuzzycover.errors import EmptySubset

    a = build([(Fraction(1), Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1), Fraction(1))])
    b = build([(Fraction(1), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))])
    family = CoveringFamily(U3, [("a", a), ("b", b)])
    whole = induced_family_covering(family)
    assert covering_equal(whole, covering_intersection(a, b))
    assert covering_equal(induced_family_covering(family, ["a"]), induced_covering(a))
    with pytest.raises(EmptySubset):
        induced_family_covering(family, [])
