from fractions import Fraction

import pytest

from fuzzycover.covering import (
    CoveringFamily,
    FuzzyCovering,
    covering_equal,
    induced_covering,
    is_intersectional,
    is_reducible,
    intersection_core,
    minimal_subcoverings,
    reduce_covering,
    subcoverings,
)
from fuzzycover.errors import (
    CoverageGap,
    DuplicateName,
    EmptyFamily,
    MemberIndexError,
    NotCovered,
    NullMember,
    SizeGuard,
    UniverseMismatch,
    UnknownName,
)
from fuzzycover.sets import FuzzySet, Universe, make_fuzzy_set

U = Universe.of(["x1", "x2", "x3", "x4"])


def cov(*rows, names=None):
    names = names or [f"C{i + 1}" for i in range(len(rows))]
    return FuzzyCovering(
        U, [(n, make_fuzzy_set(U, r.split())) for n, r in zip(names, rows)]
    )


def test_construction_validates():
    with pytest.raises(CoverageGap):
        cov("0.5 0 0 0", "0.5 0.5 0.5 0")
    with pytest.raises(NullMember):
        cov("1 1 1 1", "0 0 0 0")
    with pytest.raises(EmptyFamily):
        FuzzyCovering(U, [])
    with pytest.raises(DuplicateName):
        cov("1 1 1 1", "0.5 1 1 1", names=["a", "a"])
    other = Universe.of(["y1"])
    with pytest.raises(UniverseMismatch):
        FuzzyCovering(U, [("a", FuzzySet(other, (Fraction(1),)))])


def test_duplicate_vectors_merge():
    c = cov("0.5 0.5 1 1", "0.5 0.5 1 1", "1 0 0 1")
    assert len(c) == 2
    assert c.merged == (("C1", "C2"),)
    assert c.names == ("C1", "C3")


def test_member_access():
    c = cov("1 1 0.5 0.5", "0.5 0.5 1 1")
    assert c.member(1).values == c.member_named("C2").values
    with pytest.raises(MemberIndexError):
        c.member(5)
    with pytest.raises(UnknownName):
        c.member_named("missing")


def test_neighborhood_definition():
    c = cov("1 0.5 1 0.5", "0.5 0.6 0.5 0.6", "0 0.5 0 0.5")
    # intersection of exactly the members positive at the element
    assert c.neighborhood("x1").values == tuple(Fraction(1, 2) for _ in range(4))
    assert c.neighborhood("x2").values == (
        Fraction(0),
        Fraction(1, 2),
        Fraction(0),
        Fraction(1, 2),
    )
    with pytest.raises(Exception):
        c.neighborhood("zebra")


def test_singleton_covering_neighborhood():
    c = cov("0.3 0.4 0.1 1")
    for label in U.labels:
        assert c.neighborhood(label).values == c.member(0).values


def test_induced_covering_idempotent():
    c = cov("0.2 0.4 0.5 0", "0.1 0.1 0.2 0", "0.1 0 0.4 0.5")
    ind = induced_covering(c)
    assert covering_equal(induced_covering(ind), ind)


def test_covering_equal_ignores_names_and_order():
    a = cov("1 1 0.5 0.5", "0.5 0.5 1 1")
    b = cov("0.5 0.5 1 1", "1 1 0.5 0.5", names=["p", "q"])
    assert covering_equal(a, b)
    other = Universe.of(["y1", "y2", "y3", "y4"])
    c = FuzzyCovering(
        other, [("a", FuzzySet(other, tuple(Fraction(1) for _ in range(4))))]
    )
    with pytest.raises(UniverseMismatch):
        covering_equal(a, c)


def test_subcoverings_order_and_guard():
    c = cov("0.2 0.1 0.2 0.1", "0.1 0.2 0.1 0.2", "0.1 0.1 0.2 0.1")
    x = make_fuzzy_set(U, "0.1 0 0.2 0".split())
    assert subcoverings(c, x) == [(0,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    assert minimal_subcoverings(c, x) == [(0,), (2,)]
    outside = make_fuzzy_set(U, "1 1 1 1".split())
    with pytest.raises(NotCovered):
        subcoverings(c, outside)
    with pytest.raises(SizeGuard):
        subcoverings(c, x, limit=2)


def test_null_set_subcoverings_are_singletons():
    c = cov("0.2 0.1 0.2 0.1", "0.1 0.2 0.1 0.2")
    null = FuzzySet.empty(U)
    assert minimal_subcoverings(c, null) == [(0,), (1,)]
    assert subcoverings(c, null) == [(0,), (1,), (0, 1)]


def test_reducible_and_core():
    c = cov("0.2 0.1 0.1 0.1", "0.1 0.2 0.1 0.1", "0.2 0.2 0.1 0.1")
    assert is_reducible(c, 2)
    assert not is_reducible(c, 0)
    red = reduce_covering(c)
    assert red.vector_set() == {c.member(0).values, c.member(1).values}
    assert covering_equal(reduce_covering(red), red)

    d = cov("0.2 0.1 0.1 0.1", "0.1 0.2 0.1 0.1", "0.1 0.1 0.1 0.1")
    assert is_intersectional(d, 2)
    core = intersection_core(d)
    assert core.vector_set() == {d.member(0).values, d.member(1).values}
    assert covering_equal(intersection_core(core), core)


def test_family_lookup():
    c1 = cov("1 1 1 1")
    family = CoveringFamily(U, [("only", c1)])
    assert family.covering_named("only") is c1
    with pytest.raises(UnknownName):
        family.covering_named("other")
    with pytest.raises(EmptyFamily):
        CoveringFamily(U, [])
