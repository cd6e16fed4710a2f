from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fuzzycover.errors import GradeOffGrid, LengthMismatch, UnknownElement
from fuzzycover.sets import (
    FuzzySet,
    Universe,
    format_grade,
    intersect_all,
    make_fuzzy_set,
    parse_grade,
    union_all,
)

U4 = Universe.of(["x1", "x2", "x3", "x4"])

grades = st.integers(min_value=0, max_value=10).map(lambda k: Fraction(k, 10))
vectors = st.tuples(grades, grades, grades, grades)


def fs(vec):
    return FuzzySet(U4, tuple(vec))


def test_parse_grade_exact():
    assert parse_grade("0.45") == Fraction(9, 20)
    assert parse_grade("2/3") == Fraction(2, 3)
    assert parse_grade(1) == 1
    assert parse_grade(Fraction(1, 4)) == Fraction(1, 4)


def test_parse_grade_rejects_floats_and_bounds():
    with pytest.raises(GradeOffGrid):
        parse_grade(0.5)
    with pytest.raises(GradeOffGrid):
        parse_grade(True)
    with pytest.raises(GradeOffGrid):
        parse_grade("1.5")
    with pytest.raises(GradeOffGrid):
        parse_grade("-0.1")
    with pytest.raises(GradeOffGrid):
        parse_grade("zebra")


def test_parse_grade_grid():
    assert parse_grade("0.3", grid=10) == Fraction(3, 10)
    with pytest.raises(GradeOffGrid):
        parse_grade("0.35", grid=10)
    with pytest.raises(GradeOffGrid):
        parse_grade("1/3", grid=10000)


def test_format_grade_round_trip():
    for text in ["0", "1", "0.5", "0.45", "0.0001"]:
        assert format_grade(parse_grade(text)) in (text, text.rstrip("0").rstrip("."))
    assert format_grade(Fraction(1, 3)) == "1/3"
    assert parse_grade(format_grade(Fraction(1, 3))) == Fraction(1, 3)


def test_universe_basics():
    assert len(U4) == 4
    assert U4.index("x3") == 2
    with pytest.raises(UnknownElement):
        U4.index("x9")
    with pytest.raises(Exception):
        Universe.of(["a", "a"])


def test_fuzzy_set_validation():
    with pytest.raises(LengthMismatch):
        make_fuzzy_set(U4, ["0.1", "0.2"])
    with pytest.raises(GradeOffGrid):
        make_fuzzy_set(U4, ["0.1", "0.2", "0.3", "1.2"])


def test_lookup_and_cuts():
    x = make_fuzzy_set(U4, ["0.2", "0", "0.5", "1"])
    assert x("x3") == Fraction(1, 2)
    assert x[0] == Fraction(1, 5)
    assert x.support() == frozenset({0, 2, 3})
    assert x.strict_cut(Fraction(1, 2)) == frozenset({3})
    assert x.cardinality() == Fraction(17, 10)
    assert not x.is_null()
    assert FuzzySet.empty(U4).is_null()


@given(vectors, vectors)
def test_union_intersect_pointwise(a, b):
    xa, xb = fs(a), fs(b)
    assert xa.union(xb).values == tuple(max(p, q) for p, q in zip(a, b))
    assert xa.intersect(xb).values == tuple(min(p, q) for p, q in zip(a, b))
    assert xa.union(xb).values == xb.union(xa).values
    assert xa.intersect(xb).values == xb.intersect(xa).values


@given(vectors)
def test_complement_involution(a):
    x = fs(a)
    assert x.complement().complement().values == x.values
    assert x.union(x).values == x.values
    assert x.intersect(x).values == x.values


@given(vectors, vectors)
def test_de_morgan(a, b):
    xa, xb = fs(a), fs(b)
    assert xa.union(xb).complement().values == xa.complement().intersect(xb.complement()).values
    assert xa.intersect(xb).complement().values == xa.complement().union(xb.complement()).values


@given(vectors, vectors)
def test_subset_order(a, b):
    xa, xb = fs(a), fs(b)
    assert xa.intersect(xb) <= xa <= xa.union(xb)
    if xa <= xb and xb <= xa:
        assert xa.values == xb.values


def test_operator_aliases():
    a = make_fuzzy_set(U4, ["0.2", "0", "0.5", "1"])
    b = make_fuzzy_set(U4, ["0.1", "0.3", "0.5", "0"])
    assert (a | b).values == a.union(b).values
    assert (a & b).values == a.intersect(b).values


def test_cross_universe_rejected():
    other = Universe.of(["y1", "y2", "y3", "y4"])
    a = make_fuzzy_set(U4, ["0.1", "0.1", "0.1", "0.1"])
    b = make_fuzzy_set(other, ["0.1", "0.1", "0.1", "0.1"])
    with pytest.raises(Exception):
        a.union(b)


def test_empty_fold_conventions():
    assert union_all([], universe=U4).is_null()
    assert intersect_all([], universe=U4).values == FuzzySet.whole(U4).values
    with pytest.raises(LengthMismatch):
        union_all([])
    with pytest.raises(LengthMismatch):
        intersect_all([])


def test_grid_of_values():
    x = make_fuzzy_set(U4, ["0.2", "0.25", "0", "1"])
    assert x.grid() == 20
