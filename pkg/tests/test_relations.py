from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuzzycover.covering import FuzzyCovering, covering_equal, induced_covering
from fuzzycover.errors import CoverageGap, LengthMismatch, NullMember
from fuzzycover.relations import (
    FuzzyRelation,
    covering_from_relation,
    relation_checks,
    relation_from_neighborhoods,
)
from fuzzycover.sets import FuzzySet, Universe

U3 = Universe.of(["x1", "x2", "x3"])

grade = st.integers(min_value=0, max_value=10).map(lambda k: Fraction(k, 10))


def rel(*rows):
    return FuzzyRelation(U3, tuple(tuple(Fraction(v) for v in r) for r in rows))


def cov(*rows, names=None):
    named = [
        (names[i] if names else f"C{i + 1}", FuzzySet(U3, tuple(Fraction(v) for v in r)))
        for i, r in enumerate(rows)
    ]
    return FuzzyCovering(U3, named)


def test_relation_shape_is_validated():
    with pytest.raises(LengthMismatch):
        FuzzyRelation(U3, ((Fraction(1), Fraction(0)),) * 3)
    with pytest.raises(LengthMismatch):
        FuzzyRelation(U3, ((Fraction(1), Fraction(0), Fraction(0)),) * 2)


def test_lookup_by_labels():
    r = rel([1, "1/2", 0], [0, 1, "3/10"], [0, 0, 1])
    assert r("x1", "x2") == Fraction(1, 2)
    assert r("x2", "x3") == Fraction(3, 10)
    assert r.row_set(0).values == (Fraction(1), Fraction(1, 2), Fraction(0))


def test_rows_become_members():
    r = rel([1, "1/2", 0], ["1/2", 1, 0], [0, 0, 1])
    c = covering_from_relation(r)
    assert c.names == ("row(x1)", "row(x2)", "row(x3)")
    assert c.member_named("row(x3)").values == (Fraction(0), Fraction(0), Fraction(1))


def test_duplicate_rows_merge():
    r = rel([1, 1, 0], [1, 1, 0], [0, 0, 1])
    c = covering_from_relation(r)
    assert len(c) == 2
    assert c.merged == (("row(x1)", "row(x2)"),)


def test_zero_row_and_zero_column_are_rejected():
    with pytest.raises(NullMember):
        covering_from_relation(rel([1, 1, 1], [0, 0, 0], [1, 1, 1]))
    with pytest.raises(CoverageGap):
        covering_from_relation(rel([1, 0, 0], ["1/2", 1, 0], [1, 0, 0]))


def test_neighborhood_relation_alpha_is_min_diagonal():
    c = cov(["1/2", "2/5", 0], [0, "2/5", 1], ["1/2", 0, 1])
    nr = relation_from_neighborhoods(c)
    diag = [nr.relation.rows[i][i] for i in range(3)]
    assert nr.alpha == min(diag)
    assert nr.alpha > 0
    facts = relation_checks(nr.relation)
    assert facts.alpha_reflexive == nr.alpha


def test_neighborhood_relation_rows_are_neighborhoods():
    c = cov([1, "1/2", 0], [0, 1, "1/2"], ["1/2", 0, 1])
    nr = relation_from_neighborhoods(c)
    for i in range(3):
        assert nr.relation.rows[i] == c.neighborhoods()[i].values


@given(st.lists(st.tuples(grade, grade, grade), min_size=1, max_size=4))
@settings(max_examples=300, deadline=None)
def test_neighborhood_relation_is_min_transitive(rows):
    # keep only families that actually cover and have no null member
    if not all(any(g > 0 for g in r) for r in rows):
        return
    if not all(any(r[j] > 0 for r in rows) for j in range(3)):
        return
    c = FuzzyCovering(U3, [(f"C{i}", FuzzySet(U3, v)) for i, v in enumerate(rows)])
    nr = relation_from_neighborhoods(c)
    facts = relation_checks(nr.relation)
    assert facts.min_transitive
    assert facts.alpha_reflexive is not None


def test_round_trip_through_rows_is_the_induced_covering():
    c = cov([1, "1/2", 0], [0, 1, "1/2"], ["1/2", 0, 1])
    nr = relation_from_neighborhoods(c)
    back = covering_from_relation(nr.relation)
    assert covering_equal(back, induced_covering(c))


def test_neighborhood_relation_need_not_be_symmetric():
    u = Universe.of(["x1", "x2"])
    c = FuzzyCovering(
        u,
        [
            ("C1", FuzzySet(u, (Fraction(1), Fraction(1)))),
            ("C2", FuzzySet(u, (Fraction(0), Fraction(1)))),
        ],
    )
    nr = relation_from_neighborhoods(c)
    assert nr.relation("x1", "x2") == Fraction(1)
    assert nr.relation("x2", "x1") == Fraction(0)
    assert not relation_checks(nr.relation).symmetric


def test_checks_on_a_plain_relation():
    r = rel([1, "1/2", "1/2"], ["1/2", 1, "1/2"], ["1/2", "1/2", 1])
    facts = relation_checks(r)
    assert facts.reflexive
    assert facts.symmetric
    assert facts.min_transitive
    assert facts.alpha_reflexive == Fraction(1)

    broken = rel([0, 1, 1], [1, 1, 1], [1, 1, 1])
    assert relation_checks(broken).alpha_reflexive is None
    assert not relation_checks(broken).reflexive

    not_trans = rel([1, 1, 0], [0, 1, 1], [0, 0, 1])
    assert not relation_checks(not_trans).min_transitive
