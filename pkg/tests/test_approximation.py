from fractions import Fraction

import pytest

from fuzzycover.approximation import (
    approximate,
    lower_approx,
    neighborhood_union,
    roughness,
    roughness_ab,
    roughness_report,
    subcovering_bound,
    upper_approx,
)
from fuzzycover.covering import FuzzyCovering
from fuzzycover.errors import DegenerateCut
from fuzzycover.sets import FuzzySet, Universe, make_fuzzy_set

U = Universe.of(["x1", "x2", "x3", "x4"])


def cov(*rows):
    return FuzzyCovering(
        U, [(f"C{i + 1}", make_fuzzy_set(U, r.split())) for i, r in enumerate(rows)]
    )


def fz(row):
    return make_fuzzy_set(U, row.split())


MAIN = cov("0.2 0.4 0.5 0", "0.1 0.1 0.2 0", "0.1 0 0.4 0.5")


def test_lower_is_union_of_contained_members():
    x = fz("0.2 0.5 0.6 0.1")
    assert lower_approx(MAIN, x).values == fz("0.2 0.4 0.5 0").values


def test_upper_patches_uncovered_support():
    x = fz("0.2 0.5 0.6 0.1")
    assert upper_approx(MAIN, x).values == fz("0.2 0.4 0.5 0.5").values


def test_null_set_approximations():
    null = FuzzySet.empty(U)
    pair = approximate(MAIN, null)
    assert pair.lower.is_null() and pair.upper.is_null()


def test_member_definability():
    for m in MAIN.members:
        assert lower_approx(MAIN, m).values == m.values
        assert upper_approx(MAIN, m).values == m.values


def test_neighborhood_union_below_upper():
    x = fz("0.2 0.2 0 0")
    nb = neighborhood_union(MAIN, x)
    assert nb.issubset(upper_approx(MAIN, x))
    assert neighborhood_union(MAIN, FuzzySet.empty(U)).is_null()


def test_subcovering_bound_contains_upper():
    c = cov("0.2 0.1 0.2 0.1", "0.1 0.2 0.1 0.2", "0.1 0.1 0.2 0.1")
    x = fz("0.1 0 0.2 0")
    bound = subcovering_bound(c, x)
    assert bound.values == fz("0.1 0.1 0.2 0.1").values
    assert upper_approx(c, x).issubset(bound)


def test_subcovering_bound_null_set_is_member_meet():
    c = cov("0.2 0.1 0.2 0.1", "0.1 0.2 0.1 0.2")
    assert subcovering_bound(c, FuzzySet.empty(U)).values == fz("0.1 0.1 0.1 0.1").values


def test_roughness_values():
    x = fz("0.2 0.5 0.6 0.1")
    assert roughness(MAIN, x) == Fraction(5, 16)
    assert roughness_ab(MAIN, x, Fraction(2, 5), Fraction(1, 5)) == Fraction(2, 3)
    assert roughness(MAIN, FuzzySet.empty(U)) == 0


def test_roughness_cut_degenerate():
    x = fz("0.2 0.5 0.6 0.1")
    with pytest.raises(DegenerateCut):
        roughness_ab(MAIN, x, Fraction(1, 10), Fraction(9, 10))


def test_roughness_report_fields():
    x = fz("0.2 0.5 0.6 0.1")
    report = roughness_report(MAIN, x, Fraction(2, 5), Fraction(1, 5))
    assert report.mu == Fraction(5, 16)
    assert report.mu_alpha_beta == Fraction(2, 3)
    assert report.lower.values == fz("0.2 0.4 0.5 0").values
    assert report.upper.values == fz("0.2 0.4 0.5 0.5").values
    plain = roughness_report(MAIN, x)
    assert plain.mu_alpha_beta is None


def test_definable_set_has_zero_roughness():
    member = MAIN.member(0)
    assert roughness(MAIN, member) == 0
