"""Lower and upper approximations over a fuzzy covering, plus roughness.

The lower approximation of X is the union of all members below X. The
upper approximation patches the lower one: wherever X is positive but the
lower approximation vanishes, the element's neighborhood is unioned in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .covering import FuzzyCovering, minimal_subcoverings
from .errors import DegenerateCut, UniverseMismatch
from .sets import FuzzySet, intersect_all, union_all


def lower_approx(c: FuzzyCovering, x: FuzzySet) -> FuzzySet:
    """Union of every member contained in x (null set when there is none)."""
    if x.universe != c.universe:
        raise UniverseMismatch("set lives on a different universe than the covering")
    below = [m for m in c.members if m.issubset(x)]
    return union_all(below, universe=c.universe)


def upper_approx(c: FuzzyCovering, x: FuzzySet) -> FuzzySet:
    """Lower approximation joined with the neighborhoods of the uncovered support.

    An element's neighborhood enters exactly when x is positive there while
    the lower approximation is zero there.
    """
    lower = lower_approx(c, x)
    nbhds = c.neighborhoods()
    patches = [
        nbhds[i]
        for i in range(len(c.universe))
        if x.values[i] > 0 and lower.values[i] == 0
    ]
    return union_all(patches, universe=c.universe).union(lower)


@dataclass(frozen=True)
class ApproxPair:
    lower: FuzzySet
    upper: FuzzySet


def approximate(c: FuzzyCovering, x: FuzzySet) -> ApproxPair:
    return ApproxPair(lower_approx(c, x), upper_approx(c, x))


def neighborhood_union(c: FuzzyCovering, x: FuzzySet) -> FuzzySet:
    """Union of the neighborhoods of every element in x's support."""
    if x.universe != c.universe:
        raise UniverseMismatch("set lives on a different universe than the covering")
    nbhds = c.neighborhoods()
    pool = [nbhds[i] for i in sorted(x.support())]
    return union_all(pool, universe=c.universe)


def subcovering_bound(c: FuzzyCovering, x: FuzzySet) -> FuzzySet:
    """Meet over all subcoverings of x of the subcovering's union.

    Computed over inclusion-minimal subcoverings only: every subcovering
    contains a minimal one with a smaller union, so the meet is unchanged
    and the full subset lattice never gets materialized. Raises NotCovered
    when x is not below the union of the whole covering.
    """
    minimal = minimal_subcoverings(c, x)
    unions = [union_all(c.members[i] for i in combo) for combo in minimal]
    return intersect_all(unions, universe=c.universe)


@dataclass(frozen=True)
class RoughnessReport:
    lower: FuzzySet
    upper: FuzzySet
    mu: Fraction
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    mu_alpha_beta: Optional[Fraction] = None


def roughness(c: FuzzyCovering, x: FuzzySet) -> Fraction:
    """1 - |lower| / |upper| using scalar cardinalities, exactly.

    Defined as 0 when the upper approximation is null (both approximations
    are null exactly when x is).
    """
    pair = approximate(c, x)
    upper_card = pair.upper.cardinality()
    if upper_card == 0:
        return Fraction(0)
    return 1 - pair.lower.cardinality() / upper_card


def roughness_ab(c: FuzzyCovering, x: FuzzySet, alpha: Fraction, beta: Fraction) -> Fraction:
    """Cut-counting roughness: 1 - |lower > alpha| / |upper > beta|.

    Strict cuts; an empty beta-cut of the upper approximation leaves the
    measure undefined and raises DegenerateCut.
    """
    pair = approximate(c, x)
    denom = len(pair.upper.strict_cut(beta))
    if denom == 0:
        raise DegenerateCut(f"upper approximation has an empty strict {beta}-cut")
    numer = len(pair.lower.strict_cut(alpha))
    return 1 - Fraction(numer, denom)


def roughness_report(
    c: FuzzyCovering,
    x: FuzzySet,
    alpha: Optional[Fraction] = None,
    beta: Optional[Fraction] = None,
) -> RoughnessReport:
    """Approximations, scalar roughness, and cut roughness when cuts are given."""
    pair = approximate(c, x)
    upper_card = pair.upper.cardinality()
    mu = Fraction(0) if upper_card == 0 else 1 - pair.lower.cardinality() / upper_card
    mu_ab = None
    if alpha is not None and beta is not None:
        denom = len(pair.upper.strict_cut(beta))
        if denom == 0:
            raise DegenerateCut(f"upper approximation has an empty strict {beta}-cut")
        mu_ab = 1 - Fraction(len(pair.lower.strict_cut(alpha)), denom)
    return RoughnessReport(pair.lower, pair.upper, mu, alpha, beta, mu_ab)
