from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuzzycover.covering import FuzzyCovering
from fuzzycover.errors import (
    LengthMismatch,
    NotSurjective,
    UniverseMismatch,
    UnknownElement,
)
from fuzzycover.mapping import (
    Partition,
    PointMapping,
    image_covering,
    image_set,
    is_consistent,
    kernel_partition,
    meet_all,
    preimage_covering,
    preimage_set,
)
from fuzzycover.sets import FuzzySet, Universe, make_fuzzy_set

U4 = Universe.of(["x1", "x2", "x3", "x4"])
V2 = Universe.of(["y1", "y2"])

grade = st.integers(min_value=0, max_value=10).map(lambda k: Fraction(k, 10))
vec4 = st.tuples(grade, grade, grade, grade)


def fz(*tokens):
    return make_fuzzy_set(U4, list(tokens))


def halves():
    return PointMapping.from_pairs(
        U4, V2, [("x1", "y1"), ("x2", "y1"), ("x3", "y2"), ("x4", "y2")]
    )


def test_partition_blocks_must_tile_the_universe():
    with pytest.raises(LengthMismatch):
        Partition(U4, ((0, 1), (1, 2, 3)))
    with pytest.raises(LengthMismatch):
        Partition(U4, ((0, 1), (3,)))


def test_from_key_orders_blocks_by_least_index():
    p = Partition.from_key(U4, lambda i: i % 2)
    assert p.blocks == ((0, 2), (1, 3))
    assert p.label_blocks() == (("x1", "x3"), ("x2", "x4"))
    assert p.describe() == "{x1, x3} | {x2, x4}"


def test_block_lookup_and_discrete():
    p = Partition.from_key(U4, lambda i: i % 2)
    assert p.block_of(3) == (1, 3)
    assert p.block_index(2) == 0
    with pytest.raises(UnknownElement):
        p.block_of(9)
    assert Partition.discrete(U4).is_discrete()
    assert not p.is_discrete()


def test_meet_is_the_common_refinement():
    left = Partition(U4, ((0, 1), (2, 3)))
    right = Partition(U4, ((0, 2), (1, 3)))
    assert left.meet(right).blocks == ((0,), (1,), (2,), (3,))
    whole = Partition(U4, ((0, 1, 2, 3),))
    assert left.meet(whole).blocks == left.blocks
    assert meet_all([whole, left, right]).is_discrete()
    with pytest.raises(UniverseMismatch):
        left.meet(Partition.discrete(V2))


@given(
    st.tuples(*(st.integers(0, 1) for _ in range(4))),
    st.tuples(*(st.integers(0, 1) for _ in range(4))),
)
@settings(max_examples=200, deadline=None)
def test_meet_commutes_and_refines(ka, kb):
    a = Partition.from_key(U4, lambda i: ka[i])
    b = Partition.from_key(U4, lambda i: kb[i])
    met = a.meet(b)
    assert met.blocks == b.meet(a).blocks
    # every met block sits inside one block of each argument
    for block in met.blocks:
        assert any(set(block) <= set(x) for x in a.blocks)
        assert any(set(block) <= set(x) for x in b.blocks)


def test_mapping_construction_and_lookup():
    f = halves()
    assert f("x2") == "y1"
    assert f("x4") == "y2"
    assert f.pairs() == (("x1", "y1"), ("x2", "y1"), ("x3", "y2"), ("x4", "y2"))
    assert f.fiber(0) == (0, 1)
    assert f.fiber(1) == (2, 3)
    assert kernel_partition(f).blocks == ((0, 1), (2, 3))


def test_mapping_validation():
    with pytest.raises(LengthMismatch):
        PointMapping(U4, V2, (0, 0, 1))
    with pytest.raises(UnknownElement):
        PointMapping(U4, V2, (0, 0, 1, 5))
    with pytest.raises(NotSurjective):
        PointMapping(U4, V2, (0, 0, 0, 0))
    # the same map is allowed once strictness is dropped
    f = PointMapping(U4, V2, (0, 0, 0, 0), strict=False)
    assert f.fiber(1) == ()
    with pytest.raises(LengthMismatch):
        PointMapping.from_pairs(U4, V2, [("x1", "y1"), ("x1", "y2")])
    with pytest.raises(LengthMismatch):
        PointMapping.from_pairs(U4, V2, [("x1", "y1")])


def test_consistency_means_constant_on_fibers():
    f = halves()
    c_good = FuzzyCovering(
        U4,
        [("A", fz("0.2", "0.2", "1", "1")), ("B", fz("1", "1", "0.4", "0.4"))],
    )
    c_bad = FuzzyCovering(
        U4,
        [("A", fz("0.2", "0.3", "1", "1")), ("B", fz("1", "1", "0.4", "0.4"))],
    )
    assert is_consistent(f, c_good)
    assert not is_consistent(f, c_bad)
    with pytest.raises(UniverseMismatch):
        is_consistent(f, FuzzyCovering(V2, [("A", FuzzySet(V2, (Fraction(1), Fraction(1))))]))


def test_image_takes_fiber_maxima():
    f = halves()
    s = fz("0.2", "0.7", "0", "0.4")
    assert image_set(f, s).values == (Fraction(7, 10), Fraction(2, 5))
    # empty fibers land at grade zero
    g = PointMapping(U4, V2, (0, 0, 0, 0), strict=False)
    assert image_set(g, s).values == (Fraction(7, 10), Fraction(0))


def test_preimage_composes():
    f = halves()
    t = FuzzySet(V2, (Fraction(3, 10), Fraction(1)))
    assert preimage_set(f, t).values == (
        Fraction(3, 10),
        Fraction(3, 10),
        Fraction(1),
        Fraction(1),
    )


@given(vec4)
@settings(max_examples=200, deadline=None)
def test_image_preimage_galois_inequalities(values):
    f = halves()
    s = FuzzySet(U4, values)
    assert s.issubset(preimage_set(f, image_set(f, s)))
    t = FuzzySet(V2, (values[0], values[2]))
    assert image_set(f, preimage_set(f, t)).values == t.values


def test_image_covering_names_and_values():
    f = halves()
    c = FuzzyCovering(
        U4,
        [("A", fz("0.2", "0.7", "0", "0.4")), ("B", fz("0", "0", "1", "0.1"))],
    )
    img = image_covering(f, c)
    assert img.names == ("f(A)", "f(B)")
    assert img.member_named("f(A)").values == (Fraction(7, 10), Fraction(2, 5))
    assert img.member_named("f(B)").values == (Fraction(0), Fraction(1))


def test_image_covering_requires_surjectivity():
    g = PointMapping(U4, V2, (0, 0, 0, 0), strict=False)
    c = FuzzyCovering(U4, [("A", fz("1", "1", "1", "1"))])
    with pytest.raises(NotSurjective):
        image_covering(g, c)


def test_preimage_covering_round_trip():
    f = halves()
    c = FuzzyCovering(
        V2,
        [("P", FuzzySet(V2, (Fraction(1), Fraction(1, 2)))),
         ("Q", FuzzySet(V2, (Fraction(0), Fraction(1))))],
    )
    back = preimage_covering(f, c)
    assert back.names == ("f^-1(P)", "f^-1(Q)")
    assert back.member_named("f^-1(P)").values == (
        Fraction(1),
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 2),
    )
    # a preimage covering is always consistent with the mapping
    assert is_consistent(f, back)
    assert image_covering(f, back).vector_set() == c.vector_set()


@given(st.lists(vec4, min_size=1, max_size=4))
@settings(max_examples=200, deadline=None)
def test_consistent_images_recover_by_preimage(rows):
    # force consistency by copying grades across each fiber
    f = halves()
    fixed = [(r[0], r[0], r[2], r[2]) for r in rows]
    if not all(any(g > 0 for g in r) for r in fixed):
        return
    if not all(any(r[j] > 0 for r in fixed) for j in range(4)):
        return
    c = FuzzyCovering(U4, [(f"C{i}", FuzzySet(U4, v)) for i, v in enumerate(fixed)])
    assert is_consistent(f, c)
    img = image_covering(f, c)
    assert preimage_covering(f, img).vector_set() == c.vector_set()
