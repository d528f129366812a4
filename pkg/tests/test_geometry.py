import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from squarability.errors import (
    DegenerateInterval,
    DimensionMismatch,
    EmptyIndexSet,
    IndexOutOfRange,
    SharedEndpoint,
)
from squarability.gallery import GALLERY, bipartite_grid, fig9_boxes3d
from squarability.geometry import (
    Arrangement,
    Box,
    Interval,
    Kind,
    Relation,
    as_rational,
    classify_pair,
    interval_relation,
    intersects,
    project,
    rect,
    validate_general_position,
)

from _arrangements import arrangements, boxes

R = Relation


def iv(lo, hi):
    return Interval(lo, hi)


# Each relation written straight from its defining chain of inequalities.
DEFINITIONS = {
    R.BEFORE: lambda p, q: p.hi < q.lo,
    R.AFTER: lambda p, q: q.hi < p.lo,
    R.OVERLAP_LOW: lambda p, q: p.lo < q.lo < p.hi < q.hi,
    R.OVERLAP_HIGH: lambda p, q: q.lo < p.lo < q.hi < p.hi,
    R.CONTAINS: lambda p, q: p.lo < q.lo < q.hi < p.hi,
    R.INSIDE: lambda p, q: q.lo < p.lo < p.hi < q.hi,
}


class TestInterval:
    def test_rejects_degenerate(self):
        with pytest.raises(DegenerateInterval):
            Interval(2, 2)
        with pytest.raises(DegenerateInterval):
            Interval(3, 1)

    def test_refuses_floats(self):
        with pytest.raises(TypeError):
            Interval(0.5, 2)
        assert as_rational("7/3") == Fraction(7, 3)

    @pytest.mark.parametrize(
        "p, q, expected",
        [
            (iv(0, 1), iv(2, 3), R.BEFORE),
            (iv(0, 4), iv(1, 3), R.CONTAINS),
            (iv(0, 2), iv(1, 3), R.OVERLAP_LOW),
            (iv(2, 3), iv(0, 1), R.AFTER),
            (iv(1, 3), iv(0, 2), R.OVERLAP_HIGH),
            (iv(1, 3), iv(0, 4), R.INSIDE),
        ],
    )
    def test_relation_examples(self, p, q, expected):
        assert interval_relation(p, q) is expected

    def test_shared_endpoint(self):
        with pytest.raises(SharedEndpoint):
            interval_relation(iv(0, 1), iv(1, 2))
        with pytest.raises(SharedEndpoint):
            interval_relation(iv(0, 3), iv(1, 3))

    def test_exactly_one_relation_on_ten_thousand_pairs(self):
        rng = random.Random(1729)
        for _ in range(10_000):
            a, b, c, d = (Fraction(v, rng.randint(1, 6)) for v in rng.sample(range(-300, 300), 4))
            if len({a, b, c, d}) < 4:
                continue
            p, q = iv(min(a, b), max(a, b)), iv(min(c, d), max(c, d))
            holding = [rel for rel, test in DEFINITIONS.items() if test(p, q)]
            assert holding == [interval_relation(p, q)]

    @given(st.permutations(range(4)))
    def test_mirror(self, perm):
        p, q = iv(*sorted(perm[:2])), iv(*sorted(perm[2:]))
        assert interval_relation(q, p) is interval_relation(p, q).mirror


class TestClassify:
    def test_corner(self):
        d = classify_pair(rect(0, 4, 0, 4), rect(3, 6, 3, 6))
        assert d.kind is Kind.CORNER
        assert d.relations == (R.OVERLAP_LOW, R.OVERLAP_LOW)

    def test_side_piercing_from_above(self):
        d = classify_pair(rect(0, 10, 0, 4), rect(2, 8, 2, 6))
        assert d.kind is Kind.SIDE_PIERCING
        assert d.relations == (R.CONTAINS, R.OVERLAP_LOW)

    def test_cross(self):
        d = classify_pair(rect(0, 10, 4, 6), rect(4, 6, 0, 10))
        assert (d.kind, d.relations) == (Kind.CROSS, (R.CONTAINS, R.INSIDE))

    def test_containment_and_disjoint(self):
        assert classify_pair(rect(0, 10, 0, 10), rect(1, 2, 3, 4)).kind is Kind.CONTAINMENT
        assert classify_pair(rect(0, 1, 0, 1), rect(2, 3, 5, 6)).kind is Kind.DISJOINT

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            classify_pair(rect(0, 1, 0, 1), Box.from_bounds((0, 1)))
        with pytest.raises(DimensionMismatch):
            intersects(rect(0, 1, 0, 1), Box.from_bounds((0, 1), (0, 1), (0, 1)))

    def test_higher_dimensions(self):
        a, b, c = fig9_boxes3d()
        assert classify_pair(a, b).kind is Kind.HIGHER_DIM
        assert classify_pair(Box.from_bounds((0, 2)), Box.from_bounds((1, 3))).kind is Kind.HIGHER_DIM
        far = Box.from_bounds((20, 21), (20, 21), (20, 21))
        assert classify_pair(a, far).kind is Kind.DISJOINT

    @given(boxes(), boxes())
    def test_kind_is_symmetric(self, a, b):
        try:
            d = classify_pair(a, b)
        except SharedEndpoint:
            return
        back = classify_pair(b, a)
        assert back.kind is d.kind
        assert back == d.mirror

    @given(boxes(3), boxes(3))
    def test_disjointness_law(self, a, b):
        try:
            d = classify_pair(a, b)
        except SharedEndpoint:
            return
        assert intersects(a, b) == (not any(r.disjoint for r in d.relations))
        assert intersects(a, b) == (d.kind is not Kind.DISJOINT)


class TestIntersects:
    def test_examples(self):
        assert not intersects(rect(0, 1, 0, 1), rect(2, 3, 2, 3))
        assert intersects(rect(0, 10, 0, 10), rect(2, 3, 2, 3))

    def test_closed_boxes_touch(self):
        assert intersects(rect(0, 1, 0, 1), rect(1, 2, 0, 1))

    def test_fig9_all_pairs_meet(self):
        arr = fig9_boxes3d()
        assert all(intersects(arr.box(i), arr.box(j)) for i, j in arr.pairs())


class TestArrangement:
    def test_one_based(self):
        arr = Arrangement((rect(0, 1, 0, 1), rect(2, 3, 2, 3)), ("P", "Q"))
        assert arr.box(1) == rect(0, 1, 0, 1)
        assert arr.index("Q") == 2 and arr.label(1) == "P"
        with pytest.raises(IndexOutOfRange):
            arr.box(0)
        assert list(arr.pairs()) == [(1, 2)]

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatch):
            Arrangement((rect(0, 1, 0, 1), Box.from_bounds((0, 1))))


class TestProject:
    def test_to_x_intervals(self):
        arr = Arrangement((rect(0, 2, 5, 6), rect(1, 3, 7, 9)))
        line = project(arr, {1})
        assert line.dimension == 1
        assert [bx.axes for bx in line] == [(iv(0, 2),), (iv(1, 3),)]
        assert project(arr, 1) == line

    def test_identity(self):
        arr = bipartite_grid(2)
        assert project(arr, {1, 2}) == arr

    def test_fig9_first_axis(self):
        arr = fig9_boxes3d()
        line = project(arr, {1})
        b, a = line.by_label("B").axes[0], line.by_label("A").axes[0]
        assert interval_relation(b, a) is R.INSIDE

    def test_errors(self):
        arr = bipartite_grid(1)
        with pytest.raises(EmptyIndexSet):
            project(arr, set())
        with pytest.raises(IndexOutOfRange):
            project(arr, {3})

    @given(arrangements(2, 4, dimension=3), st.sampled_from([1, 2, 3]))
    def test_projection_consistency(self, arr, c):
        line = project(arr, {c})
        for i, j in arr.pairs():
            full = classify_pair(arr.box(i), arr.box(j))
            assert classify_pair(line.box(i), line.box(j)).relations == (full.relations[c - 1],)


class TestGeneralPosition:
    def test_clean(self):
        arr = Arrangement((rect(0, 1, 0, 1), rect(3, 4, 3, 4)))
        assert validate_general_position(arr) == []

    def test_shared_x(self):
        (clash,) = validate_general_position(Arrangement((rect(0, 1, 0, 1), rect(1, 2, 5, 6))))
        assert (clash.axis, clash.value, clash.first, clash.second) == (1, 1, 1, 2)

    @pytest.mark.parametrize("name", sorted(GALLERY))
    def test_gallery_is_in_general_position(self, name):
        assert validate_general_position(GALLERY[name]()) == []
