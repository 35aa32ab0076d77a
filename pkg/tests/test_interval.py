from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from persistdist.errors import (
    ChainsEndpointMismatch,
    EmptyRegion,
    NonMonotoneChain,
    NonRectilinearEdge,
)
from persistdist.extreal import INF, Point
from persistdist.interval import (
    IntervalModule,
    boundary_vertices,
    contains,
    from_slabs,
    rectangle,
    shift,
    trivial_threshold,
    validate,
)

from .helpers import intervals, polygon_contains


class TestValidate:
    def test_square(self, square):
        assert square.lower.vertices == (Point(0, 2), Point(0, 0), Point(2, 0))
        assert square.upper.vertices == (Point(0, 2), Point(2, 2), Point(2, 0))

    def test_endpoint_mismatch(self):
        with pytest.raises(ChainsEndpointMismatch):
            validate([(0, 0), (2, 0)], [(0, 0), (0, 2), (2, 2)])

    def test_empty_region(self):
        with pytest.raises(EmptyRegion):
            validate([(0, 2), (1, 2), (1, 0)], [(0, 2), (0, 0), (1, 0)])

    def test_non_rectilinear(self):
        with pytest.raises(NonRectilinearEdge):
            validate([(0, 0), (1, 1)], [(0, 0), (1, 1)])

    def test_non_monotone(self):
        with pytest.raises(NonMonotoneChain):
            validate([(0, 0), (0, 2)], [(0, 0), (0, 2)])

    def test_doubling_back_is_rejected(self):
        with pytest.raises(NonMonotoneChain):
            validate([(0, 2), (0, 0), (0, 1), (2, 1)], [(0, 2), (2, 2), (2, 1)])

    def test_collinear_and_duplicates_merge(self):
        iv = validate(
            [(0, 2), (0, 1), (0, 1), (0, 0), (1, 0), (2, 0)],
            [(0, 2), (2, 2), (2, 0)],
        )
        assert iv == rectangle(0, 0, 2, 2)

    def test_degenerate_point_and_segment(self):
        p = validate([(1, 1)], [(1, 1)])
        assert boundary_vertices(p) == ((Point(1, 1),), (Point(1, 1),))
        seg = validate([(0, 1), (3, 1)], [(0, 1), (3, 1)])
        assert contains(seg, (2, 1)) and not contains(seg, (2, Fraction(3, 2)))

    def test_strings_and_infinity(self, quadrant):
        iv = validate([("0", "inf"), ("0", "1/3"), ("inf", "1/3")], [("0", "inf"), ("inf", "inf"), ("inf", "1/3")])
        assert contains(iv, (5, Fraction(1, 3)))
        assert contains(quadrant, (10**9, 10**9))


class TestContains:
    def test_examples(self, square):
        assert contains(square, (1, 1))
        assert contains(square, (2, 2))
        assert not contains(square, (Fraction(5, 2), 1))

    @given(intervals())
    def test_matches_polygon_test(self, iv):
        for i in range(-1, 19):
            for j in range(-1, 19):
                p = (Fraction(i, 2), Fraction(j, 2))
                assert contains(iv, p) == polygon_contains(iv, p)


class TestShift:
    def test_examples(self, square, square13):
        assert shift(square13, 1) == square
        assert shift(square, 0) == square
        iv = validate([(0, INF), (0, 0), (INF, 0)], [(0, INF), (INF, INF), (INF, 0)])
        assert shift(iv, 1).top_left == Point(-1, INF)

    @given(intervals(), st.fractions(min_value=-5, max_value=5, max_denominator=6))
    def test_round_trip(self, iv, a):
        moved = shift(iv, a)
        assert shift(moved, -a) == iv
        assert validate(moved.lower.vertices, moved.upper.vertices) == moved
        x, y = iv.top_left
        assert contains(moved, (x - a, y - a))


class TestBoundaryVertices:
    def test_square(self, square):
        vl, vu = boundary_vertices(square)
        assert set(vl) == {(0, 2), (0, 0), (2, 0)}
        assert set(vu) == {(0, 2), (2, 2), (2, 0)}

    def test_l_shape(self, l_shape):
        _, vu = boundary_vertices(l_shape)
        assert vu == ((0, 3), (1, 3), (1, 1), (3, 1), (3, 0))


class TestTrivialThreshold:
    def test_examples(self, square, quadrant):
        assert trivial_threshold(square) == 1
        assert trivial_threshold(validate([(1, 1)], [(1, 1)])) == 0
        assert trivial_threshold(quadrant) == INF

    @given(intervals())
    def test_equals_longest_diagonal_run(self, iv):
        # brute force: the longest diagonal run starting at half-integer points
        best = 0
        for i in range(0, 17):
            for j in range(0, 17):
                p = (Fraction(i, 2), Fraction(j, 2))
                if not contains(iv, p):
                    continue
                run = max(
                    (
                        d
                        for v in iv.vertices
                        for d in (v.x - p[0], v.y - p[1])
                        if d >= 0 and contains(iv, (p[0] + d, p[1] + d))
                    ),
                    default=0,
                )
                best = max(best, run)
        assert trivial_threshold(iv) == Fraction(best) / 2


def test_from_slabs_builds_staircase():
    iv = from_slabs([0, 1, 3], [2, 0], [4, 3])
    assert contains(iv, (Fraction(1, 2), 4)) and not contains(iv, (2, 4))
    assert contains(iv, (2, 0)) and not contains(iv, (Fraction(1, 2), 1))


def test_interval_module_type_checks(square):
    assert len(IntervalModule([square, square])) == 2
    with pytest.raises(TypeError):
        IntervalModule([square, "nope"])
