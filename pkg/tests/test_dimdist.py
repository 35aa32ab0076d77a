import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import array_shapes, arrays

from persistdist.dimdist import (
    DimensionDistance,
    GridFunction,
    accumulate,
    differential,
    dimension_distance,
    dimension_function,
    extend,
    negative_part,
    positive_part,
    shrink,
)
from persistdist.errors import ShapeMismatch
from persistdist.extreal import INF
from persistdist.interval import rectangle
from persistdist.oracle import (
    oracle_differential,
    oracle_dimension_distance,
    oracle_extend,
    oracle_shrink,
)

F = [1, 1, 1, 1, 0, 0]
G = [0, 1, 1, 0, 0, 0]


def grids(low=-2, high=3):
    return arrays(np.int64, array_shapes(min_dims=1, max_dims=3, max_side=5), elements=st.integers(low, high))


@st.composite
def grid_pairs(draw, low=0, high=2):
    shape = draw(array_shapes(min_dims=1, max_dims=3, max_side=5))
    elems = st.integers(low, high)
    return draw(arrays(np.int64, shape, elements=elems)), draw(arrays(np.int64, shape, elements=elems))


class TestDifferential:
    def test_examples(self):
        assert differential(F).values.tolist() == [1, 0, 0, 0, -1, 0]
        assert not differential(np.zeros((3, 3))).values.any()
        rect = np.zeros((5, 5), dtype=int)
        rect[1:3, 1:3] = 1
        d = differential(rect).values
        assert sorted(map(tuple, np.argwhere(d))) == [(1, 1), (1, 3), (3, 1), (3, 3)]
        assert accumulate(differential(rect)) == GridFunction.of(rect)

    def test_accumulate_example(self):
        assert accumulate([1, 0, 0, 0, -1, 0]).values.tolist() == F

    def test_rejects_fractional_values(self):
        with pytest.raises(ValueError):
            GridFunction.of([0.5, 1])

    @given(grids())
    def test_matches_inclusion_exclusion(self, f):
        assert np.array_equal(differential(f).values, oracle_differential(f))

    @given(grids())
    def test_round_trip(self, f):
        assert accumulate(differential(f)) == GridFunction.of(f)

    @given(grids())
    def test_parts(self, f):
        pos, neg = positive_part(f).values, negative_part(f).values
        assert np.array_equal(pos + neg, f)
        assert (pos >= 0).all() and (neg <= 0).all()


class TestExtendShrink:
    def test_examples(self):
        assert shrink(F, 1).values.tolist() == [0, 1, 1, 0, 0, 0]
        assert extend(F, 1).values.tolist() == [1, 1, 1, 1, 1, 0]
        assert extend(F, 0) == shrink(F, 0) == GridFunction.of(F)

    def test_rejects_fractional_delta(self):
        with pytest.raises(ValueError):
            extend(F, 0.5)

    @given(grids(), st.integers(0, 4))
    def test_match_window_formula(self, f, delta):
        assert np.array_equal(extend(f, delta).values, oracle_extend(f, delta))
        assert np.array_equal(shrink(f, delta).values, oracle_shrink(f, delta))

    @given(grids(), st.integers(0, 3))
    def test_monotone_in_delta(self, f, delta):
        assert (extend(f, delta).values <= extend(f, delta + 1).values).all()
        assert (shrink(f, delta).values >= shrink(f, delta + 1).values).all()


class TestDimensionDistance:
    def test_examples(self):
        assert dimension_distance(F, F) == DimensionDistance(0, 0, 0)
        assert dimension_distance(F, G).d_minus == 1

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            dimension_distance([1, 0], [1, 0, 0])

    def test_unreachable(self):
        # shrinking [5] by one step leaves nothing, but no extension of 0 covers 5
        assert dimension_distance([5], [0]) == DimensionDistance(1, INF, 1)

    @given(grid_pairs(low=-2, high=3))
    def test_matches_linear_scan(self, pair):
        f, g = pair
        d = dimension_distance(f, g)
        assert (d.d_minus, d.d_plus) == oracle_dimension_distance(f, g)
        assert d.d_zero == min(d.d_minus, d.d_plus)

    def test_nonnegative_pair_with_extension_closer(self):
        # bars [0,1) + [2,3) against [0,3): extending by 1 covers both ways,
        # shrinking needs 2 grid steps since g shrunk by 1 is 1 on [1,2) where f is 0
        f = [1, 0, 1, 0, 0, 0, 0]
        g = [1, 1, 1, 0, 0, 0, 0]
        assert dimension_distance(f, g) == DimensionDistance(2, 1, 1)
        assert oracle_dimension_distance(f, g) == (2, 1)


class TestDimensionFunction:
    def test_examples(self):
        sq = rectangle(0, 0, 2, 2)
        one = dimension_function([sq], (5, 5), (0, 0), 1).values
        expected = np.zeros((5, 5), dtype=int)
        expected[:3, :3] = 1
        assert one.tolist() == expected.tolist()
        assert dimension_function([sq, sq], (5, 5), (0, 0), 1).values.tolist() == (2 * expected).tolist()
        assert not dimension_function([], (5, 5), (0, 0), 1).values.any()

    def test_rejects_other_dimensions(self):
        with pytest.raises(ValueError):
            dimension_function([], (3, 3, 3), (0, 0, 0), 1)
