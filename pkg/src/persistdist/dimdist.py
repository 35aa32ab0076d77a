"""Dimension functions on finite n-dimensional grids and the dimension distance.

A grid function lives on ``{0..k-1}^n`` (per-axis sizes may differ).  Below
the grid it is 0; above the grid the positive and negative parts of its
accumulated differential keep their last values along each axis.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple

import numpy as np

from .errors import ShapeMismatch
from .extreal import INF, to_scalar

__all__ = [
    "GridFunction",
    "GridDifferential",
    "differential",
    "accumulate",
    "positive_part",
    "negative_part",
    "extend",
    "shrink",
    "DimensionDistance",
    "dimension_distance",
    "dimension_function",
]


class GridFunction(NamedTuple):
    values: np.ndarray

    @classmethod
    def of(cls, values):
        arr = np.asarray(values)
        if arr.dtype.kind not in "iub":
            if not np.all(np.equal(np.mod(arr, 1), 0)):
                raise ValueError("grid functions are integer valued")
        return cls(arr.astype(np.int64))

    @property
    def shape(self):
        return self.values.shape

    def __eq__(self, other):
        return isinstance(other, GridFunction) and np.array_equal(self.values, other.values)

    def __ne__(self, other):
        return not self == other

    __hash__ = None


class GridDifferential(NamedTuple):
    values: np.ndarray

    @property
    def shape(self):
        return self.values.shape

    def __eq__(self, other):
        return isinstance(other, GridDifferential) and np.array_equal(
            self.values, other.values
        )

    def __ne__(self, other):
        return not self == other

    __hash__ = None


def _as_function(f) -> GridFunction:
    return f if isinstance(f, GridFunction) else GridFunction.of(f)


def differential(f) -> GridDifferential:
    """Inclusion-exclusion of backward differences along every axis."""
    arr = _as_function(f).values
    for axis in range(arr.ndim):
        arr = np.diff(arr, axis=axis, prepend=0)
    return GridDifferential(arr)


def accumulate(d) -> GridFunction:
    """Sum of the differential over the lower set of each grid point."""
    arr = d.values if isinstance(d, GridDifferential) else np.asarray(d, dtype=np.int64)
    for axis in range(arr.ndim):
        arr = np.cumsum(arr, axis=axis)
    return GridFunction(arr)


def positive_part(f) -> GridFunction:
    """``f_{Σ+}``: accumulation of the positive part of ``Δf``."""
    return accumulate(np.maximum(differential(f).values, 0))


def negative_part(f) -> GridFunction:
    """``f_{Σ-}``: accumulation of the negative part of ``Δf``."""
    return accumulate(np.minimum(differential(f).values, 0))


def _moved(arr, delta):
    """``g(x + delta)`` (delta may be negative) with the grid continuation."""
    out = arr
    for axis, size in enumerate(arr.shape):
        idx = np.arange(size) + delta
        below = idx < 0
        idx = np.clip(idx, 0, size - 1)
        out = np.take(out, idx, axis=axis)
        if below.any():
            mask_shape = [1] * arr.ndim
            mask_shape[axis] = size
            out = np.where(below.reshape(mask_shape), 0, out)
    return out


def _check_delta(delta):
    if int(delta) != delta or delta < 0:
        raise ValueError("delta must be a nonnegative integer number of grid steps")
    return int(delta)


def extend(f, delta) -> GridFunction:
    """``f^{+δ}(x) = f_{Σ+}(x + δ) + f_{Σ-}(x - δ)``."""
    delta = _check_delta(delta)
    pos, neg = positive_part(f).values, negative_part(f).values
    return GridFunction(_moved(pos, delta) + _moved(neg, -delta))


def shrink(f, delta) -> GridFunction:
    """``f^{-δ}(x) = f_{Σ-}(x + δ) + f_{Σ+}(x - δ)``."""
    delta = _check_delta(delta)
    pos, neg = positive_part(f).values, negative_part(f).values
    return GridFunction(_moved(neg, delta) + _moved(pos, -delta))


class DimensionDistance(NamedTuple):
    d_minus: object
    d_plus: object
    d_zero: object


def _least(ok, top):
    # smallest δ in 0..top with ok(δ), assuming monotonicity; inf if none
    if not ok(top):
        return INF
    lo, hi = 0, top
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _within_minus(f, g, delta):
    return bool(
        np.all(f.values >= shrink(g, delta).values)
        and np.all(g.values >= shrink(f, delta).values)
    )


def _within_plus(f, g, delta):
    return bool(
        np.all(f.values <= extend(g, delta).values)
        and np.all(g.values <= extend(f, delta).values)
    )


def dimension_distance(f, g) -> DimensionDistance:
    """``(d_-, d_+, d_0)`` in grid steps; ``inf`` when no shift up to the grid size works."""
    f, g = _as_function(f), _as_function(g)
    if f.shape != g.shape:
        raise ShapeMismatch(f"grid shapes differ: {f.shape} vs {g.shape}")
    top = max(f.shape) if f.shape else 0
    d_minus = _least(lambda d: _within_minus(f, g, d), top)
    d_plus = _least(lambda d: _within_plus(f, g, d), top)
    return DimensionDistance(d_minus, d_plus, min(d_minus, d_plus))


def dimension_function(ms, shape, origin, spacing) -> GridFunction:
    """Number of summands containing each grid point ``origin + spacing * index``.

    Staircase modules are 2-parameter, so ``shape`` has two entries.
    """
    shape = tuple(int(s) for s in shape)
    if len(shape) != 2:
        raise ValueError("dimension functions of staircase modules live on 2-d grids")
    ox, oy = (to_scalar(o) for o in origin)
    spacing = to_scalar(spacing)
    xs = [ox + spacing * i for i in range(shape[0])]
    ys = [oy + spacing * j for j in range(shape[1])]
    out = np.zeros(shape, dtype=np.int64)
    for interval in ms:
        x0, x1 = interval.x_range
        for i, x in enumerate(xs):
            if x0 <= x <= x1:
                j0 = bisect_left(ys, interval.low(x))
                j1 = bisect_right(ys, interval.high(x))
                out[i, j0:j1] += 1
    return GridFunction(out)
