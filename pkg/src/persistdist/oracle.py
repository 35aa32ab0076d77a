"""Brute-force ground truth on finite sample grids.

Nothing here uses the component criteria of the main algorithm.  An
interleaving is searched for directly: the maps are constant on each
intersection component, so every 0/1 assignment of the components is tried,
and the morphism and interleaving equations are checked point by point on a
grid fine enough to sample every cell of the arrangement of all boundaries
involved (all vertex coordinates, their diagonal shifts, midpoints of
consecutive values and one value beyond each end).
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import SizeLimitExceeded, TooManyComponents
from .extreal import INF, to_scalar
from .intersection import intersect_components
from .interleaving import candidate_set
from .interval import shift

__all__ = [
    "SampleGrid",
    "oracle_is_interleaved",
    "oracle_distance",
    "oracle_bottleneck",
    "pointwise_valid",
    "raster_triv_sup",
    "oracle_differential",
    "oracle_extend",
    "oracle_shrink",
    "oracle_dimension_distance",
    "DEFAULT_MAX_COMPONENTS",
]

DEFAULT_MAX_COMPONENTS = 12
MAX_BOTTLENECK_SUMMANDS = 8


def _axis(values):
    vals = sorted(set(values))
    out = [vals[0] - 1]
    for a, b in zip(vals, vals[1:]):
        out.append(a)
        out.append((a + b) / 2)
    out.append(vals[-1])
    out.append(vals[-1] + 1)
    return tuple(out)


class SampleGrid(NamedTuple):
    xs: tuple
    ys: tuple

    @classmethod
    def around(cls, intervals, shifts=(0,)):
        xs, ys = [], []
        for interval in intervals:
            if not interval.is_bounded:
                raise ValueError("the sample grid needs intervals with finite vertices")
            for v in interval.vertices:
                for s in shifts:
                    xs.append(Fraction(v.x) + s)
                    ys.append(Fraction(v.y) + s)
        return cls(_axis(xs), _axis(ys))

    @property
    def shape(self):
        return len(self.xs), len(self.ys)

    def raster(self, interval) -> np.ndarray:
        """Boolean membership of every grid point, indexed ``[ix, iy]``."""
        out = np.zeros(self.shape, dtype=bool)
        x0, x1 = interval.x_range
        ys = self.ys
        for i, x in enumerate(self.xs):
            if x < x0 or x > x1:
                continue
            j0 = bisect_left(ys, interval.low(x))
            j1 = bisect_right(ys, interval.high(x))
            out[i, j0:j1] = True
        return out

    def point(self, i, j):
        return self.xs[i], self.ys[j]


def _down_closure(mask):
    # True at p iff some q >= p (componentwise) is True
    rev = mask[::-1, ::-1]
    acc = np.logical_or.accumulate(np.logical_or.accumulate(rev, axis=0), axis=1)
    return acc[::-1, ::-1]


def _up_closure(mask):
    return np.logical_or.accumulate(np.logical_or.accumulate(mask, axis=0), axis=1)


def _is_morphism(phi, src, dst):
    """Square commutativity of the map ``phi`` between interval modules.

    ``phi`` is the support of the constant-one map, ``src`` and ``dst`` the
    rasters of source and (already shifted) target.  For ``x <= y``:
    ``src(x) src(y) phi(y) == phi(x) dst(x) dst(y)``.
    """
    if not phi.any():
        return True
    # phi(x) = 1 forces dst(y) == phi(y) for all y >= x
    if (phi & _down_closure(dst ^ phi)).any():
        return False
    # src(x) = 1, phi(x) = 0 forces phi(y) = 0 for all y >= x
    return not (src & ~phi & _down_closure(phi)).any()


def _bits(mask) -> int:
    return int.from_bytes(np.packbits(mask, axis=None).tobytes(), "big")


def _morphisms(grid, comps, src, dst, step):
    rasters = [grid.raster(c.region) for c in comps]
    stepped = [grid.raster(shift(c.region, step)) for c in comps]
    found = []
    for choice in itertools.product((0, 1), repeat=len(comps)):
        phi = np.zeros(grid.shape, dtype=bool)
        phi_step = np.zeros(grid.shape, dtype=bool)
        for on, r, s in zip(choice, rasters, stepped):
            if on:
                phi |= r
                phi_step |= s
        if _is_morphism(phi, src, dst):
            found.append((_bits(phi), _bits(phi_step)))
    return found


def oracle_is_interleaved(m, n, delta, max_components=DEFAULT_MAX_COMPONENTS) -> bool:
    """Whether a ``delta``-interleaving between ``m`` and ``n`` exists."""
    delta = to_scalar(delta)
    if delta <= 0 or delta == INF:
        raise ValueError("delta must be positive and finite")
    n_to = shift(n, delta)
    m_to = shift(m, delta)
    comps_phi = intersect_components(m, n_to)
    comps_psi = intersect_components(n, m_to)
    total = len(comps_phi) + len(comps_psi)
    if total > max_components:
        raise TooManyComponents(
            f"{total} intersection components exceed the limit of {max_components}"
        )
    shifts = (0, delta, -delta, 2 * delta, -2 * delta)
    grid = SampleGrid.around([m, n], shifts)
    rm, rn = grid.raster(m), grid.raster(n)
    phis = _morphisms(grid, comps_phi, rm, grid.raster(n_to), delta)
    if not phis:
        return False
    psis = _morphisms(grid, comps_psi, rn, grid.raster(m_to), delta)
    # psi_{x+δ} ∘ phi_x must equal the internal map x -> x + 2δ of m, and
    # symmetrically for n
    want_m = _bits(rm & grid.raster(shift(m, 2 * delta)))
    want_n = _bits(rn & grid.raster(shift(n, 2 * delta)))
    for phi, phi_step in phis:
        for psi, psi_step in psis:
            if phi & psi_step == want_m and psi & phi_step == want_n:
                return True
    return False


def oracle_distance(m, n, max_components=DEFAULT_MAX_COMPONENTS):
    """Smallest candidate ``δ`` admitting a ``(δ + ε)``-interleaving."""
    cands = candidate_set(m, n)
    for d in cands.finite_values:
        if oracle_is_interleaved(m, n, d + cands.epsilon, max_components):
            return d
    return INF


def oracle_bottleneck(ms, ns, dist=None, row_triv=None, col_triv=None):
    """Minimum over all partial matchings of the worst matched or unmatched cost.

    ``dist`` and the trivial thresholds are computed when not supplied.
    """
    from .bottleneck import pairwise_matrix

    m, n = len(ms), len(ns)
    if m + n > MAX_BOTTLENECK_SUMMANDS:
        raise SizeLimitExceeded(
            f"exhaustive matching is limited to {MAX_BOTTLENECK_SUMMANDS} summands, got {m + n}"
        )
    if dist is None or row_triv is None or col_triv is None:
        mat = pairwise_matrix(ms, ns)
        dist, row_triv, col_triv = mat.entries, mat.row_triv, mat.col_triv

    best = INF

    def walk(i, used, worst):
        nonlocal best
        if worst >= best:
            # a tie cannot improve the minimum, except for the very first
            # complete matching when best is still inf
            if not (best == INF and worst == INF):
                return
        if i == m:
            for j in range(n):
                if j not in used:
                    worst = max(worst, col_triv[j])
            best = min(best, worst)
            return
        walk(i + 1, used, max(worst, row_triv[i]))
        for j in range(n):
            if j not in used:
                walk(i + 1, used | {j}, max(worst, dist[i][j]))

    walk(0, frozenset(), 0)
    return to_scalar(best)


def pointwise_valid(q, m, n) -> bool:
    """Validity of ``q`` for ``(m, n)`` from the pointwise definition.

    Every ``x`` in ``q`` needs: ``y <= x`` in ``m`` implies ``y`` in ``n``,
    and ``z >= x`` in ``n`` implies ``z`` in ``m``.
    """
    region = getattr(q, "region", q)
    grid = SampleGrid.around([m, n, region])
    rq, rm, rn = grid.raster(region), grid.raster(m), grid.raster(n)
    if (rq & _up_closure(rm & ~rn)).any():
        return False
    return not (rq & _down_closure(rn & ~rm)).any()


def _clearance_up(interval, p):
    # sup{δ >= 0 : p + δ in interval}; the exit happens when p + δ reaches a
    # vertex abscissa or ordinate, so those are the only candidates
    best = 0
    for v in interval.vertices:
        for d in (v.x - p[0], v.y - p[1]):
            if d > best and interval.contains((p[0] + d, p[1] + d)):
                best = d
    return best


def _clearance_down(interval, p):
    best = 0
    for v in interval.vertices:
        for d in (p[0] - v.x, p[1] - v.y):
            if d > best and interval.contains((p[0] - d, p[1] - d)):
                best = d
    return best


def raster_triv_sup(q, m, n):
    """Sup over the sample points of ``q`` of half the larger clearance."""
    region = getattr(q, "region", q)
    grid = SampleGrid.around([m, n, region])
    rq = grid.raster(region)
    best = 0
    for i, j in zip(*np.nonzero(rq)):
        p = grid.point(i, j)
        best = max(best, _clearance_up(m, p), _clearance_down(n, p))
    return to_scalar(Fraction(best) / 2)


def oracle_differential(values) -> np.ndarray:
    """``Δf(x) = Σ_s (-1)^|s| f(x - 1_s)`` term by term, with ``f = 0`` below the grid."""
    f = np.asarray(values, dtype=np.int64)
    out = np.zeros_like(f)
    n = f.ndim
    for x in itertools.product(*(range(k) for k in f.shape)):
        total = 0
        for s in itertools.product((0, 1), repeat=n):
            y = tuple(a - b for a, b in zip(x, s))
            if min(y, default=0) >= 0:
                total += (-1) ** sum(s) * int(f[y])
        out[x] = total
    return out


def _window_value(f, parts, x, delta):
    # f(x - δ) plus the parts of Δf on ↓(x + δ) ∖ ↓(x - δ),
    # read one grid point at a time; indices above the grid are clamped and
    # points below it carry 0
    near = tuple(c - delta for c in x)
    total = int(f[near]) if min(near, default=0) >= 0 else 0
    far = tuple(min(c + delta, k - 1) for c, k in zip(x, f.shape))
    for y in itertools.product(*(range(b + 1) for b in far)):
        if not all(a <= b for a, b in zip(y, near)):
            total += int(parts[y])
    return total


def oracle_extend(values, delta) -> np.ndarray:
    """``f^{+δ}`` from the window formula over ``Δf_+``."""
    f = np.asarray(values, dtype=np.int64)
    pos = np.maximum(oracle_differential(f), 0)
    out = np.zeros_like(f)
    for x in itertools.product(*(range(k) for k in f.shape)):
        out[x] = _window_value(f, pos, x, delta)
    return out


def oracle_shrink(values, delta) -> np.ndarray:
    """``f^{-δ}`` from the window formula over ``Δf_-``."""
    f = np.asarray(values, dtype=np.int64)
    neg = np.minimum(oracle_differential(f), 0)
    out = np.zeros_like(f)
    for x in itertools.product(*(range(k) for k in f.shape)):
        out[x] = _window_value(f, neg, x, delta)
    return out


def oracle_dimension_distance(f, g):
    """``(d_-, d_+)`` by a linear scan over ``δ = 0, 1, ..., max(shape)``."""
    f = np.asarray(f, dtype=np.int64)
    g = np.asarray(g, dtype=np.int64)
    top = max(f.shape) if f.shape else 0

    def first(ok):
        return next((d for d in range(top + 1) if ok(d)), INF)

    d_minus = first(
        lambda d: (f >= oracle_shrink(g, d)).all() and (g >= oracle_shrink(f, d)).all()
    )
    d_plus = first(
        lambda d: (f <= oracle_extend(g, d)).all() and (g <= oracle_extend(f, d)).all()
    )
    return d_minus, d_plus
