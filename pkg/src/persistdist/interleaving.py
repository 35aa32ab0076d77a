"""Exact interleaving distance between two 2-parameter interval modules.

The distance is searched over a finite candidate set built from diagonal
distances between vertices and boundary chains.  Each candidate ``δ`` is
decided by one probe at ``δ + ε``, where ``ε`` lies below every gap of the
candidate set: every intersection component of ``M`` with the shifted ``N``
(and vice versa) must either carry the constant map or be trivializable.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction
from typing import NamedTuple

from .extreal import (
    INF,
    NEG_INF,
    DiagonalLine,
    _coord_gap,
    half,
    is_finite,
    to_scalar,
)
from .intersection import component_chains
from .interval import StaircaseInterval

__all__ = [
    "SliceInterval",
    "EMPTY_SLICE",
    "CandidateSet",
    "slice",
    "interleave_1d",
    "delta_star",
    "candidate_set",
    "probe",
    "interleaving_distance",
]


class SliceInterval(NamedTuple):
    """Offsets ``[lo, hi]`` along a diagonal line; ``lo is None`` means empty."""

    lo: object
    hi: object

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    @property
    def length(self):
        if self.lo is None:
            return 0
        if self.lo == self.hi:
            return 0
        return self.hi - self.lo

    def __repr__(self):
        if self.lo is None:
            return "SliceInterval(empty)"
        return f"SliceInterval({self.lo}, {self.hi})"


EMPTY_SLICE = SliceInterval(None, None)


def _make_slice(lo, hi):
    # offsets are real numbers; a "segment" sitting entirely at one infinite
    # offset holds no point of the line
    if lo > hi or (lo == hi and not is_finite(lo)):
        return EMPTY_SLICE
    return SliceInterval(lo, hi)


def slice(interval: StaircaseInterval, line) -> SliceInterval:  # noqa: A001
    """``Δ ∩ I`` as offsets from the line's anchor."""
    if not isinstance(line, DiagonalLine):
        line = DiagonalLine(line)
    qx, qy = line.anchor
    fx, fy = is_finite(qx), is_finite(qy)
    if fx and fy:
        low = interval.lower.project((qx, qy))
        high = interval.upper.project((qx, qy))
        if low is None and high is None:
            if interval.contains((qx, qy)):
                return SliceInterval(NEG_INF, INF)
            return EMPTY_SLICE
        lo = low[0].x - qx if low is not None else NEG_INF
        hi = high[0].x - qx if high is not None else INF
        return _make_slice(lo, hi)
    if fx:
        block = [v.x for v in interval.upper.vertices if v.y == qy]
        if not block:
            return EMPTY_SLICE
        return _make_slice(_offset(block[0], qx), _offset(block[-1], qx))
    if fy:
        block = [v.y for v in interval.upper.vertices if v.x == qx]
        if not block:
            return EMPTY_SLICE
        return _make_slice(_offset(block[-1], qy), _offset(block[0], qy))
    return SliceInterval(0, 0) if interval.contains((qx, qy)) else EMPTY_SLICE


def _offset(value, origin):
    return value - origin if is_finite(value) else value


def interleave_1d(a: SliceInterval, b: SliceInterval):
    """Interleaving distance between two 1-parameter interval modules."""
    triv = max(half(a.length), half(b.length))
    if a.is_empty or b.is_empty:
        return to_scalar(triv)
    shift = max(_coord_gap(a.lo, b.lo), _coord_gap(a.hi, b.hi))
    return to_scalar(min(shift, triv))


def _delta_star(m, n):
    best = 0
    for v in m.vertices + n.vertices:
        line = DiagonalLine(v)
        d = interleave_1d(slice(m, line), slice(n, line))
        if d > best:
            best = d
            if best == INF:
                break
    return best


def delta_star(m: StaircaseInterval, n: StaircaseInterval):
    """Max over the vertices of both intervals of the slice distance there."""
    return to_scalar(_delta_star(m, n))


class CandidateSet(NamedTuple):
    finite_values: tuple
    contains_infinity: bool
    epsilon: object

    def __contains__(self, value):
        if value == INF:
            return self.contains_infinity
        i = bisect_left(self.finite_values, value)
        return i < len(self.finite_values) and self.finite_values[i] == value


def _raw_candidates(m, n):
    chains = (m.lower, n.lower, m.upper, n.upper)
    values = set()
    infinite = False
    for v in m.vertices + n.vertices:
        for chain in chains:
            d = chain.dl(v)
            if d == INF:
                infinite = True
            else:
                values.add(d)
                values.add(half(d))
    return sorted(values), infinite


def _epsilon(values):
    if len(values) < 2:
        return 1
    return half(min(b - a for a, b in zip(values, values[1:])))


def candidate_set(m: StaircaseInterval, n: StaircaseInterval) -> CandidateSet:
    values, infinite = _raw_candidates(m, n)
    values = tuple(to_scalar(v) for v in values)
    return CandidateSet(values, infinite, to_scalar(_epsilon(values)))


def _side_passes(a, b, d):
    # every component Q of a ∩ (b - d) must be valid for (a, b - d), or
    # trivializable: both diagonal clearances below 2d at each vertex.  Raw
    # sweep points include all of Q's vertices plus points on its edges, so
    # the maximum over them is the maximum over the vertices.
    dl_upper_a = a.upper.dl
    dl_lower_b = b.lower.dl
    two_d = 2 * d
    for lower, upper, valid in component_chains(a, b, d):
        if valid:
            continue
        for x, y in lower + upper:
            if dl_upper_a((x, y)) >= two_d or dl_lower_b((x + d, y + d)) >= two_d:
                return False
    return True


def probe(m: StaircaseInterval, n: StaircaseInterval, dprime) -> bool:
    """Whether the component criteria certify a ``dprime``-interleaving."""
    dprime = to_scalar(dprime)
    if not is_finite(dprime) or dprime <= 0:
        raise ValueError("dprime must be a positive finite number")
    return _side_passes(m, n, dprime) and _side_passes(n, m, dprime)


def _scale_factor(m, n):
    lcm = 1
    for c in m.coordinates() | n.coordinates():
        if is_finite(c):
            lcm = math.lcm(lcm, Fraction(c).denominator)
    # the factor 4 keeps every diagonal distance and its half integral
    return 4 * lcm


def _scaled(interval, k):
    def chain(vs):
        return [
            tuple(int(c * k) if is_finite(c) else c for c in v) for v in vs
        ]

    return StaircaseInterval(chain(interval.lower.vertices), chain(interval.upper.vertices))


def interleaving_distance(m: StaircaseInterval, n: StaircaseInterval):
    """The exact interleaving distance ``d_I(M, N)`` (``inf`` if none)."""
    k = _scale_factor(m, n)
    ms, ns = _scaled(m, k), _scaled(n, k)
    lower_bound = _delta_star(ms, ns)
    if lower_bound == INF:
        return INF
    values, _ = _raw_candidates(ms, ns)
    eps = _epsilon(values)
    pool = values[bisect_left(values, lower_bound):]
    lo, hi = 0, len(pool)
    while lo < hi:
        mid = (lo + hi) // 2
        d = pool[mid] + eps
        if _side_passes(ms, ns, d) and _side_passes(ns, ms, d):
            hi = mid
        else:
            lo = mid + 1
    if lo == len(pool):
        return INF
    return Fraction(pool[lo], k)
