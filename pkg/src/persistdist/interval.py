"""Closed, discretely presented 2-parameter intervals.

An interval is stored as two monotone rectilinear chains that share their
first vertex (the top-left extreme) and their last vertex (the bottom-right
extreme).  The lower chain runs down the left side and along the bottom; the
upper chain runs along the top and down the right side.  For every abscissa
the vertical section of the region is the closed segment between the lowest
point of the lower chain and the highest point of the upper chain there.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .errors import (
    ChainsEndpointMismatch,
    EmptyRegion,
    NonMonotoneChain,
    NonRectilinearEdge,
)
from .extreal import (
    INF,
    format_scalar,
    MonotoneChain,
    Point,
    half,
    is_finite,
    to_scalar,
)

__all__ = [
    "StaircaseInterval",
    "IntervalModule",
    "validate",
    "contains",
    "shift",
    "boundary_vertices",
    "trivial_threshold",
    "rectangle",
    "from_slabs",
]


class _Steps:
    """Vertical-step summary of one chain: per distinct x, first and last y."""

    __slots__ = ("xs", "first", "last")

    def __init__(self, vertices):
        xs, first, last = [], [], []
        for x, y in vertices:
            if xs and xs[-1] == x:
                last[-1] = y
            else:
                xs.append(x)
                first.append(y)
                last.append(y)
        self.xs, self.first, self.last = xs, first, last


class StaircaseInterval:
    """A validated staircase interval; build one with :func:`validate`."""

    __slots__ = ("lower", "upper", "_lo", "_hi")

    def __init__(self, lower, upper):
        self.lower = lower if isinstance(lower, MonotoneChain) else MonotoneChain(lower)
        self.upper = upper if isinstance(upper, MonotoneChain) else MonotoneChain(upper)
        self._lo = _Steps(self.lower.vertices)
        self._hi = _Steps(self.upper.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, StaircaseInterval)
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __hash__(self):
        return hash((self.lower.vertices, self.upper.vertices))

    def __repr__(self):
        lower = [tuple(map(str, v)) for v in self.lower.vertices]
        upper = [tuple(map(str, v)) for v in self.upper.vertices]
        return f"StaircaseInterval(lower={lower}, upper={upper})"

    @property
    def top_left(self) -> Point:
        return self.lower.vertices[0]

    @property
    def bottom_right(self) -> Point:
        return self.lower.vertices[-1]

    @property
    def x_range(self):
        return self.lower.vertices[0].x, self.lower.vertices[-1].x

    @property
    def vertices(self):
        """All vertices V(I), lower chain first, without repeats."""
        seen = dict.fromkeys(self.lower.vertices)
        seen.update(dict.fromkeys(self.upper.vertices))
        return tuple(seen)

    @property
    def is_bounded(self) -> bool:
        return all(v.is_finite() for v in self.vertices)

    def coordinates(self):
        return {c for v in self.vertices for c in v}

    def low(self, x):
        """Bottom of the vertical section at ``x`` (x inside the x-range)."""
        s = self._lo
        return s.last[bisect_right(s.xs, x) - 1]

    def high(self, x):
        """Top of the vertical section at ``x`` (x inside the x-range)."""
        s = self._hi
        return s.first[bisect_left(s.xs, x)]

    def contains(self, p) -> bool:
        x, y = p
        x0, x1 = self.x_range
        if x < x0 or x > x1:
            return False
        return self.low(x) <= y <= self.high(x)

    def breakpoints(self):
        """Sorted distinct abscissae of all vertices."""
        return sorted(set(self._lo.xs) | set(self._hi.xs))

    def translated(self, d) -> "StaircaseInterval":
        """The region moved by ``+d`` along the diagonal."""
        return StaircaseInterval(self.lower.translated(d), self.upper.translated(d))


class IntervalModule(tuple):
    """A finite multiset of staircase intervals, the summands of a module."""

    def __new__(cls, summands=()):
        items = tuple(summands)
        for s in items:
            if not isinstance(s, StaircaseInterval):
                raise TypeError(f"summands must be StaircaseInterval, got {type(s).__name__}")
        return super().__new__(cls, items)

    def __repr__(self):
        return f"IntervalModule({list(self)!r})"


def _pt(p):
    return f"({format_scalar(p[0])}, {format_scalar(p[1])})"


def _canonical_chain(vertices, name):
    pts = []
    for v in vertices:
        x, y = v
        p = Point(to_scalar(x), to_scalar(y))
        if not pts or pts[-1] != p:
            pts.append(p)
    if not pts:
        raise NonMonotoneChain(f"{name} chain is empty")
    for a, b in zip(pts, pts[1:]):
        if a.x != b.x and a.y != b.y:
            raise NonRectilinearEdge(
                f"{name} chain edge {_pt(a)} -> {_pt(b)} is neither horizontal nor vertical"
            )
    return pts


def _check_monotone(pts, name):
    for a, b in zip(pts, pts[1:]):
        if b.x < a.x or b.y > a.y:
            raise NonMonotoneChain(
                f"{name} chain must have x non-decreasing and y non-increasing; "
                f"edge {_pt(a)} -> {_pt(b)} violates this"
            )


def _check_region(interval):
    # on each open slab between breakpoints the lower envelope must not
    # exceed the upper one
    events = interval.breakpoints()
    for a, b in zip(events, events[1:]):
        lo = interval.low(a)
        hi = interval.high(b)
        if lo > hi:
            raise EmptyRegion(
                f"lower chain lies above the upper chain between x={format_scalar(a)} and x={format_scalar(b)}"
            )
    for e in events:
        if interval.low(e) > interval.high(e):
            raise EmptyRegion(f"lower chain lies above the upper chain at x={format_scalar(e)}")


def validate(lower_vertices, upper_vertices) -> StaircaseInterval:
    """Build a canonical :class:`StaircaseInterval` or raise an ``IntervalError``.

    Consecutive duplicate vertices are dropped and collinear runs merged.
    """
    lower = _canonical_chain(lower_vertices, "lower")
    upper = _canonical_chain(upper_vertices, "upper")
    if lower[0] != upper[0] or lower[-1] != upper[-1]:
        raise ChainsEndpointMismatch(
            f"chains must share endpoints: lower runs {_pt(lower[0])} -> {_pt(lower[-1])}, "
            f"upper runs {_pt(upper[0])} -> {_pt(upper[-1])}"
        )
    # monotonicity is checked before merging so that a chain doubling back
    # along one line is rejected instead of silently shortened
    _check_monotone(lower, "lower")
    _check_monotone(upper, "upper")
    interval = StaircaseInterval(MonotoneChain(_merge(lower)), MonotoneChain(_merge(upper)))
    _check_region(interval)
    return interval


def _from_trusted(lower, upper) -> StaircaseInterval:
    """Canonicalize chains known to be monotone and consistent (no checks)."""
    return StaircaseInterval(MonotoneChain(_merge(lower)), MonotoneChain(_merge(upper)))


def _merge(pts):
    out = []
    for p in pts:
        if out and out[-1] == p:
            continue
        if len(out) >= 2:
            a, b = out[-2], out[-1]
            if (a[0] == b[0] == p[0]) or (a[1] == b[1] == p[1]):
                out[-1] = p
                continue
        out.append(p)
    return [Point(*p) for p in out]


def contains(interval: StaircaseInterval, p) -> bool:
    return interval.contains(p)


def shift(interval: StaircaseInterval, d) -> StaircaseInterval:
    """Interval of the diagonally shifted module: ``{x : x + d in I}``."""
    return interval.translated(-to_scalar(d))


def boundary_vertices(interval: StaircaseInterval):
    """``(VL, VU)``: vertices of the lower and the upper chain, in chain order."""
    return interval.lower.vertices, interval.upper.vertices


def trivial_threshold(interval: StaircaseInterval):
    """Half the longest diagonal run inside the interval.

    This is the interleaving distance to the zero module; the module is
    2δ-trivial exactly when δ exceeds it.
    """
    upper = interval.upper
    best = 0
    for v in interval.lower.vertices:
        d = upper.dl(v)
        if d > best:
            best = d
            if best == INF:
                break
    return to_scalar(half(best))


def rectangle(x0, y0, x1, y1) -> StaircaseInterval:
    """The closed rectangle ``[x0, x1] x [y0, y1]``."""
    return validate([(x0, y1), (x0, y0), (x1, y0)], [(x0, y1), (x1, y1), (x1, y0)])


def from_slabs(breaks, lows, highs) -> StaircaseInterval:
    """Interval whose section over the k-th slab ``(breaks[k], breaks[k+1])``
    is ``[lows[k], highs[k]]``.

    Both ``lows`` and ``highs`` must be non-increasing.  A single break with
    one low/high pair gives a vertical segment (or a point).
    """
    if len(breaks) == 1:
        (x,), (lo,), (hi,) = breaks, lows, highs
        return validate([(x, hi), (x, lo)], [(x, hi), (x, lo)])
    if len(lows) != len(breaks) - 1 or len(highs) != len(breaks) - 1:
        raise ValueError("need one (low, high) pair per slab")
    lower = [(breaks[0], highs[0]), (breaks[0], lows[0])]
    upper = [(breaks[0], highs[0])]
    for k in range(len(lows)):
        lower.append((breaks[k + 1], lows[k]))
        if k + 1 < len(lows):
            lower.append((breaks[k + 1], lows[k + 1]))
        upper.append((breaks[k + 1], highs[k]))
        if k + 1 < len(highs):
            upper.append((breaks[k + 1], highs[k + 1]))
    upper.append((breaks[-1], lows[-1]))
    return validate(lower, upper)
