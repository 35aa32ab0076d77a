"""Exact extended reals, points of the extended plane and diagonal geometry.

Finite values are :class:`fractions.Fraction` (plain ``int`` is accepted on
input and inside hot loops, since the two compare and hash identically).
The two infinities are the float values ``INF`` and ``NEG_INF``; Python's
mixed arithmetic already gives ``a + inf == inf`` for finite ``a``, which is
exactly the absorbing rule we need.  The one forbidden operation is
``inf - inf``, and every routine below is arranged so it never happens.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

__all__ = [
    "INF",
    "NEG_INF",
    "ExtendedScalar",
    "Point",
    "DiagonalLine",
    "MonotoneChain",
    "to_scalar",
    "is_finite",
    "ext_add",
    "half",
    "dist_inf",
    "diag_project_chain",
    "format_scalar",
]

INF = math.inf
NEG_INF = -math.inf

ExtendedScalar = Union[Fraction, int, float]


def to_scalar(value) -> ExtendedScalar:
    """Convert ``value`` to a canonical extended scalar.

    Accepts ints, Fractions, floats (converted exactly), and strings such as
    ``"3"``, ``"-1/3"``, ``"0.25"``, ``"inf"`` and ``"-inf"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if math.isnan(value):
            raise ValueError("NaN is not an extended real")
        if math.isinf(value):
            return INF if value > 0 else NEG_INF
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "+inf", "infinity", "+infinity"):
            return INF
        if text in ("-inf", "-infinity"):
            return NEG_INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact number: {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as an extended real")


def is_finite(value: ExtendedScalar) -> bool:
    return not (isinstance(value, float) and math.isinf(value))


def ext_add(a: ExtendedScalar, d) -> ExtendedScalar:
    """Return ``a + d`` for finite ``d``; infinities absorb."""
    if not is_finite(d):
        raise ValueError("the increment must be finite")
    if not is_finite(a):
        return a
    return a + d


def half(value: ExtendedScalar) -> ExtendedScalar:
    if not is_finite(value):
        return value
    if isinstance(value, int) and value % 2 == 0:
        return value // 2
    return Fraction(value) / 2


def format_scalar(value: ExtendedScalar) -> str:
    """Exact text form: ``"2"``, ``"-1/3"``, ``"inf"``."""
    if value == INF:
        return "inf"
    if value == NEG_INF:
        return "-inf"
    return str(Fraction(value))


def _coord_gap(a: ExtendedScalar, b: ExtendedScalar) -> ExtendedScalar:
    # equal infinities are 0 apart, any other pairing with an infinity is inf
    if a == b:
        return 0
    if not is_finite(a) or not is_finite(b):
        return INF
    return abs(a - b)


class Point(NamedTuple):
    x: ExtendedScalar
    y: ExtendedScalar

    def shifted(self, d) -> "Point":
        """Translate along the diagonal by ``d`` (finite)."""
        return Point(ext_add(self.x, d), ext_add(self.y, d))

    def is_finite(self) -> bool:
        return is_finite(self.x) and is_finite(self.y)


def dist_inf(p: Sequence, q: Sequence) -> ExtendedScalar:
    """Max-norm distance on the extended plane."""
    return max(_coord_gap(p[0], q[0]), _coord_gap(p[1], q[1]))


class DiagonalLine:
    """The slope-one line through ``anchor``.

    With one infinite coordinate the line is the set of points sharing that
    coordinate; with two it degenerates to the anchor itself.
    """

    __slots__ = ("anchor", "_key")

    def __init__(self, anchor):
        self.anchor = Point(*anchor)
        x, y = self.anchor
        if is_finite(x) and is_finite(y):
            self._key = ("diag", x - y)
        elif is_finite(x):
            self._key = ("y", y)
        elif is_finite(y):
            self._key = ("x", x)
        else:
            self._key = ("point", x, y)

    def __eq__(self, other):
        return isinstance(other, DiagonalLine) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"DiagonalLine({tuple(self.anchor)!r})"

    def point_at(self, offset) -> Point:
        if self._key[0] == "point":
            if offset != 0:
                raise ValueError("a degenerate line has only offset 0")
            return self.anchor
        return self.anchor.shifted(offset)

    def offset_of(self, p) -> ExtendedScalar:
        """Signed offset of ``p`` (assumed on the line) from the anchor."""
        x, y = self.anchor
        if is_finite(x):
            return p[0] - x if is_finite(p[0]) else p[0]
        if is_finite(y):
            return p[1] - y if is_finite(p[1]) else p[1]
        return 0


class MonotoneChain:
    """A rectilinear chain with x non-decreasing and y non-increasing.

    Construction does no validation (see :func:`persistdist.interval.validate`);
    it only builds the lookup tables used for diagonal projection.
    """

    __slots__ = ("vertices", "_glo", "_ghi", "_kind", "_fixed", "_vertex_set")

    def __init__(self, vertices):
        self.vertices = tuple(Point(*v) for v in vertices)
        self._glo = None

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, MonotoneChain) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"MonotoneChain({[tuple(v) for v in self.vertices]!r})"

    def _build(self):
        # Index the edges that carry finite points by the range of x - y they
        # cover.  The ranges are sorted and only touch at shared vertices.
        glo, ghi, kind, fixed = [], [], [], []
        vs = self.vertices
        if len(vs) == 1:
            v = vs[0]
            if v.is_finite():
                g = v.x - v.y
                glo.append(g)
                ghi.append(g)
                kind.append(2)
                fixed.append(v)
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if x1 == x2:
                if not is_finite(x1):
                    continue
                glo.append(x1 - y1)
                ghi.append(x1 - y2)
                kind.append(0)
                fixed.append(x1)
            else:
                if not is_finite(y1):
                    continue
                glo.append(x1 - y1)
                ghi.append(x2 - y1)
                kind.append(1)
                fixed.append(y1)
        self._glo, self._ghi, self._kind, self._fixed = glo, ghi, kind, fixed
        self._vertex_set = frozenset(vs)

    def project(self, q) -> Optional[tuple]:
        """Intersect the diagonal through ``q`` with the chain.

        Returns ``(point, distance)`` for the nearest intersection point, or
        ``None`` when the diagonal misses the chain.
        """
        if self._glo is None:
            self._build()
        qx, qy = q
        fx = is_finite(qx)
        fy = is_finite(qy)
        if fx and fy:
            c = qx - qy
            i = bisect_right(self._glo, c) - 1
            if i < 0 or c > self._ghi[i]:
                return None
            k = self._kind[i]
            f = self._fixed[i]
            if k == 0:
                return Point(f, f - c), abs(f - qx)
            if k == 1:
                return Point(f + c, f), abs(f - qy)
            return f, abs(f.x - qx)
        if fx or fy:
            return self._project_at_infinity(qx, qy, fx)
        if Point(qx, qy) in self._vertex_set:
            return Point(qx, qy), 0
        return None

    def _project_at_infinity(self, qx, qy, x_is_finite):
        # the "diagonal" is the line at infinity sharing q's infinite coordinate
        vs = self.vertices
        if x_is_finite:
            block = [v for v in vs if v.y == qy]
            if not block:
                return None
            lo, hi, a = block[0].x, block[-1].x, qx
        else:
            block = [v for v in vs if v.x == qx]
            if not block:
                return None
            lo, hi, a = block[-1].y, block[0].y, qy
        nearest = min(max(a, lo), hi)
        if not is_finite(nearest):
            return None
        dist = abs(nearest - a)
        if x_is_finite:
            return Point(nearest, qy), dist
        return Point(qx, nearest), dist

    def contains_point(self, p) -> bool:
        hit = self.project(p)
        return hit is not None and hit[1] == 0

    def dl(self, q) -> ExtendedScalar:
        hit = self.project(q)
        return INF if hit is None else hit[1]

    def translated(self, d) -> "MonotoneChain":
        """Move every vertex by ``+d`` along the diagonal."""
        return MonotoneChain(v.shifted(d) for v in self.vertices)


def diag_project_chain(x, chain: MonotoneChain) -> Optional[tuple]:
    """``(projection point, dl)`` of ``x`` onto ``chain``, or ``None``."""
    return chain.project(x)
