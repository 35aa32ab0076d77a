"""Connected components of the intersection of two staircase intervals.

The sweep visits the merged abscissae of both intervals.  At each event
``e`` the closed vertical section of the intersection is
``[max of the lows, min of the highs]``; on the open slab to the right of
``e`` the section is ``[LO(e), HI(next event)]`` because lows are
right-continuous and highs left-continuous.  A component is a maximal run of
non-empty event sections joined by non-empty slabs.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .extreal import INF, half, to_scalar
from .interval import StaircaseInterval, _from_trusted

__all__ = [
    "IntersectionComponent",
    "intersect_components",
    "is_valid",
    "vertex_criterion",
    "d_triv",
]


class IntersectionComponent(NamedTuple):
    region: StaircaseInterval


def _region(q):
    return q.region if isinstance(q, IntersectionComponent) else q


def component_chains(a: StaircaseInterval, b: StaircaseInterval, d=0):
    """Components of ``a ∩ (b - d)`` as raw ``(lower, upper, valid)`` triples.

    ``b - d`` is ``b`` moved by ``-d`` along the diagonal, i.e. the interval
    of the module ``b`` shifted by ``d``.  Vertices are plain tuples and the
    chains are not yet canonical.  ``valid`` is the ``(a, b - d)``-validity
    of the component (see :func:`is_valid`).
    """
    ax0, ax1 = a.x_range
    bx0, bx1 = b.x_range
    start = max(ax0, bx0 - d)
    stop = min(ax1, bx1 - d)
    if start > stop:
        return []
    events = set(a._lo.xs)
    events.update(a._hi.xs)
    events.update(x - d for x in b._lo.xs)
    events.update(x - d for x in b._hi.xs)
    events = sorted(e for e in events if start <= e <= stop)

    a_lx, a_ll = a._lo.xs, a._lo.last
    a_hx, a_hf = a._hi.xs, a._hi.first
    b_lx, b_ll = b._lo.xs, b._lo.last
    b_hx, b_hf = b._hi.xs, b._hi.first
    LO, HI, low_a, high_b = [], [], [], []
    for e in events:
        eb = e + d
        lo_a = a_ll[bisect_right(a_lx, e) - 1]
        lo_b = b_ll[bisect_right(b_lx, eb) - 1] - d
        hi_a = a_hf[bisect_left(a_hx, e)]
        hi_b = b_hf[bisect_left(b_hx, eb)] - d
        LO.append(lo_a if lo_a > lo_b else lo_b)
        HI.append(hi_a if hi_a < hi_b else hi_b)
        low_a.append(lo_a)
        high_b.append(hi_b)

    out = []
    n = len(events)
    k = 0
    while k < n:
        if LO[k] > HI[k]:
            k += 1
            continue
        i = k
        while k + 1 < n and LO[k] <= HI[k + 1]:
            k += 1
        lower, upper = _chains_for_run(events, LO, HI, i, k)
        valid = (
            LO[i:k + 1] == low_a[i:k + 1]
            and HI[i:k + 1] == high_b[i:k + 1]
            and _no_left_escape(a_lx, a_ll, events[i], HI[i])
            and _no_right_escape(b_hx, b_hf, events[k] + d, LO[k] + d)
        )
        out.append((lower, upper, valid))
        k += 1
    return out


def _no_left_escape(xs, last, x, top):
    # nothing of the source lies strictly left of x at height <= top
    i = bisect_left(xs, x)
    return i == 0 or last[i - 1] > top


def _no_right_escape(xs, first, x, bottom):
    # nothing of the target lies strictly right of x at height >= bottom
    i = bisect_right(xs, x)
    return i == len(xs) or first[i] < bottom


def _chains_for_run(events, LO, HI, i, j):
    e = events
    lower = [(e[i], HI[i]), (e[i], LO[i])]
    upper = [(e[i], HI[i])]
    for k in range(i, j):
        nxt = e[k + 1]
        lower.append((nxt, LO[k]))
        lower.append((nxt, LO[k + 1]))
        upper.append((e[k], HI[k + 1]))
        upper.append((nxt, HI[k + 1]))
    upper.append((e[j], LO[j]))
    return lower, upper


def intersect_components(a: StaircaseInterval, b: StaircaseInterval):
    """Components of ``a ∩ b`` ordered by their top-left extreme."""
    return [
        IntersectionComponent(_from_trusted(lo, up))
        for lo, up, _ in component_chains(a, b)
    ]


def is_valid(q, m: StaircaseInterval, n: StaircaseInterval) -> bool:
    """Whether the constant-one map on ``q`` extends by zero to a morphism ``m -> n``.

    Pointwise this asks that nothing below a point of ``q`` lies in ``m``
    but not in ``n``, and nothing above lies in ``n`` but not in ``m``.
    Because ``q`` is a whole component this is the same as ``↓q ∩ m = q``
    and ``↑q ∩ n = q``: along the x-range of ``q`` its lower envelope is
    that of ``m`` and its upper envelope that of ``n``, ``m`` does not
    continue to the left of ``q`` at or below its top-left corner, and ``n``
    does not continue to the right of ``q`` at or above its bottom-right
    corner.  The last two conditions are not implied by the boundary
    vertices of ``q`` lying on ``L(m)`` and ``U(n)``; see
    :func:`vertex_criterion`.
    """
    region = _region(q)
    x0, x1 = region.x_range
    events = set(region._lo.xs) | set(region._hi.xs)
    events.update(m._lo.xs)
    events.update(n._hi.xs)
    for e in events:
        if x0 <= e <= x1:
            if region.low(e) != m.low(e) or region.high(e) != n.high(e):
                return False
    return _no_left_escape(m._lo.xs, m._lo.last, x0, region.top_left.y) and _no_right_escape(
        n._hi.xs, n._hi.first, x1, region.bottom_right.y
    )


def vertex_criterion(q, m: StaircaseInterval, n: StaircaseInterval) -> bool:
    """Every lower-chain vertex of ``q`` on ``L(m)`` and every upper-chain vertex on ``U(n)``.

    Necessary for validity, and sufficient when no boundary of ``q`` shares
    a supporting line with a boundary edge of ``m`` or ``n`` beyond ``q``.
    Example of the gap: ``m = [4,5]x[4,8]``, ``n`` containing ``[3,5]x[2,5]``
    and ``(5,7]x[0,4]``; the square ``[4,5]x[4,5]`` passes this test, yet
    ``(6,4) >= (5,4)`` lies in ``n`` and not in ``m``.
    """
    region = _region(q)
    on_lower = m.lower.contains_point
    on_upper = n.upper.contains_point
    return all(on_lower(v) for v in region.lower.vertices) and all(
        on_upper(v) for v in region.upper.vertices
    )


def d_triv(q, m: StaircaseInterval, n: StaircaseInterval):
    """Largest trivialization requirement over ``q``, evaluated at its vertices.

    ``q`` is δ-trivializable for the pair ``(m, n)`` iff the result is < δ.
    """
    region = _region(q)
    best = 0
    for v in region.vertices:
        d = max(m.upper.dl(v), n.lower.dl(v))
        if d > best:
            best = d
            if best == INF:
                break
    return to_scalar(half(best))
