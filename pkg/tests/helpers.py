"""Shared strategies and independent geometric checks for the tests."""

import random
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from persistdist.generate import random_interval

DATA = Path(__file__).parent / "data"
FORMAT_DIR = Path(__file__).resolve().parent.parent / "docs" / "format"


@st.composite
def intervals(draw, low=0, high=8):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_interval(random.Random(seed), low=low, high=high)


def polygon_contains(interval, p):
    """Closed point-in-polygon test on the outline, by ray casting.

    Works only for finite vertices.  Independent of the chain envelopes used
    by ``StaircaseInterval.contains``.
    """
    px, py = Fraction(p[0]), Fraction(p[1])
    outline = list(interval.lower.vertices) + list(reversed(interval.upper.vertices))
    edges = list(zip(outline, outline[1:]))
    for (ax, ay), (bx, by) in edges:
        if min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
            # rectilinear edges: the bounding box is the edge itself
            return True
    inside = False
    for (ax, ay), (bx, by) in edges:
        if (ay > py) != (by > py):
            x_cross = ax + (py - ay) * (bx - ax) / (by - ay)
            if x_cross > px:
                inside = not inside
    return inside
