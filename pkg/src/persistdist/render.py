"""SVG pictures of staircase intervals (presentation only, floats are fine here)."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .extreal import format_scalar, is_finite
from .intersection import intersect_components
from .interval import shift as shift_interval

__all__ = ["default_frame", "render_svg"]

_STYLES = {
    "a": ("#1f77b4", "0.25", ""),
    "b": ("#ff7f0e", "0.25", ""),
    "shifted": ("#ff7f0e", "0.10", "6 4"),
    "component": ("#2ca02c", "0.55", ""),
}


def default_frame(intervals, pad=1):
    xs = [v.x for iv in intervals for v in iv.vertices if is_finite(v.x)]
    ys = [v.y for iv in intervals for v in iv.vertices if is_finite(v.y)]
    xs = xs or [0]
    ys = ys or [0]
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


class _Canvas:
    def __init__(self, frame, size):
        self.x0, self.y0, self.x1, self.y1 = (float(c) for c in frame)
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("frame must have positive width and height")
        self.size = size
        self.scale = size / max(self.x1 - self.x0, self.y1 - self.y0)

    def clip(self, v):
        # infinite coordinates land on the frame edge
        x = self.x1 if v.x == float("inf") else self.x0 if v.x == -float("inf") else float(v.x)
        y = self.y1 if v.y == float("inf") else self.y0 if v.y == -float("inf") else float(v.y)
        return x, y

    def px(self, x, y):
        return (x - self.x0) * self.scale, self.size - (y - self.y0) * self.scale


def _outline(interval):
    pts = list(interval.lower.vertices) + list(reversed(interval.upper.vertices))[1:-1]
    return pts


def _infinite_edges(interval):
    for chain in (interval.lower, interval.upper):
        vs = chain.vertices
        for a, b in zip(vs, vs[1:]):
            if a.is_finite() != b.is_finite():
                yield (a, b) if a.is_finite() else (b, a)


def _shape(canvas, interval, style):
    color, opacity, dash = _STYLES[style]
    pts = [canvas.px(*canvas.clip(v)) for v in _outline(interval)]
    d = "M " + " L ".join(f"{x:.2f} {y:.2f}" for x, y in pts) + " Z"
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    out = [
        f'<path d="{d}" fill="{color}" fill-opacity="{opacity}" stroke="{color}" '
        f'stroke-width="1.5"{dash_attr}/>'
    ]
    for finite, far in _infinite_edges(interval):
        (ax, ay), (bx, by) = canvas.px(*canvas.clip(finite)), canvas.px(*canvas.clip(far))
        out.append(
            f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="{color}" '
            f'stroke-width="1.5" marker-end="url(#arrow)"/>'
        )
    return out


def render_svg(intervals_a, intervals_b=(), shift=None, frame=None, size=480, title=None) -> str:
    """SVG of the ``a`` intervals, the ``b`` intervals and, when ``shift`` is
    given, ``b`` shifted by it together with the components of ``a ∩ shift(b)``."""
    intervals_a, intervals_b = list(intervals_a), list(intervals_b)
    shifted = []
    if shift is not None:
        shifted = [shift_interval(b, shift) for b in intervals_b]
    if frame is None:
        frame = default_frame(intervals_a + intervals_b + shifted)
    canvas = _Canvas(frame, size)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
        "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333\"/></marker></defs>",
    ]
    if title:
        parts.append(f"<title>{escape(title)}</title>")
    fx0, fy0 = canvas.px(canvas.x0, canvas.y0)
    fx1, fy1 = canvas.px(canvas.x1, canvas.y1)
    parts.append(
        f'<rect x="{fx0:.2f}" y="{fy1:.2f}" width="{fx1 - fx0:.2f}" height="{fy0 - fy1:.2f}" '
        'fill="none" stroke="#bbb"/>'
    )
    for iv in intervals_a:
        parts += _shape(canvas, iv, "a")
    if shift is None:
        for iv in intervals_b:
            parts += _shape(canvas, iv, "b")
    else:
        for iv in shifted:
            parts += _shape(canvas, iv, "shifted")
        for a in intervals_a:
            for b in shifted:
                for comp in intersect_components(a, b):
                    parts += _shape(canvas, comp.region, "component")
        parts.append(
            f'<text x="6" y="16" font-family="sans-serif" font-size="12">'
            f"shift {escape(format_scalar(shift))}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
