"""SVG output of cased drawings.

Default painting is local: all edges first, then at every crossing a short
piece of the top edge is repainted, once as a wide background-colored
stroke (the casing) and once as a normal stroke.  That handles weaving
casings, which have no global order.  A stackable casing can instead be
painted edge by edge in stacking order (``order=``), each edge with its
casing stroke underneath.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional
from xml.sax.saxutils import quoteattr

from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing


@dataclass(frozen=True)
class SvgStyle:
    """Colors and sizes; lengths are in drawing units unless noted.

    ``margin`` is the casing strip on each side of a stroke and defaults to
    the drawing's casing width, so a lower edge loses about
    ``(edge_width + 2 * margin) / sin(alpha)`` of its length at a crossing.
    """

    edge_color: str = "#000000"
    background: str = "#ffffff"
    edge_width: Optional[float] = None  # default: casing width / 3
    margin: Optional[float] = None
    vertex_radius: Optional[float] = None  # default: edge width
    vertex_color: str = "#000000"
    scale: float = 50.0  # pixels per drawing unit
    padding: float = 1.0

    def resolved(self, d) -> "SvgStyle":
        w = float(d.casing_width)
        ew = self.edge_width if self.edge_width is not None else w / 3
        return replace(
            self,
            edge_width=ew,
            margin=self.margin if self.margin is not None else w,
            vertex_radius=self.vertex_radius if self.vertex_radius is not None else ew,
        )


def _fmt(x: float) -> str:
    text = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


class _Canvas:
    def __init__(self, d, style: SvgStyle):
        xs = [float(v.x) for v in d.vertices] or [0.0]
        ys = [float(v.y) for v in d.vertices] or [0.0]
        pad = style.padding
        self.x0, self.y1 = min(xs) - pad, max(ys) + pad
        self.width = (max(xs) + pad - self.x0) * style.scale
        self.height = (self.y1 - (min(ys) - pad)) * style.scale
        self.scale = style.scale

    def pt(self, p):
        # flip y so that the drawing's y axis points up
        return (float(p[0]) - self.x0) * self.scale, (self.y1 - float(p[1])) * self.scale

    def line(self, p, q, color, width, attrs=""):
        (x1, y1), (x2, y2) = self.pt(p), self.pt(q)
        return (
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="{_fmt(width * self.scale)}" stroke-linecap="butt"{attrs}/>'
        )


def render_svg(d, casing: Casing, style: SvgStyle = None, order=None) -> str:
    """SVG 1.1 text of ``d`` cased by ``casing``.

    With ``order`` (bottom first) edges are painted in that order instead of
    the crossing-local scheme; the casing must then be induced by the order.
    """
    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    d = arr.drawing
    casing.check_covers(arr)
    st = (style or SvgStyle()).resolved(d)
    cv = _Canvas(d, st)
    case_w = st.edge_width + 2 * st.margin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(cv.width)}" '
        f'height="{_fmt(cv.height)}" viewBox="0 0 {_fmt(cv.width)} {_fmt(cv.height)}">',
        f'<rect x="0" y="0" width="{_fmt(cv.width)}" height="{_fmt(cv.height)}" fill="{st.background}"/>',
    ]
    if order is None:
        out.append('<g id="edges">')
        for e in d.edges:
            p, q = d.segment(e.id)
            out.append(cv.line(p, q, st.edge_color, st.edge_width, f' data-edge="{e.id}"'))
        out.append("</g>")
        out.append('<g id="casings">')
        for c in arr.crossings:
            top = casing[c.key]
            p, q = d.segment(top)
            length = math.dist((float(p[0]), float(p[1])), (float(q[0]), float(q[1])))
            sin = math.sqrt(c.sin2)
            half = (case_w + st.edge_width) / (2 * sin) / length  # as a fraction of the edge
            t = float(c.param(top))
            t0, t1 = max(0.0, t - half), min(1.0, t + half)
            a = (float(p[0]) + t0 * (float(q[0]) - float(p[0])), float(p[1]) + t0 * (float(q[1]) - float(p[1])))
            b = (float(p[0]) + t1 * (float(q[0]) - float(p[0])), float(p[1]) + t1 * (float(q[1]) - float(p[1])))
            key = quoteattr(f"{c.edge_a}-{c.edge_b}")
            out.append(f'<g class="crossing" data-crossing={key} data-top="{top}">')
            out.append(cv.line(a, b, st.background, case_w, ' class="casing"'))
            out.append(cv.line(a, b, st.edge_color, st.edge_width, ' class="edge"'))
            out.append("</g>")
        out.append("</g>")
    else:
        height = {e: i for i, e in enumerate(order)}
        for c in arr.crossings:
            want = c.edge_a if height[c.edge_a] > height[c.edge_b] else c.edge_b
            if casing[c.key] != want:
                raise ValueError(f"casing at crossing {c.key} disagrees with the stacking order")
        out.append('<g id="stack">')
        for eid in order:
            p, q = d.segment(eid)
            out.append(f'<g class="edge" data-edge="{eid}">')
            out.append(cv.line(p, q, st.background, case_w, ' class="casing"'))
            out.append(cv.line(p, q, st.edge_color, st.edge_width, ' class="edge"'))
            out.append("</g>")
        out.append("</g>")
    out.append('<g id="vertices">')
    for v in d.vertices:
        x, y = cv.pt(v.point)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(st.vertex_radius * st.scale)}" fill="{st.vertex_color}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
