"""Exact planar geometry for straight-line drawings.

Coordinates are :class:`~fractions.Fraction` throughout.  Nothing here uses a
tolerance to decide incidence; ``near_tolerance`` in :func:`validate_drawing`
is a modelling parameter, not a numerical one.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from ._exact import RootSum, as_fraction
from .exceptions import DegenerateOverlap, InvalidDrawingError, ParallelEdges

Point = tuple  # (Fraction, Fraction)


class Vertex(NamedTuple):
    id: int
    x: Fraction
    y: Fraction

    @property
    def point(self) -> Point:
        return (self.x, self.y)


class Edge(NamedTuple):
    id: int
    u: int
    v: int


@dataclass(frozen=True)
class Drawing:
    """A straight-line drawing with a casing width.

    Vertex coordinates and ``casing_width`` are converted to exact rationals;
    pass decimal strings or Fractions, never binary floats.
    """

    vertices: tuple
    edges: tuple
    casing_width: Fraction = Fraction(1)
    _vindex: dict = field(init=False, repr=False, compare=False)
    _eindex: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(Vertex(int(v[0]), as_fraction(v[1]), as_fraction(v[2])) for v in self.vertices)
        edges = tuple(Edge(int(e[0]), int(e[1]), int(e[2])) for e in self.edges)
        w = as_fraction(self.casing_width)
        vindex = {}
        for v in verts:
            if v.id in vindex:
                raise InvalidDrawingError(f"duplicate vertex id {v.id}")
            vindex[v.id] = v
        eindex = {}
        for e in edges:
            if e.id in eindex:
                raise InvalidDrawingError(f"duplicate edge id {e.id}")
            for end in (e.u, e.v):
                if end not in vindex:
                    raise InvalidDrawingError(f"edge {e.id} references missing vertex {end}")
            if vindex[e.u].point == vindex[e.v].point:
                raise InvalidDrawingError(f"edge {e.id} has zero length")
            eindex[e.id] = e
        if w <= 0:
            raise InvalidDrawingError("casing_width must be positive")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "casing_width", w)
        object.__setattr__(self, "_vindex", vindex)
        object.__setattr__(self, "_eindex", eindex)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex(self, vid: int) -> Vertex:
        return self._vindex[vid]

    def edge(self, eid: int) -> Edge:
        return self._eindex[eid]

    def segment(self, eid: int) -> tuple:
        e = self._eindex[eid]
        return (self._vindex[e.u].point, self._vindex[e.v].point)

    def degree(self, vid: int) -> int:
        return sum((e.u == vid) + (e.v == vid) for e in self.edges)

    def subdrawing(self, edge_ids) -> "Drawing":
        """The drawing restricted to ``edge_ids`` and their endpoints."""
        keep = sorted(set(edge_ids))
        edges = [self._eindex[i] for i in keep]
        used = sorted({e.u for e in edges} | {e.v for e in edges})
        return Drawing([self._vindex[v] for v in used], edges, self.casing_width)

    def scaled(self, factor) -> "Drawing":
        f = as_fraction(factor)
        return Drawing([(v.id, v.x * f, v.y * f) for v in self.vertices], self.edges, self.casing_width * f)


class SegmentHit(NamedTuple):
    point: Point
    t: Fraction  # position along the first segment
    u: Fraction  # position along the second segment


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def segment_intersection(s1, s2) -> Optional[SegmentHit]:
    """Transversal interior intersection of two closed segments.

    Returns ``None`` when the segments are disjoint, touch at an endpoint, or
    are collinear without overlap.  Raises :class:`DegenerateOverlap` if they
    overlap along a positive length.
    """
    (p1x, p1y), (p2x, p2y) = s1
    (q1x, q1y), (q2x, q2y) = s2
    rx, ry = p2x - p1x, p2y - p1y
    sx, sy = q2x - q1x, q2y - q1y
    wx, wy = q1x - p1x, q1y - p1y
    denom = _cross(rx, ry, sx, sy)
    if denom == 0:
        if _cross(wx, wy, rx, ry) != 0:
            return None
        rr = rx * rx + ry * ry
        t0 = Fraction(wx * rx + wy * ry) / rr
        t1 = Fraction((q2x - p1x) * rx + (q2y - p1y) * ry) / rr
        lo, hi = max(Fraction(0), min(t0, t1)), min(Fraction(1), max(t0, t1))
        if hi > lo:
            raise DegenerateOverlap(f"segments {s1} and {s2} overlap")
        return None
    t = Fraction(_cross(wx, wy, sx, sy)) / denom
    if not 0 < t < 1:
        return None
    u = Fraction(_cross(wx, wy, rx, ry)) / denom
    if not 0 < u < 1:
        return None
    return SegmentHit((p1x + t * rx, p1y + t * ry), t, u)


def crossing_angle_sin2(s1, s2) -> Fraction:
    """Exact sin^2 of the angle between the supporting lines of two segments."""
    (p1x, p1y), (p2x, p2y) = s1
    (q1x, q1y), (q2x, q2y) = s2
    d1x, d1y = p2x - p1x, p2y - p1y
    d2x, d2y = q2x - q1x, q2y - q1y
    c = _cross(d1x, d1y, d2x, d2y)
    if c == 0:
        raise ParallelEdges("parallel edges have no crossing angle")
    return Fraction(c * c) / ((d1x * d1x + d1y * d1y) * (d2x * d2x + d2y * d2y))


def crossing_angle_sin(s1, s2) -> RootSum:
    """sin of the acute (or right) crossing angle, as an exact :class:`RootSum`."""
    return RootSum.sqrt(crossing_angle_sin2(s1, s2))


def _sin2_of(sin_alpha) -> Fraction:
    if isinstance(sin_alpha, RootSum):
        if len(sin_alpha.terms) != 1 or sin_alpha.terms[0][0] < 0:
            raise ValueError("sin_alpha must be a single non-negative square root")
        c, r = sin_alpha.terms[0]
        return c * c * r
    s = as_fraction(sin_alpha)
    return s * s


def tunnel_length(w, sin_alpha) -> RootSum:
    """Length ``w / sin(alpha)`` of a tunnel, exactly."""
    w = as_fraction(w)
    return RootSum.sqrt(w * w / _sin2_of(sin_alpha))


@dataclass(frozen=True)
class Crossing:
    id: int
    edge_a: int
    edge_b: int
    point: Point
    param_a: Fraction
    param_b: Fraction
    sin2: Fraction

    @property
    def key(self) -> tuple:
        return (self.edge_a, self.edge_b)

    @property
    def angle_sin(self) -> RootSum:
        return RootSum.sqrt(self.sin2)

    def param(self, edge_id: int) -> Fraction:
        return self.param_a if edge_id == self.edge_a else self.param_b

    def other(self, edge_id: int) -> int:
        return self.edge_b if edge_id == self.edge_a else self.edge_a

    def tunnel_length2(self, w: Fraction) -> Fraction:
        """Squared tunnel length ``w^2 / sin^2(alpha)``."""
        return w * w / self.sin2


def _float_boxes(d: Drawing):
    segs = [d.segment(e.id) for e in d.edges]
    arr = np.array([[float(a[0]), float(a[1]), float(b[0]), float(b[1])] for a, b in segs], dtype=float)
    if not len(arr):
        arr = np.zeros((0, 4))
    lo = np.minimum(arr[:, :2], arr[:, 2:])
    hi = np.maximum(arr[:, :2], arr[:, 2:])
    pad = 1e-9 * max(1.0, float(np.abs(arr).max()) if len(arr) else 1.0)
    return segs, lo - pad, hi + pad


def find_crossings(d: Drawing):
    """All pairwise crossings plus overlapping edge pairs.

    Candidate pairs come from a float bounding-box sweep (padded); every
    decision is then made exactly.
    """
    segs, lo, hi = _float_boxes(d)
    ids = [e.id for e in d.edges]
    order = np.argsort(lo[:, 0], kind="stable")
    found = []
    overlaps = []
    for pos, i in enumerate(order):
        hx = hi[i, 0]
        for j in order[pos + 1:]:
            if lo[j, 0] > hx:
                break
            if lo[j, 1] > hi[i, 1] or lo[i, 1] > hi[j, 1]:
                continue
            a, b = (i, j) if ids[i] < ids[j] else (j, i)
            try:
                hit = segment_intersection(segs[a], segs[b])
            except DegenerateOverlap:
                overlaps.append((ids[a], ids[b]))
                continue
            if hit is not None:
                found.append((ids[a], ids[b], hit, crossing_angle_sin2(segs[a], segs[b])))
    found.sort(key=lambda f: (f[0], f[1]))
    crossings = [Crossing(n, a, b, hit.point, hit.t, hit.u, s2) for n, (a, b, hit, s2) in enumerate(found)]
    overlaps.sort()
    return crossings, overlaps


@dataclass(frozen=True)
class Issue:
    kind: str
    message: str
    items: tuple = ()


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_for_errors(self):
        if self.errors:
            summary = "; ".join(e.message for e in self.errors[:5])
            more = f" (+{len(self.errors) - 5} more)" if len(self.errors) > 5 else ""
            raise InvalidDrawingError(f"invalid drawing: {summary}{more}", self)


def point_segment_dist2(p, s) -> Fraction:
    (ax, ay), (bx, by) = s
    dx, dy = bx - ax, by - ay
    t = Fraction((p[0] - ax) * dx + (p[1] - ay) * dy) / (dx * dx + dy * dy)
    t = min(Fraction(1), max(Fraction(0), t))
    ex, ey = ax + t * dx - p[0], ay + t * dy - p[1]
    return ex * ex + ey * ey


def validate_drawing(d: Drawing, near_tolerance=None, crossings=None, overlaps=None) -> ValidationReport:
    """Check the input restrictions a drawing must satisfy before casing.

    Errors: a vertex on or within ``near_tolerance`` of a non-incident edge
    (``vertex-near-edge``); three or more edges through one point
    (``concurrent``); edges overlapping along a positive length (``overlap``).
    Warning: consecutive crossings on an edge closer than half the sum of
    their tunnel lengths (``crossings-close``).  ``near_tolerance`` defaults to
    half the casing width.
    """
    report = ValidationReport()
    w = d.casing_width
    tol = w / 2 if near_tolerance is None else as_fraction(near_tolerance)
    tol2 = tol * tol

    segs, lo, hi = _float_boxes(d)
    if d.vertices:
        vxy = np.array([[float(v.x), float(v.y)] for v in d.vertices])
        ftol = float(tol)
        for idx, e in enumerate(d.edges):
            mask = (
                (vxy[:, 0] >= lo[idx, 0] - ftol)
                & (vxy[:, 0] <= hi[idx, 0] + ftol)
                & (vxy[:, 1] >= lo[idx, 1] - ftol)
                & (vxy[:, 1] <= hi[idx, 1] + ftol)
            )
            for vi in np.nonzero(mask)[0]:
                v = d.vertices[vi]
                if v.id in (e.u, e.v):
                    continue
                if point_segment_dist2(v.point, segs[idx]) <= tol2:
                    report.errors.append(
                        Issue("vertex-near-edge", f"vertex {v.id} lies on or near edge {e.id}", (v.id, e.id))
                    )

    if crossings is None:
        crossings, overlaps = find_crossings(d)
    for a, b in overlaps or ():
        report.errors.append(Issue("overlap", f"edges {a} and {b} overlap", (a, b)))

    at_point = defaultdict(set)
    for c in crossings:
        at_point[c.point].update(c.key)
    for pt, edges in sorted(at_point.items()):
        if len(edges) >= 3:
            report.errors.append(
                Issue("concurrent", f"edges {sorted(edges)} meet at one point", tuple(sorted(edges)))
            )

    per_edge = defaultdict(list)
    for c in crossings:
        per_edge[c.edge_a].append(c)
        per_edge[c.edge_b].append(c)
    for eid, cs in sorted(per_edge.items()):
        cs.sort(key=lambda c: c.param(eid))
        for c1, c2 in zip(cs, cs[1:]):
            dist = math.dist((float(c1.point[0]), float(c1.point[1])), (float(c2.point[0]), float(c2.point[1])))
            half = (math.sqrt(float(c1.tunnel_length2(w))) + math.sqrt(float(c2.tunnel_length2(w)))) / 2
            if dist < half:
                report.warnings.append(
                    Issue(
                        "crossings-close",
                        f"crossings {c1.key} and {c2.key} on edge {eid} are closer than their casings",
                        (eid, c1.key, c2.key),
                    )
                )
    return report


def degree_one_transform(d: Drawing, ratio=Fraction(1, 2), crossings=None) -> Drawing:
    """Clip every edge near its endpoints so each vertex has degree one.

    The new endpoint of edge ``e`` sits at ``ratio`` of the way from the old
    endpoint to the nearest crossing on ``e`` (or to ``e``'s midpoint if it
    has no crossings), so the crossing set, and hence casings and switch
    counts, carry over unchanged.  Edge ids are preserved; vertex ids become
    ``2*i`` and ``2*i+1`` for the ``i``-th edge.
    """
    ratio = as_fraction(ratio)
    if not 0 < ratio < 1:
        raise ValueError("ratio must lie strictly between 0 and 1")
    if crossings is None:
        crossings, _ = find_crossings(d)
    params = defaultdict(list)
    for c in crossings:
        params[c.edge_a].append(c.param_a)
        params[c.edge_b].append(c.param_b)
    vertices, edges = [], []
    for i, e in enumerate(d.edges):
        (ax, ay), (bx, by) = d.segment(e.id)
        ps = params.get(e.id)
        lo, hi = (min(ps), max(ps)) if ps else (Fraction(1, 2), Fraction(1, 2))
        t0 = lo * ratio
        t1 = 1 - (1 - hi) * ratio
        vertices.append((2 * i, ax + t0 * (bx - ax), ay + t0 * (by - ay)))
        vertices.append((2 * i + 1, ax + t1 * (bx - ax), ay + t1 * (by - ay)))
        edges.append((e.id, 2 * i, 2 * i + 1))
    return Drawing(vertices, edges, d.casing_width)
