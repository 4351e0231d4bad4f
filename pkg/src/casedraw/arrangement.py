"""Arrangement of a drawing: crossings, portions, and faces.

The planar subdivision is a doubly-connected edge list over the crossing
points and the drawing's vertices.  Half-edge ``2*p`` runs along portion ``p``
in the edge's direction, ``2*p + 1`` runs back; each half-edge has its face
on the left.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from .exceptions import InvalidDrawingError
from .geometry import Drawing, find_crossings, validate_drawing

BETWEEN = "between-crossings"
ENDPOINT = "endpoint-adjacent"


@dataclass
class Portion:
    id: int
    edge: int
    index: int  # portion ``index`` lies between event ``index`` and ``index + 1`` along the edge
    start: tuple  # node key
    end: tuple
    kind: str
    left_face: int = -1
    right_face: int = -1


@dataclass
class Face:
    id: int
    unbounded: bool
    outer: list  # half-edges of the outer boundary cycle (empty for the unbounded face)
    holes: list = field(default_factory=list)  # one half-edge cycle per enclosed component
    area2: Fraction = Fraction(0)  # twice the signed area of the outer cycle


@dataclass(frozen=True)
class FaceRecord:
    face: int
    boundary_segment_count: int
    interior_vertex_count: int
    has_polygon: bool

    @property
    def complexity(self) -> int:
        return self.boundary_segment_count + self.interior_vertex_count

    @property
    def is_odd(self) -> bool:
        return self.has_polygon and self.complexity % 2 == 1


def _direction_cmp(a, b):
    ax, ay = a
    bx, by = b
    ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
    hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
    if ha != hb:
        return ha - hb
    c = ax * by - ay * bx
    return -1 if c > 0 else (1 if c < 0 else 0)


def _point_in_cycle(p, segments) -> bool:
    """Even-odd test of ``p`` against a list of directed segments."""
    px, py = p
    inside = False
    for (ax, ay), (bx, by) in segments:
        if (ay > py) != (by > py):
            x = ax + (py - ay) * (bx - ax) / (by - ay)
            if x > px:
                inside = not inside
    return inside


class Arrangement:
    """Crossings, per-edge crossing orders, portions and faces of a drawing."""

    def __init__(self, drawing: Drawing, crossings):
        self.drawing = drawing
        self.crossings = list(crossings)
        self.crossing_by_key = {c.key: c for c in self.crossings}
        self.per_edge = {e.id: [] for e in drawing.edges}
        for c in self.crossings:
            self.per_edge[c.edge_a].append(c.id)
            self.per_edge[c.edge_b].append(c.id)
        for eid, cids in self.per_edge.items():
            cids.sort(key=lambda cid: self.crossings[cid].param(eid))
        self._build_portions()
        self._build_dcel()
        self._build_faces()
        self._build_records()

    @property
    def k(self) -> int:
        return len(self.crossings)

    # -- construction -----------------------------------------------------

    def _build_portions(self):
        d = self.drawing
        self.nodes = {}
        for e in d.edges:
            self.nodes[("v", e.u)] = d.vertex(e.u).point
            self.nodes[("v", e.v)] = d.vertex(e.v).point
        for c in self.crossings:
            self.nodes[("c", c.id)] = c.point
        self.portions = []
        self.portions_by_edge = {}
        for e in d.edges:
            events = [("v", e.u)] + [("c", cid) for cid in self.per_edge[e.id]] + [("v", e.v)]
            ids = []
            for i in range(len(events) - 1):
                kind = BETWEEN if events[i][0] == "c" and events[i + 1][0] == "c" else ENDPOINT
                p = Portion(len(self.portions), e.id, i, events[i], events[i + 1], kind)
                self.portions.append(p)
                ids.append(p.id)
            self.portions_by_edge[e.id] = ids

    def he_origin(self, h):
        p = self.portions[h >> 1]
        return p.start if h & 1 == 0 else p.end

    def he_dest(self, h):
        p = self.portions[h >> 1]
        return p.end if h & 1 == 0 else p.start

    def he_segment(self, h):
        return self.nodes[self.he_origin(h)], self.nodes[self.he_dest(h)]

    def _build_dcel(self):
        out = defaultdict(list)
        for h in range(2 * len(self.portions)):
            out[self.he_origin(h)].append(h)

        def direction(h):
            (ax, ay), (bx, by) = self.he_segment(h)
            return (bx - ax, by - ay)

        rank = {}
        self.rotation = {}
        for node, hs in out.items():
            hs.sort(key=cmp_to_key(lambda a, b: _direction_cmp(direction(a), direction(b))))
            self.rotation[node] = hs
            for i, h in enumerate(hs):
                rank[h] = i
        nh = 2 * len(self.portions)
        self.he_next = [0] * nh
        for h in range(nh):
            t = h ^ 1
            ring = self.rotation[self.he_origin(t)]
            self.he_next[h] = ring[rank[t] - 1]

        # connected components of the union of edges, by node
        parent = {node: node for node in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.portions:
            ra, rb = find(p.start), find(p.end)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        self.node_component = {node: find(node) for node in self.nodes}
        self.components = sorted(set(self.node_component.values()))

    def _build_faces(self):
        nh = 2 * len(self.portions)
        cycle_of = [-1] * nh
        cycles = []
        for h0 in range(nh):
            if cycle_of[h0] != -1:
                continue
            cyc = []
            h = h0
            while cycle_of[h] == -1:
                cycle_of[h] = len(cycles)
                cyc.append(h)
                h = self.he_next[h]
            cycles.append(cyc)

        def area2(cyc):
            s = Fraction(0)
            for h in cyc:
                (ax, ay), (bx, by) = self.he_segment(h)
                s += ax * by - ay * bx
            return s

        self.faces = [Face(0, True, [])]
        self.unbounded = 0
        face_of_cycle = {}
        outer_cycles = []  # (cycle index, component)
        for ci, cyc in enumerate(cycles):
            a2 = area2(cyc)
            if a2 > 0:
                f = Face(len(self.faces), False, cyc, area2=a2)
                face_of_cycle[ci] = f.id
                self.faces.append(f)
            else:
                outer_cycles.append(ci)

        bounded = self.faces[1:]
        boxes = []
        for f in bounded:
            pts = [self.nodes[self.he_origin(h)] for h in f.outer]
            boxes.append((min(p[0] for p in pts), max(p[0] for p in pts), min(p[1] for p in pts), max(p[1] for p in pts)))
        self._face_boxes = boxes
        for ci in outer_cycles:
            cyc = cycles[ci]
            comp = self.node_component[self.he_origin(cyc[0])]
            probe = min(self.nodes[self.he_origin(h)] for h in cyc)
            best = None
            for f, (x0, x1, y0, y1) in zip(bounded, boxes):
                if not (x0 < probe[0] < x1 and y0 < probe[1] < y1):
                    continue
                if self.node_component[self.he_origin(f.outer[0])] == comp:
                    continue
                if _point_in_cycle(probe, [self.he_segment(h) for h in f.outer]):
                    if best is None or f.area2 < best.area2:
                        best = f
            owner = best if best is not None else self.faces[0]
            owner.holes.append(cyc)
            face_of_cycle[ci] = owner.id

        self.he_face = [face_of_cycle[cycle_of[h]] for h in range(nh)]
        for p in self.portions:
            p.left_face = self.he_face[2 * p.id]
            p.right_face = self.he_face[2 * p.id + 1]

    def _build_records(self):
        d = self.drawing
        vpts = [v.point for v in d.vertices]
        vxy = np.array([[float(x), float(y)] for x, y in vpts]) if vpts else np.zeros((0, 2))
        self.face_records = [FaceRecord(0, 0, 0, False)]
        self.interior_vertices = {0: []}
        for f, (x0, x1, y0, y1) in zip(self.faces[1:], self._face_boxes):
            cyc = set(f.outer)
            once = [h for h in f.outer if (h ^ 1) not in cyc]
            boundary_nodes = {self.he_origin(h) for h in once}
            segs = [self.he_segment(h) for h in once]
            on_boundary = any(node[0] == "v" for node in boundary_nodes)
            mask = (
                (vxy[:, 0] >= float(x0) - 1e-9) & (vxy[:, 0] <= float(x1) + 1e-9)
                & (vxy[:, 1] >= float(y0) - 1e-9) & (vxy[:, 1] <= float(y1) + 1e-9)
            ) if len(vxy) else []
            inside = []
            for vi in np.nonzero(mask)[0] if len(vxy) else []:
                v = d.vertices[vi]
                if ("v", v.id) in boundary_nodes:
                    continue
                if _point_in_cycle(v.point, segs):
                    inside.append(v.id)
            self.interior_vertices[f.id] = inside
            has_polygon = not on_boundary
            self.face_records.append(
                FaceRecord(f.id, len(once) if has_polygon else 0, len(inside), has_polygon)
            )

    # -- queries ----------------------------------------------------------

    def crossing_sequence(self, edge_id):
        return [self.crossings[cid] for cid in self.per_edge[edge_id]]

    def face_adjacency(self):
        """Map face -> list of (neighbour face, portion id) across between-crossings portions."""
        adj = defaultdict(list)
        for p in self.portions:
            if p.kind != BETWEEN or p.left_face == p.right_face:
                continue
            adj[p.left_face].append((p.right_face, p.id))
            adj[p.right_face].append((p.left_face, p.id))
        return adj

    def euler_characteristic_ok(self) -> bool:
        v, e, f = len(self.nodes), len(self.portions), len(self.faces)
        return v - e + f == 1 + len(self.components)


def build_arrangement(d: Drawing, validate: bool = True, crossings=None) -> Arrangement:
    """Compute all crossings of ``d`` and the planar subdivision they induce.

    With ``validate`` the drawing must pass :func:`validate_drawing` first;
    its errors are raised as :class:`~casedraw.exceptions.InvalidDrawingError`.
    """
    overlaps = []
    if crossings is None:
        crossings, overlaps = find_crossings(d)
    if validate:
        validate_drawing(d, crossings=crossings, overlaps=overlaps).raise_for_errors()
    elif overlaps:
        raise InvalidDrawingError(f"edges {overlaps[0]} overlap")
    return Arrangement(d, crossings)
