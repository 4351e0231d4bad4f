"""Edge crossing graph, casings, the parity-constraint view, and casing metrics."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ._exact import RootSum
from .arrangement import Arrangement
from .exceptions import CasingMismatch


@dataclass(frozen=True)
class CrossingGraph:
    """One node per drawing edge, one link per crossing."""

    nodes: tuple
    links: tuple  # (edge_a, edge_b) pairs ordered by crossing id

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.nodes}
        for a, b in self.links:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def two_coloring(self) -> Optional[dict]:
        """BFS 2-coloring (0/1) rooted at the lowest id of each component, or None."""
        adj = self.adjacency()
        color = {}
        for root in self.nodes:
            if root in color:
                continue
            color[root] = 0
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def components(self) -> list:
        adj = self.adjacency()
        seen = set()
        comps = []
        for root in self.nodes:
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


def build_crossing_graph(arr: Arrangement) -> CrossingGraph:
    return CrossingGraph(tuple(sorted(e.id for e in arr.drawing.edges)), tuple(c.key for c in arr.crossings))


class Casing(dict):
    """Maps each crossing key ``(edge_a, edge_b)`` to the id of the edge on top."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        for (a, b), top in self.items():
            if top not in (a, b):
                raise ValueError(f"top edge {top} is not part of crossing {(a, b)}")

    def is_top(self, key, edge_id) -> bool:
        return self[key] == edge_id

    def flipped(self) -> "Casing":
        return Casing({(a, b): (b if t == a else a) for (a, b), t in self.items()})

    def check_covers(self, arr: Arrangement):
        if set(self) != set(arr.crossing_by_key):
            missing = set(arr.crossing_by_key) - set(self)
            extra = set(self) - set(arr.crossing_by_key)
            raise CasingMismatch(f"casing does not match crossings (missing {sorted(missing)[:3]}, extra {sorted(extra)[:3]})")


@dataclass(frozen=True)
class SoftLink:
    edge: int
    first: tuple  # crossing key
    second: tuple
    portion: int  # between-crossings portion separating the two incidences

    @property
    def key(self) -> tuple:
        return (self.edge, self.first)


class ConstraintGraph:
    """Parity constraints of a drawing.

    Nodes are ``(edge, crossing key)`` incidences; the boolean of an incidence
    is "this edge is on top here".  Hard links (one per crossing) require the
    two incidences to differ; soft links join consecutive incidences along an
    edge and prefer equality.  A casing's switches are its violated soft links.
    """

    def __init__(self, arr: Arrangement):
        self.arrangement = arr
        self.nodes = []
        for e in sorted(arr.per_edge):
            for cid in arr.per_edge[e]:
                self.nodes.append((e, arr.crossings[cid].key))
        self.index = {node: i for i, node in enumerate(self.nodes)}
        self.hard = [((c.edge_a, c.key), (c.edge_b, c.key)) for c in arr.crossings]
        self.soft = []
        for e in sorted(arr.per_edge):
            cids = arr.per_edge[e]
            pids = arr.portions_by_edge[e]
            for i in range(len(cids) - 1):
                self.soft.append(
                    SoftLink(e, arr.crossings[cids[i]].key, arr.crossings[cids[i + 1]].key, pids[i + 1])
                )

    def incidence_values(self, casing: Casing) -> dict:
        return {node: casing[node[1]] == node[0] for node in self.nodes}

    def violated(self, casing: Casing) -> list:
        val = self.incidence_values(casing)
        return [s for s in self.soft if val[(s.edge, s.first)] != val[(s.edge, s.second)]]

    def solve(self, broken=frozenset()) -> Optional[Casing]:
        """2-color the graph with the soft links in ``broken`` removed.

        ``broken`` holds soft-link keys ``(edge, first crossing key)``.

        Each component is rooted at its lowest incidence, valued "on top".
        Returns None when the remaining constraints are inconsistent.
        """
        adj = {node: [] for node in self.nodes}
        for x, y in self.hard:
            adj[x].append((y, 1))
            adj[y].append((x, 1))
        for s in self.soft:
            if s.key in broken:
                continue
            x, y = (s.edge, s.first), (s.edge, s.second)
            adj[x].append((y, 0))
            adj[y].append((x, 0))
        value = {}
        for root in self.nodes:
            if root in value:
                continue
            value[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w, differ in adj[v]:
                    want = value[v] ^ bool(differ)
                    if w not in value:
                        value[w] = want
                        queue.append(w)
                    elif value[w] != want:
                        return None
        casing = {}
        for c in self.arrangement.crossings:
            casing[c.key] = c.edge_a if value[(c.edge_a, c.key)] else c.edge_b
        return Casing(casing)


def zero_switch_casing(arr: Arrangement) -> Optional[Casing]:
    """A casing without switches, if the crossing graph is bipartite.

    Edges colored like the lowest edge id of their component go on top.
    """
    coloring = build_crossing_graph(arr).two_coloring()
    if coloring is None:
        return None
    return Casing({c.key: (c.edge_a if coloring[c.edge_a] == 0 else c.edge_b) for c in arr.crossings})


@dataclass
class EdgeMetrics:
    edge: int
    crossings: int
    switches: int
    tunnels: int
    bridges: int
    tunnel_length: RootSum
    min_tunnel_distance2: Optional[Fraction]  # None means +inf (fewer than two tunnels)

    @property
    def min_tunnel_distance(self) -> float:
        d2 = self.min_tunnel_distance2
        return math.inf if d2 is None else math.sqrt(d2)


@dataclass
class ObjectiveReport:
    edges: dict
    total_switches: int
    max_switches: int
    max_tunnels: int
    max_tunnel_length: RootSum
    min_tunnel_distance2: Optional[Fraction]
    odd_face_count: Optional[int] = None
    switch_lower_bound: Optional[int] = None
    extra: dict = field(default_factory=dict)

    @property
    def min_tunnel_distance(self) -> float:
        d2 = self.min_tunnel_distance2
        return math.inf if d2 is None else math.sqrt(d2)

    def value(self, objective: str):
        """The aggregate that ``objective`` optimizes."""
        return {
            "min-total-switches": self.total_switches,
            "min-max-switches": self.max_switches,
            "min-max-tunnels": self.max_tunnels,
            "min-max-tunnel-length": self.max_tunnel_length,
            "max-min-tunnel-distance": self.min_tunnel_distance2,
        }[objective]

    def as_dict(self) -> dict:
        return {
            "total_switches": self.total_switches,
            "max_switches": self.max_switches,
            "max_tunnels": self.max_tunnels,
            "max_tunnel_length": self.max_tunnel_length.value,
            "min_tunnel_distance": None if self.min_tunnel_distance2 is None else self.min_tunnel_distance,
            "min_tunnel_distance_squared": None if self.min_tunnel_distance2 is None else str(self.min_tunnel_distance2),
            "odd_face_count": self.odd_face_count,
            "switch_lower_bound": self.switch_lower_bound,
            "per_edge": [
                {
                    "edge": m.edge,
                    "switches": m.switches,
                    "tunnels": m.tunnels,
                    "tunnel_length": m.tunnel_length.value,
                    "min_tunnel_distance": None if m.min_tunnel_distance2 is None else m.min_tunnel_distance,
                }
                for m in self.edges.values()
            ],
        }


def dist2(p, q) -> Fraction:
    dx, dy = p[0] - q[0], p[1] - q[1]
    return dx * dx + dy * dy


def casing_metrics(arr: Arrangement, casing: Casing) -> ObjectiveReport:
    """Per-edge and aggregate objective values of ``casing``.

    Tunnel distance is measured between crossing points along the edge.
    """
    casing.check_covers(arr)
    w = arr.drawing.casing_width
    per = {}
    for e in sorted(arr.per_edge):
        seq = [arr.crossings[cid] for cid in arr.per_edge[e]]
        tops = [casing[c.key] == e for c in seq]
        switches = sum(1 for x, y in zip(tops, tops[1:]) if x != y)
        tunnels = [c for c, top in zip(seq, tops) if not top]
        length = RootSum(tuple((1, c.tunnel_length2(w)) for c in tunnels))
        gap = None
        for c1, c2 in zip(tunnels, tunnels[1:]):
            g = dist2(c1.point, c2.point)
            if gap is None or g < gap:
                gap = g
        per[e] = EdgeMetrics(e, len(seq), switches, len(tunnels), len(seq) - len(tunnels), length, gap)
    values = list(per.values())
    gaps = [m.min_tunnel_distance2 for m in values if m.min_tunnel_distance2 is not None]
    return ObjectiveReport(
        edges=per,
        total_switches=sum(m.switches for m in values),
        max_switches=max((m.switches for m in values), default=0),
        max_tunnels=max((m.tunnels for m in values), default=0),
        max_tunnel_length=max((m.tunnel_length for m in values), default=RootSum.zero()),
        min_tunnel_distance2=min(gaps) if gaps else None,
    )
