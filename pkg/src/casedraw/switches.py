"""Minimum total switches in the weaving model.

Pipeline: clip the drawing to a degree-one drawing, find the odd face
polygons of each connected component, measure dual distances by BFS across
between-crossings portions, match odd faces (to each other or outward) at
minimum total distance, break the portions along the matched paths, and
2-color the remaining parity constraints.
"""
from __future__ import annotations

import dataclasses
from collections import deque
from dataclasses import dataclass

from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing, ConstraintGraph, build_crossing_graph, casing_metrics, zero_switch_casing
from .geometry import Drawing, degree_one_transform, find_crossings, validate_drawing
from .matching import MatchingInstance, min_weight_perfect_matching


@dataclass(frozen=True)
class OddFaceSet:
    faces: tuple

    @property
    def q(self) -> int:
        return len(self.faces)


def odd_face_polygons(arr: Arrangement) -> OddFaceSet:
    """Faces whose polygon has odd complexity.

    Only meaningful on a degree-one drawing; see
    :func:`~casedraw.geometry.degree_one_transform`.
    """
    return OddFaceSet(tuple(r.face for r in arr.face_records if r.is_odd))


class DualDistances:
    """BFS distances in the face graph whose arcs cross between-crossings portions.

    ``matrix[i][j]`` is the distance between odd faces ``i`` and ``j``; the
    last row and column hold distances to the unbounded face.  ``None`` marks
    an unreachable pair.
    """

    def __init__(self, arr: Arrangement, odd: OddFaceSet):
        self.arrangement = arr
        self.odd = odd
        adj = arr.face_adjacency()
        for lst in adj.values():
            lst.sort(key=lambda fp: fp[1])
        self._dist = []
        self._parent = []
        for f in odd.faces:
            dist = {f: 0}
            parent = {f: None}
            queue = deque([f])
            while queue:
                x = queue.popleft()
                for y, pid in adj.get(x, ()):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = (x, pid)
                        queue.append(y)
            self._dist.append(dist)
            self._parent.append(parent)
        targets = list(odd.faces) + [arr.unbounded]
        self.matrix = [[dist.get(t) for t in targets] for dist in self._dist]
        outer_row = [self._dist[i].get(arr.unbounded) for i in range(odd.q)]
        self.matrix.append(outer_row + [0])

    def path(self, i: int, face: int) -> list:
        """Portion ids crossed on a shortest path from odd face ``i`` to ``face``."""
        parent = self._parent[i]
        if face not in parent:
            raise ValueError(f"face {face} unreachable from odd face {self.odd.faces[i]}")
        out = []
        while parent[face] is not None:
            face, pid = parent[face]
            out.append(pid)
        return out[::-1]


def dual_distances(arr: Arrangement, odd: OddFaceSet) -> DualDistances:
    return DualDistances(arr, odd)


def switch_lower_bound(arr: Arrangement) -> int:
    """``ceil(o / 2)`` for the ``o`` odd face polygons of the degree-one drawing."""
    d1 = degree_one_transform(arr.drawing, crossings=arr.crossings)
    o = odd_face_polygons(build_arrangement(d1, validate=False)).q
    return (o + 1) // 2


@dataclass
class SwitchSolution:
    casing: Casing
    matching_weight: int
    odd_face_count: int
    breaks: frozenset  # soft-link keys (edge, first crossing key)


def _component_arrangements(d1: Drawing):
    """Arrangement of each crossing-graph component of a degree-one drawing."""
    crossings, _ = find_crossings(d1)
    full = Arrangement(d1, crossings)
    out = []
    for comp in build_crossing_graph(full).components():
        if len(comp) < 2:
            continue
        members = set(comp)
        own = [c for c in crossings if c.edge_a in members]
        own = [dataclasses.replace(c, id=i) for i, c in enumerate(own)]
        out.append(Arrangement(d1.subdrawing(comp), own))
    return out


def min_total_switches(d: Drawing, validate: bool = True) -> SwitchSolution:
    if validate:
        validate_drawing(d).raise_for_errors()
    arr = build_arrangement(d, validate=False)
    d1 = degree_one_transform(d, crossings=arr.crossings)
    parts = []  # (component arrangement, odd set, distances)
    for sub in _component_arrangements(d1):
        odd = odd_face_polygons(sub)
        if odd.q:
            parts.append((sub, odd, dual_distances(sub, odd)))
    q = sum(odd.q for _, odd, _ in parts)
    if q == 0:
        casing = zero_switch_casing(arr)
        assert casing is not None, "no odd face polygon but the crossing graph is not bipartite"
        return SwitchSolution(casing, 0, 0, frozenset())

    index = []  # global odd index -> (part, local index)
    for pi, (_, odd, _) in enumerate(parts):
        index += [(pi, li) for li in range(odd.q)]
    face_dist = [[None] * q for _ in range(q)]
    outer = []
    for gi, (pi, li) in enumerate(index):
        dd = parts[pi][2]
        outer.append(dd.matrix[-1][li])
        for gj, (pj, lj) in enumerate(index):
            if pj == pi and gj != gi:
                face_dist[gi][gj] = dd.matrix[li][lj]
    inst = MatchingInstance(tuple(map(tuple, face_dist)), tuple(outer))
    pairs, weight = min_weight_perfect_matching(inst)

    broken = set()
    for (ka, a), (kb, b) in pairs:
        if ka == "o":
            continue
        pi, li = index[a]
        sub, odd, dd = parts[pi]
        target = sub.unbounded if kb == "o" else odd.faces[index[b][1]]
        for pid in dd.path(li, target):
            p = sub.portions[pid]
            cids = sub.per_edge[p.edge]
            broken.add((p.edge, sub.crossings[cids[p.index - 1]].key))

    cg = ConstraintGraph(arr)
    casing = cg.solve(frozenset(broken))
    assert casing is not None, "parity constraints still inconsistent after breaking matched paths"
    return SwitchSolution(casing, weight, q, frozenset(broken))


def solve_min_total_switches(d: Drawing, validate: bool = True):
    """Casing of ``d`` with the fewest switches (weaving model).

    Returns ``(casing, report)``; ``report.total_switches`` equals the
    matching weight.
    """
    sol = min_total_switches(d, validate=validate)
    arr = build_arrangement(d, validate=False)
    report = casing_metrics(arr, sol.casing)
    assert report.total_switches == sol.matching_weight, (report.total_switches, sol.matching_weight)
    report.odd_face_count = sol.odd_face_count
    report.switch_lower_bound = (sol.odd_face_count + 1) // 2
    return sol.casing, report
