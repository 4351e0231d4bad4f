"""Tunnel objectives in the weaving model.

* fewest tunnels on the worst edge: orient the crossing graph minimizing the
  maximum indegree;
* largest minimum distance between tunnels on an edge: binary search over
  candidate distances with a 2-SAT decision per candidate;
* shortest total tunnel length on the worst edge: NP-hard, so only an exact
  branch and bound with an explicit node budget is offered.
"""
from __future__ import annotations

import math
import sys
from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional

from ._exact import RootSum, as_fraction
from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing, CrossingGraph, build_crossing_graph, casing_metrics, dist2
from .exceptions import BudgetExceeded
from .twosat import Literal, TwoSat

UNBOUNDED = "unbounded"
DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class Orientation:
    """Direction of every crossing-graph link as ``(tail, head)``; the head tunnels."""

    arcs: tuple

    def indegree(self) -> Counter:
        return Counter(head for _, head in self.arcs)

    @property
    def max_indegree(self) -> int:
        return max(self.indegree().values(), default=0)


def min_max_indegree_orientation(g: CrossingGraph) -> Orientation:
    """Orientation minimizing the maximum indegree.

    Links are first sent to the endpoint with the smaller current indegree.
    Then, while the lowest-id vertex of maximum indegree ``D`` reaches (against
    arc direction) a vertex of indegree at most ``D - 2``, the path is
    reversed.  When it reaches none, the vertices it reaches span at least
    ``D + (s - 1)(D - 1)`` links among themselves, so ``D`` is optimal.
    """
    indeg = {v: 0 for v in g.nodes}
    heads = []
    for a, b in g.links:
        h = a if indeg[a] < indeg[b] else b
        heads.append(h)
        indeg[h] += 1
    tails_into = {v: set() for v in g.nodes}  # v -> link ids whose head is v
    for lid, h in enumerate(heads):
        tails_into[h].add(lid)

    def tail(lid):
        a, b = g.links[lid]
        return b if heads[lid] == a else a

    while True:
        if not g.links:
            break
        top = max(indeg.values())
        v = min(x for x in g.nodes if indeg[x] == top)
        parent = {v: None}
        queue = deque([v])
        found = None
        while queue and found is None:
            x = queue.popleft()
            for lid in sorted(tails_into[x]):
                y = tail(lid)
                if y in parent:
                    continue
                parent[y] = (x, lid)
                if indeg[y] <= top - 2:
                    found = y
                    break
                queue.append(y)
        if found is None:
            break
        y = found
        while parent[y] is not None:
            x, lid = parent[y]
            tails_into[x].discard(lid)
            tails_into[y].add(lid)
            heads[lid] = y
            y = x
        indeg[v] -= 1
        indeg[found] += 1
    return Orientation(tuple((tail(lid), heads[lid]) for lid in range(len(g.links))))


def solve_min_max_tunnels_weaving(d):
    """Casing from the optimal orientation: at each crossing the tail is on top."""
    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    orient = min_max_indegree_orientation(build_crossing_graph(arr))
    casing = Casing({c.key: t for c, (t, _) in zip(arr.crossings, orient.arcs)})
    report = casing_metrics(arr, casing)
    assert report.max_tunnels == orient.max_indegree
    return casing, report


@dataclass(frozen=True)
class CandidateSet:
    """Sorted distinct squared distances between crossings sharing an edge."""

    values: tuple
    pair_count: int

    @property
    def K(self) -> int:
        return len(self.values)


def candidate_distances(arr: Arrangement) -> CandidateSet:
    seen = set()
    pairs = 0
    for e, cids in arr.per_edge.items():
        pts = [arr.crossings[c].point for c in cids]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                seen.add(dist2(pts[i], pts[j]))
                pairs += 1
    return CandidateSet(tuple(sorted(seen)), pairs)


def _bridge(arr: Arrangement, edge: int, cid: int) -> Literal:
    """Literal meaning ``edge`` is on top at crossing ``cid``.

    Variable ``(i, j)`` with ``i < j`` is true when edge ``i`` has the bridge.
    """
    c = arr.crossings[cid]
    return Literal(c.key, edge == c.edge_a)


def distance_formula(arr: Arrangement, delta2, strict: bool = True) -> TwoSat:
    """Clauses forbidding two tunnels on one edge closer than ``delta``.

    With ``strict`` pairs at squared distance ``< delta2`` are constrained;
    ``delta2=None`` constrains every pair.
    """
    sat = TwoSat(variables=[c.key for c in arr.crossings])
    for e in sorted(arr.per_edge):
        cids = arr.per_edge[e]
        for i in range(len(cids)):
            for j in range(i + 1, len(cids)):
                d2 = dist2(arr.crossings[cids[i]].point, arr.crossings[cids[j]].point)
                if delta2 is None or d2 < delta2 or (not strict and d2 == delta2):
                    sat.add_clause(_bridge(arr, e, cids[i]), _bridge(arr, e, cids[j]))
    return sat


def _casing_from_model(arr: Arrangement, model: dict) -> Casing:
    return Casing({c.key: (c.edge_a if model[c.key] else c.edge_b) for c in arr.crossings})


def max_min_distance_feasible(arr: Arrangement, delta2) -> Optional[Casing]:
    """A casing with no two tunnels on an edge at squared distance below ``delta2``."""
    if delta2 is not None:
        delta2 = as_fraction(delta2)
        if delta2 <= 0:
            raise ValueError("delta^2 must be positive")
    model = distance_formula(arr, delta2).solve()
    return None if model is None else _casing_from_model(arr, model)


def solve_max_min_tunnel_distance_weaving(d):
    """Largest ``delta`` such that some casing keeps tunnels at least ``delta`` apart.

    Returns ``(casing, delta2)`` with ``delta2`` the exact squared optimum,
    or :data:`UNBOUNDED` when a casing leaves every edge at most one tunnel.
    """
    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    cand = candidate_distances(arr).values
    everything = max_min_distance_feasible(arr, None)
    if everything is not None:
        return everything, UNBOUNDED
    lo, hi = 0, len(cand) - 1  # cand[lo] is always feasible: no pair is strictly closer
    best = max_min_distance_feasible(arr, cand[lo])
    while lo < hi:
        mid = (lo + hi + 1) // 2
        casing = max_min_distance_feasible(arr, cand[mid])
        if casing is not None:
            lo, best = mid, casing
        else:
            hi = mid - 1
    return best, cand[lo]


def solve_min_max_tunnel_length_exact(d, budget: int = DEFAULT_BUDGET):
    """Exact minimum of the largest per-edge tunnel length, by branch and bound.

    Crossings are decided longest tunnel first; the search starts from the
    optimal stacking as incumbent and prunes any branch in which some
    edge's committed sum already reaches it, so only strictly better
    casings are explored.  Raises :class:`BudgetExceeded` after
    ``budget`` search nodes.  Returns ``(casing, value)`` with ``value`` a
    :class:`RootSum`.
    """
    from .stacking import solve_stacking

    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    w = arr.drawing.casing_width
    _, best_casing, report = solve_stacking(arr, "min-max-tunnel-length")
    best_val = report.max_tunnel_length
    if arr.k == 0:
        return best_casing, best_val

    rad = [c.tunnel_length2(w) for c in arr.crossings]
    flt = [math.sqrt(r) for r in rad]
    order = sorted(range(arr.k), key=lambda i: (-flt[i], i))
    sums = {e: 0.0 for e in arr.per_edge}
    terms = {e: Counter() for e in arr.per_edge}
    top = {}
    nodes = 0
    eps = 1e-9
    state = {"val": best_val, "casing": best_casing, "bound": best_val.value}

    def exact_sum(e) -> RootSum:
        return RootSum(tuple((n, r) for r, n in terms[e].items() if n))

    def not_better(e, total) -> bool:
        """True when an edge sum of ``total`` (float) cannot beat the incumbent."""
        bound = state["bound"]
        if total > bound * (1 + eps) + eps:
            return True
        if total < bound * (1 - eps) - eps:
            return False
        return not exact_sum(e) < state["val"]

    def leaf():
        peak = max(sums.values())
        near = [e for e, s in sums.items() if s >= peak * (1 - eps) - eps]
        worst = max(exact_sum(e) for e in near)
        if worst < state["val"]:
            state["val"] = worst
            state["bound"] = worst.value
            state["casing"] = Casing({arr.crossings[i].key: t for i, t in top.items()})

    def search(pos):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"branch and bound exceeded {budget} nodes (k = {arr.k})")
        if pos == len(order):
            leaf()
            return
        i = order[pos]
        c = arr.crossings[i]
        a, b = c.edge_a, c.edge_b
        # tunnel on the edge whose committed sum is smaller first
        for low in sorted((a, b), key=lambda e: (sums[e], e)):
            old = sums[low]
            sums[low] = old + flt[i]
            terms[low][rad[i]] += 1
            if not not_better(low, sums[low]):
                top[i] = b if low == a else a
                search(pos + 1)
            terms[low][rad[i]] -= 1
            sums[low] = old
        top.pop(i, None)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, arr.k + 200))
    try:
        search(0)
    finally:
        sys.setrecursionlimit(limit)
    return state["casing"], state["val"]
