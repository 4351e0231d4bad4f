"""Greedy bottom-up stacking for the three tunnel objectives.

The edge that would be best as the bottommost edge is placed first; every
edge stacked later loses the tunnels it had at crossings with placed edges.
Each step only changes the values of the neighbours of the placed edge, so
values live in a priority queue with lazy deletion.
"""
from __future__ import annotations

import heapq
import math
from collections import Counter
from fractions import Fraction
from typing import Optional

from ._exact import RootSum
from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing, casing_metrics, dist2

STACKING_OBJECTIVES = ("min-max-tunnels", "min-max-tunnel-length", "max-min-tunnel-distance")
_NEAR = 1e-9


class EdgeGapStructure:
    """Live tunnel positions of one edge with their minimum consecutive gap.

    Positions are crossing ids in order along the edge.  Removal splices the
    doubly linked list and merges the two adjacent gaps; the minimum is kept
    in a lazily cleaned heap keyed by exact squared distance.
    """

    def __init__(self, points):
        # points: [(crossing id, point)] sorted along the edge
        self._point = {cid: p for cid, p in points}
        ids = [cid for cid, _ in points]
        self._prev = {c: (ids[i - 1] if i else None) for i, c in enumerate(ids)}
        self._next = {c: (ids[i + 1] if i + 1 < len(ids) else None) for i, c in enumerate(ids)}
        self._heap = [(self._gap(a, b), a, b) for a, b in zip(ids, ids[1:])]
        heapq.heapify(self._heap)

    def __len__(self):
        return len(self._point)

    def _gap(self, a, b) -> Fraction:
        return dist2(self._point[a], self._point[b])

    def remove(self, cid):
        p, n = self._prev.pop(cid), self._next.pop(cid)
        del self._point[cid]
        if p is not None:
            self._next[p] = n
        if n is not None:
            self._prev[n] = p
        if p is not None and n is not None:
            heapq.heappush(self._heap, (self._gap(p, n), p, n))

    def min_gap2(self) -> Optional[Fraction]:
        """Smallest squared gap between consecutive live positions, None for +inf."""
        heap = self._heap
        while heap:
            _, a, b = heap[0]
            if self._next.get(a, -1) == b:
                return heap[0][0]
            heapq.heappop(heap)
        return None


def _length(counter) -> RootSum:
    return RootSum(tuple((c, r) for r, c in sorted(counter.items()) if c))


def bottom_values(arr: Arrangement, objective: str) -> dict:
    """Value of each edge if it were placed bottommost (it tunnels everywhere)."""
    if objective not in STACKING_OBJECTIVES:
        raise ValueError(f"objective {objective!r} is not solvable by stacking")
    w = arr.drawing.casing_width
    out = {}
    for e in sorted(arr.per_edge):
        cs = [arr.crossings[cid] for cid in arr.per_edge[e]]
        if objective == "min-max-tunnels":
            out[e] = len(cs)
        elif objective == "min-max-tunnel-length":
            out[e] = _length(Counter(c.tunnel_length2(w) for c in cs))
        else:
            gaps = [dist2(a.point, b.point) for a, b in zip(cs, cs[1:])]
            out[e] = min(gaps) if gaps else None
    return out


class _Queue:
    """Extract-best over edges with lazy deletion.

    ``key(value)`` maps a value to a float-comparable heap key where smaller
    is better; near-ties among floats are settled by ``exact_better``.
    """

    def __init__(self, key, exact_better=None):
        self._key = key
        self._exact = exact_better
        self._heap = []
        self._value = {}

    def set(self, e, value):
        self._value[e] = value
        heapq.heappush(self._heap, (self._key(value), e))

    def value(self, e):
        return self._value[e]

    def pop_best(self):
        heap = self._heap
        while True:
            k, e = heapq.heappop(heap)
            if e in self._value and self._key(self._value[e]) == k:
                break
        if self._exact is None:
            return e, self._value.pop(e)
        # gather live entries whose float key is within rounding of the best
        near = [(k, e)]
        while heap and heap[0][0] - k <= _NEAR * max(1.0, abs(k)):
            k2, e2 = heapq.heappop(heap)
            if e2 in self._value and self._key(self._value[e2]) == k2 and all(e2 != x for _, x in near):
                near.append((k2, e2))
        best = min(near, key=lambda t: t[1])
        for cand in near:
            if cand is best:
                continue
            v, bv = self._value[cand[1]], self._value[best[1]]
            if self._exact(v, bv) or (not self._exact(bv, v) and cand[1] < best[1]):
                best = cand
        for cand in near:
            if cand is not best:
                heapq.heappush(heap, cand)
        return best[1], self._value.pop(best[1])


def _queue_for(objective):
    if objective == "min-max-tunnels":
        return _Queue(lambda v: v)
    if objective == "min-max-tunnel-length":
        return _Queue(lambda v: v.value, exact_better=lambda a, b: a < b)
    # max-min distance: larger is better, None is +inf; exact Fraction keys
    return _Queue(lambda v: -math.inf if v is None else -v)


def _aggregate(objective, values):
    if objective == "max-min-tunnel-distance":
        finite = [v for v in values if v is not None]
        return min(finite) if finite else None
    return max(values, default=RootSum.zero() if objective == "min-max-tunnel-length" else 0)


def greedy_order(arr: Arrangement, objective: str, trace=None):
    """Bottom-first stacking order and the aggregate of selection-time values.

    When ``trace`` is a list, ``(placed edge, {remaining edge: value})`` is
    appended after every step for inspection.
    """
    w = arr.drawing.casing_width
    edges = sorted(e.id for e in arr.drawing.edges)
    init = bottom_values(arr, objective)
    queue = _queue_for(objective)
    lengths = {}
    gaps = {}
    for e in edges:
        if objective == "min-max-tunnel-length":
            lengths[e] = Counter(arr.crossings[c].tunnel_length2(w) for c in arr.per_edge[e])
        elif objective == "max-min-tunnel-distance":
            gaps[e] = EdgeGapStructure([(c, arr.crossings[c].point) for c in arr.per_edge[e]])
        queue.set(e, init[e])
    placed = set()
    order, picked = [], []
    for _ in edges:
        e, val = queue.pop_best()
        placed.add(e)
        order.append(e)
        picked.append(val)
        for cid in arr.per_edge[e]:
            c = arr.crossings[cid]
            f = c.other(e)
            if f in placed:
                continue
            if objective == "min-max-tunnels":
                queue.set(f, queue.value(f) - 1)
            elif objective == "min-max-tunnel-length":
                lengths[f][c.tunnel_length2(w)] -= 1
                queue.set(f, _length(lengths[f]))
            else:
                gaps[f].remove(cid)
                queue.set(f, gaps[f].min_gap2())
        if trace is not None:
            trace.append((e, {f: queue.value(f) for f in edges if f not in placed}))
    return order, _aggregate(objective, picked)


def solve_stacking(d, objective: str):
    """Optimal stacking for a tunnel objective.

    Returns ``(order, casing, report)`` with ``order`` bottom first; the
    induced casing puts the later edge on top at every crossing.
    """
    if objective not in STACKING_OBJECTIVES:
        raise ValueError(f"objective {objective!r} is not solvable by stacking")
    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    order, value = greedy_order(arr, objective)
    height = {e: i for i, e in enumerate(order)}
    casing = Casing({c.key: (c.edge_a if height[c.edge_a] > height[c.edge_b] else c.edge_b) for c in arr.crossings})
    report = casing_metrics(arr, casing)
    got = report.value(objective)
    assert (got is None and value is None) or (got is not None and value is not None and got == value), (got, value)
    report.extra["model"] = "stacking"
    return order, casing, report
