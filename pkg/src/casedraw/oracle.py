"""Brute-force ground truth for every objective in both models.

This module is deliberately naive: it enumerates every casing (weaving) or
every stacking order (stacking).  Objective values go through
:func:`~casedraw.crossing_graph.casing_metrics`, except switch counts, which
are recounted here by a separate vectorised scan of the crossing sequences.
"""
from __future__ import annotations

import hashlib
import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing, casing_metrics
from .exceptions import CapExceeded
from .geometry import Drawing

OBJECTIVES = (
    "min-total-switches",
    "min-max-switches",
    "min-max-tunnels",
    "min-max-tunnel-length",
    "max-min-tunnel-distance",
)
MODELS = ("stacking", "weaving")
WEAVING_CAP = 16
STACKING_CAP = 7


@dataclass
class OracleResult:
    value: object
    witness: Casing
    model: str
    objective: str
    fingerprint: str
    order: Optional[list] = None  # stacking witness order, bottom first


def fingerprint(d: Drawing) -> str:
    h = hashlib.sha256()
    h.update(f"w={d.casing_width}".encode())
    for v in sorted(d.vertices):
        h.update(f"v{v.id}:{v.x},{v.y};".encode())
    for e in sorted(d.edges):
        h.update(f"e{e.id}:{e.u},{e.v};".encode())
    return h.hexdigest()


def _sequences(arr: Arrangement):
    """Per edge: list of (crossing index, edge is edge_a)."""
    return {
        e: [(cid, arr.crossings[cid].edge_a == e) for cid in cids] for e, cids in sorted(arr.per_edge.items())
    }


def _casing_from_mask(arr: Arrangement, mask: int) -> Casing:
    # bit set -> edge_a on top
    return Casing({c.key: (c.edge_a if mask >> c.id & 1 else c.edge_b) for c in arr.crossings})


def count_switches(arr: Arrangement, casing: Casing) -> list:
    """Per-edge switch counts by direct scan (independent of casing_metrics)."""
    out = []
    for e, seq in _sequences(arr).items():
        flags = [casing[arr.crossings[cid].key] == e for cid, _ in seq]
        out.append(sum(flags[i] != flags[i + 1] for i in range(len(flags) - 1)))
    return out


def _switch_table(arr: Arrangement):
    """Per-edge switch counts for every mask, shape (2^k, m)."""
    k = arr.k
    masks = np.arange(1 << k, dtype=np.int64)
    bits = [(masks >> c) & 1 for c in range(k)]
    cols = []
    for e, seq in _sequences(arr).items():
        s = np.zeros(1 << k, dtype=np.int64)
        for (c1, a1), (c2, a2) in zip(seq, seq[1:]):
            f1 = bits[c1] if a1 else 1 - bits[c1]
            f2 = bits[c2] if a2 else 1 - bits[c2]
            s += f1 ^ f2
        cols.append(s)
    if not cols:
        return np.zeros((1 << k, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _better(objective, a, b) -> bool:
    """True when value ``a`` is strictly better than ``b``."""
    if objective == "max-min-tunnel-distance":
        if a is None:
            return b is not None
        return b is not None and a > b
    return a < b


def _value(objective, casing, arr):
    if objective == "min-total-switches":
        return sum(count_switches(arr, casing))
    if objective == "min-max-switches":
        return max(count_switches(arr, casing), default=0)
    return casing_metrics(arr, casing).value(objective)


def enumerate_optimal_casing(d: Drawing, model: str, objective: str, cap: Optional[int] = None) -> OracleResult:
    """Exact optimum by exhaustive enumeration; first optimum in enumeration order wins."""
    if model not in MODELS or objective not in OBJECTIVES:
        raise ValueError(f"unknown model/objective {model}/{objective}")
    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    d = arr.drawing
    if model == "weaving":
        cap = WEAVING_CAP if cap is None else cap
        if arr.k > cap:
            raise CapExceeded(f"k = {arr.k} exceeds the weaving oracle cap {cap}")
        if objective in ("min-total-switches", "min-max-switches"):
            table = _switch_table(arr)
            vals = table.sum(axis=1) if objective == "min-total-switches" else (
                table.max(axis=1) if table.shape[1] else np.zeros(len(table), dtype=np.int64)
            )
            mask = int(np.argmin(vals))
            witness = _casing_from_mask(arr, mask)
            return OracleResult(int(vals[mask]), witness, model, objective, fingerprint(d))
        best = None
        for mask in range(1 << arr.k):
            casing = _casing_from_mask(arr, mask)
            val = _value(objective, casing, arr)
            if best is None or _better(objective, val, best[0]):
                best = (val, casing)
        return OracleResult(best[0], best[1], model, objective, fingerprint(d))

    cap = STACKING_CAP if cap is None else cap
    if d.m > cap:
        raise CapExceeded(f"m = {d.m} exceeds the stacking oracle cap {cap}")
    ids = sorted(e.id for e in d.edges)
    best = None
    for order in itertools.permutations(ids):
        casing = casing_from_order(arr, order)
        val = _value(objective, casing, arr)
        if best is None or _better(objective, val, best[0]):
            best = (val, casing, list(order))
    return OracleResult(best[0], best[1], model, objective, fingerprint(d), best[2])


def casing_from_order(arr: Arrangement, order) -> Casing:
    """Casing induced by a bottom-first stacking order."""
    height = {e: i for i, e in enumerate(order)}
    return Casing({c.key: (c.edge_a if height[c.edge_a] > height[c.edge_b] else c.edge_b) for c in arr.crossings})


def is_stackable(casing: Casing, edges=None) -> Optional[list]:
    """Bottom-first stacking order realizing ``casing``, or None if it has cyclic overlap.

    ``edges`` lists edges without crossings to include in the order.
    """
    nodes = set(edges or ())
    above = {}
    for (a, b), top in casing.items():
        nodes.update((a, b))
        low = b if top == a else a
        above.setdefault(low, set()).add(top)
    indeg = {v: 0 for v in nodes}
    for low, tops in above.items():
        for t in tops:
            indeg[t] += 1
    ready = [v for v in nodes if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for t in sorted(above.get(v, ())):
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(ready, t)
    return order if len(order) == len(nodes) else None


def value_to_float(value) -> float:
    """Numeric rendering of an objective value (None means +inf distance)."""
    if value is None:
        return math.inf
    return float(value)
