"""Minimum-weight perfect matching on the odd-face instance.

The instance has ``2q`` nodes: odd faces ``("f", i)`` and their outer copies
``("o", i)``.  Face-face weights are dual distances, face ``i`` to its own
outer copy costs its distance to the unbounded face, outer copies pair with
each other for free, and face ``i`` never pairs with outer copy ``j != i``.

Such a perfect matching is equivalent to choosing a set of face pairs and
sending every other face outward, so small instances are solved exactly by
a subset recursion that also fixes the tie-break, and larger ones by the
blossom algorithm in :func:`networkx.max_weight_matching` on the savings
graph ``out[i] + out[j] - dist[i][j]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

EXACT_DP_LIMIT = 16


@dataclass(frozen=True)
class MatchingInstance:
    face_dist: tuple  # q x q, None where unreachable
    outer_dist: tuple  # length q, None where unreachable

    @property
    def q(self) -> int:
        return len(self.outer_dist)

    def nodes(self) -> list:
        """Node order used for tie-breaking: f0, o0, f1, o1, ..."""
        out = []
        for i in range(self.q):
            out += [("f", i), ("o", i)]
        return out

    def weight(self, a, b):
        """Weight of the pair ``(a, b)``, or None when the pair is absent."""
        (ka, i), (kb, j) = sorted((a, b))
        if ka == "f" and kb == "f":
            return None if i == j else self.face_dist[i][j]
        if ka == "f" and kb == "o":
            return self.outer_dist[i] if i == j else None
        return 0 if i != j else None


def _match_small(inst: MatchingInstance):
    q = inst.q
    inf = float("inf")

    @lru_cache(maxsize=None)
    def best(mask):
        if mask == 0:
            return 0, ()
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        choice = None
        if inst.outer_dist[i] is not None:
            cost, tail = best(rest)
            choice = (cost + inst.outer_dist[i], ((("f", i), ("o", i)),) + tail)
        for j in range(i + 1, q):
            if not rest >> j & 1 or inst.face_dist[i][j] is None:
                continue
            cost, tail = best(rest & ~(1 << j))
            total = cost + inst.face_dist[i][j]
            if choice is None or total < choice[0]:
                choice = (total, ((("f", i), ("f", j)),) + tail)
        return choice if choice is not None else (inf, ())

    total, pairs = best((1 << q) - 1)
    return total, list(pairs)


def _match_blossom(inst: MatchingInstance):
    q = inst.q
    g = nx.Graph()
    g.add_nodes_from(range(q))
    for i in range(q):
        for j in range(i + 1, q):
            d = inst.face_dist[i][j]
            if d is None:
                continue
            gain = inst.outer_dist[i] + inst.outer_dist[j] - d
            if gain > 0:
                g.add_edge(i, j, weight=gain)
    mate = nx.max_weight_matching(g, maxcardinality=False)
    paired = set()
    pairs = []
    for a, b in sorted(tuple(sorted(p)) for p in mate):
        pairs.append((("f", a), ("f", b)))
        paired.update((a, b))
    total = sum(inst.face_dist[a][b] for (_, a), (_, b) in pairs)
    for i in range(q):
        if i not in paired:
            pairs.append((("f", i), ("o", i)))
            total += inst.outer_dist[i]
    pairs.sort()
    return total, pairs


def min_weight_perfect_matching(inst: MatchingInstance):
    """Exact minimum-weight perfect matching of ``inst``.

    Returns ``(pairs, total_weight)``; ``pairs`` covers all ``2q`` nodes, with
    unused outer copies paired among themselves at zero cost.
    """
    if any(d is None for d in inst.outer_dist):
        raise ValueError("every odd face must reach the unbounded face")
    if inst.q <= EXACT_DP_LIMIT:
        total, pairs = _match_small(inst)
    else:
        total, pairs = _match_blossom(inst)
    used = {i for (_, _), (kb, i) in pairs if kb == "o"}
    spare = [i for i in range(inst.q) if i not in used]
    pairs = list(pairs) + [(("o", a), ("o", b)) for a, b in zip(spare[::2], spare[1::2])]
    return pairs, total
