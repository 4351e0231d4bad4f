"""2-SAT by strongly connected components of the implication graph."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import networkx as nx


@dataclass(frozen=True)
class Literal:
    var: object
    positive: bool = True

    def __invert__(self) -> "Literal":
        return Literal(self.var, not self.positive)

    def __str__(self):
        return f"{'' if self.positive else '~'}{self.var}"


@dataclass
class TwoSat:
    """A conjunction of two-literal clauses over hashable variables."""

    variables: list = field(default_factory=list)
    clauses: list = field(default_factory=list)  # [(Literal, Literal)]

    def add_clause(self, a: Literal, b: Literal):
        self.clauses.append((a, b))

    def implication_graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for v in self.variables:
            g.add_node(Literal(v, True))
            g.add_node(Literal(v, False))
        for a, b in self.clauses:
            g.add_edge(~a, b)
            g.add_edge(~b, a)
        return g

    def solve(self) -> Optional[dict]:
        """A satisfying assignment ``{var: bool}``, or None.

        Components are numbered in topological order of the condensation; a
        variable is true when its positive literal's component comes later,
        the usual reverse-topological valuation.
        """
        g = self.implication_graph()
        cond = nx.condensation(g)
        position = {c: i for i, c in enumerate(nx.lexicographical_topological_sort(cond))}
        comp = {lit: position[c] for lit, c in cond.graph["mapping"].items()}
        out = {}
        for v in self.variables:
            p, n = comp[Literal(v, True)], comp[Literal(v, False)]
            if p == n:
                return None
            out[v] = p > n
        return out
