"""One entry point that routes a (model, objective) pair to its algorithm."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ._exact import RootSum
from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing, ObjectiveReport, casing_metrics
from .exceptions import BudgetExceeded
from .stacking import solve_stacking
from .switches import solve_min_total_switches
from .tunnels import (
    DEFAULT_BUDGET,
    UNBOUNDED,
    solve_max_min_tunnel_distance_weaving,
    solve_min_max_tunnel_length_exact,
    solve_min_max_tunnels_weaving,
)
from .validation import check_model_objective


@dataclass
class Solution:
    casing: Casing
    report: ObjectiveReport
    value: object  # int, RootSum, Fraction (squared distance) or UNBOUNDED
    model: str
    objective: str
    order: Optional[list] = None  # stacking order, bottom first
    method: str = "exact"  # "heuristic" when the stacking bound stands in for the exact solver


def solve(d, model: str, objective: str, exact_budget: int = DEFAULT_BUDGET, fallback: bool = False) -> Solution:
    """Optimal casing of ``d`` for ``objective`` in ``model``.

    ``fallback`` only matters for weaving min-max-tunnel-length: when the
    exact search exceeds ``exact_budget`` the optimal stacking is returned
    with ``method="heuristic"`` instead of raising :class:`BudgetExceeded`.
    An :class:`Arrangement` is taken as already validated.
    """
    check_model_objective(model, objective)
    arr = d if isinstance(d, Arrangement) else build_arrangement(d)
    if model == "stacking":
        order, casing, report = solve_stacking(arr, objective)
        return Solution(casing, report, report.value(objective), model, objective, order)
    if objective == "min-total-switches":
        casing, report = solve_min_total_switches(arr.drawing, validate=False)
        return Solution(casing, report, report.total_switches, model, objective)
    if objective == "min-max-tunnels":
        casing, report = solve_min_max_tunnels_weaving(arr)
        return Solution(casing, report, report.max_tunnels, model, objective)
    if objective == "max-min-tunnel-distance":
        casing, delta2 = solve_max_min_tunnel_distance_weaving(arr)
        return Solution(casing, casing_metrics(arr, casing), delta2, model, objective)
    try:
        casing, value = solve_min_max_tunnel_length_exact(arr, budget=exact_budget)
        method = "exact"
    except BudgetExceeded:
        if not fallback:
            raise
        _, casing, _ = solve_stacking(arr, objective)
        method = "heuristic"
    report = casing_metrics(arr, casing)
    return Solution(casing, report, report.max_tunnel_length, model, objective, method=method)


def value_to_json(value, objective: str):
    """JSON-friendly rendering of an objective value, exact where possible."""
    from .documents import format_number

    if value is None or value == UNBOUNDED:
        return {"unbounded": True} if objective == "max-min-tunnel-distance" else None
    if isinstance(value, RootSum):
        return {
            "approx": value.value,
            "exact": [{"coef": format_number(c), "sqrt_of": format_number(r)} for r, c in value.canonical()],
        }
    if objective == "max-min-tunnel-distance":
        return {"squared": format_number(value), "approx": math.sqrt(value)}
    return int(value)
