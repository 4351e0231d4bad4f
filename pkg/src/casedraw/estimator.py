"""scikit-learn style facade over the solvers.

Nothing is learned: ``fit`` solves the drawing it is given and keeps the
result in trailing-underscore attributes, so the object composes with tools
that expect ``get_params``/``set_params`` and the fit/predict protocol.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .arrangement import build_arrangement
from .oracle import fingerprint
from .solvers import solve
from .tunnels import DEFAULT_BUDGET
from .validation import check_drawing, check_model_objective


class CasingOptimizer(BaseEstimator):
    """Find an optimal casing of a drawing.

    Parameters
    ----------
    model : {"weaving", "stacking"}
    objective : str
        One of ``min-total-switches``, ``min-max-tunnels``,
        ``min-max-tunnel-length`` or ``max-min-tunnel-distance``.
    exact_budget : int
        Node limit of the exact tunnel-length search (weaving only).
    heuristic_fallback : bool
        Return the optimal stacking, flagged as heuristic, when that search
        runs out of budget.
    near_tolerance : rational or None
        Vertex-to-edge clearance enforced by validation; None means half the
        casing width.

    Attributes
    ----------
    casing_ : Casing
    report_ : ObjectiveReport
    value_ : objective value (see :func:`casedraw.solvers.solve`)
    stacking_order_ : list or None
        Bottom-first edge order for the stacking model.
    method_ : str
        ``"exact"`` or ``"heuristic"``.
    """

    def __init__(
        self,
        model="weaving",
        objective="min-total-switches",
        exact_budget=DEFAULT_BUDGET,
        heuristic_fallback=False,
        near_tolerance=None,
    ):
        self.model = model
        self.objective = objective
        self.exact_budget = exact_budget
        self.heuristic_fallback = heuristic_fallback
        self.near_tolerance = near_tolerance

    def _solve(self, X):
        check_model_objective(self.model, self.objective)
        d = check_drawing(X, near_tolerance=self.near_tolerance)
        return d, self._run(d)

    def _run(self, d):
        # validated above with the configured tolerance; do not re-check
        arr = build_arrangement(d, validate=False)
        return solve(arr, self.model, self.objective, self.exact_budget, self.heuristic_fallback)

    def fit(self, X, y=None):
        d, sol = self._solve(X)
        self.drawing_ = d
        self.casing_ = sol.casing
        self.report_ = sol.report
        self.value_ = sol.value
        self.stacking_order_ = sol.order
        self.method_ = sol.method
        self._fingerprint = fingerprint(d)
        return self

    def predict(self, X=None):
        """Casing of ``X``; the fitted casing when ``X`` is omitted or unchanged."""
        check_is_fitted(self, "casing_")
        if X is None:
            return self.casing_
        d = check_drawing(X, near_tolerance=self.near_tolerance)
        if fingerprint(d) == self._fingerprint:
            return self.casing_
        return self._run(d).casing

    def fit_predict(self, X, y=None):
        return self.fit(X).casing_
