"""Input checks shared by the estimator and the command line."""
from __future__ import annotations

from pathlib import Path

from .arrangement import Arrangement
from .crossing_graph import Casing
from .exceptions import OpenProblemError
from .geometry import Drawing, validate_drawing

MODELS = ("stacking", "weaving")
OBJECTIVES = (
    "min-total-switches",
    "min-max-switches",
    "min-max-tunnels",
    "min-max-tunnel-length",
    "max-min-tunnel-distance",
)
# pairs with no known polynomial algorithm and no solver here
OPEN_PAIRS = {
    ("stacking", "min-total-switches"),
    ("stacking", "min-max-switches"),
    ("weaving", "min-max-switches"),
}


def check_drawing(X, validate: bool = True, near_tolerance=None) -> Drawing:
    """Coerce ``X`` to a validated :class:`Drawing`.

    Accepts a Drawing, a document dict, JSON text, or a path to a document.
    """
    if isinstance(X, Drawing):
        d = X
    elif isinstance(X, (dict, str, Path)):
        from .documents import parse_drawing

        d = parse_drawing(X, validate=False)
    else:
        raise TypeError(f"expected a Drawing, document or path, got {type(X).__name__}")
    if validate:
        validate_drawing(d, near_tolerance=near_tolerance).raise_for_errors()
    return d


def check_casing(casing, arrangement: Arrangement = None) -> Casing:
    """Coerce a mapping, record list or document to a :class:`Casing`."""
    if isinstance(casing, Casing):
        out = casing
    elif isinstance(casing, dict) and "casing" not in casing:
        out = Casing({tuple(sorted(k)): v for k, v in casing.items()})
    else:
        from .documents import parse_casing

        out = parse_casing(casing)
    if arrangement is not None:
        out.check_covers(arrangement)
    return out


def check_model_objective(model: str, objective: str, solvable: bool = True):
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}; choose from {', '.join(OBJECTIVES)}")
    if solvable and (model, objective) in OPEN_PAIRS:
        raise OpenProblemError(f"{objective} in the {model} model is an open problem (Table 1); no solver is provided")
