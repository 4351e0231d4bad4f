"""Exact algorithms for casing edge crossings in straight-line drawings.

A casing decides, at every crossing, which edge is drawn on top.  The
package builds the crossing arrangement exactly, solves the tractable
objectives in the stacking and weaving models, and ships a brute-force
oracle to check them against.
"""

__version__ = "0.1.0"

from ._exact import RootSum
from .arrangement import Arrangement, build_arrangement
from .crossing_graph import Casing, ConstraintGraph, ObjectiveReport, build_crossing_graph, casing_metrics, zero_switch_casing
from .documents import parse_casing, parse_drawing, serialize_casing, serialize_drawing
from .estimator import CasingOptimizer
from .exceptions import (
    BudgetExceeded,
    CapExceeded,
    CasingError,
    CasingMismatch,
    DegenerateOverlap,
    DocumentError,
    InvalidDrawingError,
    OpenProblemError,
    ParallelEdges,
)
from .fixtures import generate_fixture
from .geometry import (
    Drawing,
    crossing_angle_sin,
    degree_one_transform,
    find_crossings,
    segment_intersection,
    tunnel_length,
    validate_drawing,
)
from .oracle import enumerate_optimal_casing, is_stackable
from .render import SvgStyle, render_svg
from .solvers import Solution, solve
from .stacking import EdgeGapStructure, bottom_values, solve_stacking
from .switches import dual_distances, odd_face_polygons, solve_min_total_switches, switch_lower_bound
from .tunnels import (
    UNBOUNDED,
    candidate_distances,
    max_min_distance_feasible,
    min_max_indegree_orientation,
    solve_max_min_tunnel_distance_weaving,
    solve_min_max_tunnel_length_exact,
    solve_min_max_tunnels_weaving,
)

__all__ = [name for name in dir() if not name.startswith("_")]
