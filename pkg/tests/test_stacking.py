from fractions import Fraction as F

import pytest

from casedraw.arrangement import build_arrangement
from casedraw.crossing_graph import casing_metrics, dist2
from casedraw.fixtures import from_segments, grid, parallel_triangles, triangle, two_triangles
from casedraw.oracle import casing_from_order, enumerate_optimal_casing, is_stackable
from casedraw.stacking import STACKING_OBJECTIVES, EdgeGapStructure, bottom_values, greedy_order, solve_stacking


def test_bottom_values_grid():
    arr = build_arrangement(grid())
    assert set(bottom_values(arr, "min-max-tunnels").values()) == {3}
    assert set(bottom_values(arr, "max-min-tunnel-distance").values()) == {1}
    lengths = bottom_values(arr, "min-max-tunnel-length")
    assert all(v == F(3, 10) for v in lengths.values())


def test_bottom_values_uncrossed_edge():
    arr = build_arrangement(from_segments([((0, 0), (1, 0)), ((0, 2), (1, 2))]))
    assert bottom_values(arr, "min-max-tunnels") == {0: 0, 1: 0}
    assert bottom_values(arr, "max-min-tunnel-distance") == {0: None, 1: None}


def test_bottom_values_rejects_switch_objective():
    with pytest.raises(ValueError):
        bottom_values(build_arrangement(grid()), "min-total-switches")


class TestEdgeGapStructure:
    def test_removal_merges_gaps(self):
        s = EdgeGapStructure([(0, (0, 0)), (1, (1, 0)), (2, (3, 0)), (3, (7, 0))])
        assert s.min_gap2() == 1
        s.remove(1)
        assert s.min_gap2() == 9
        s.remove(2)
        assert s.min_gap2() == 49
        s.remove(0)
        assert s.min_gap2() is None
        assert len(s) == 1

    def test_empty(self):
        assert EdgeGapStructure([]).min_gap2() is None


def test_grid_stacks_with_three_tunnels():
    order, casing, rep = solve_stacking(grid(), "min-max-tunnels")
    assert rep.max_tunnels == 3
    assert is_stackable(casing) is not None


@pytest.mark.parametrize("objective", STACKING_OBJECTIVES)
@pytest.mark.parametrize("make", [triangle, two_triangles, grid, lambda: parallel_triangles(2)], ids=["tri", "two", "grid", "par"])
def test_greedy_matches_permutation_oracle(make, objective):
    d = make()
    order, casing, rep = solve_stacking(d, objective)
    assert sorted(order) == sorted(e.id for e in d.edges)
    if d.m <= 7:
        want = enumerate_optimal_casing(d, "stacking", objective).value
        got = rep.value(objective)
        assert (got is None and want is None) or got == want


@pytest.mark.parametrize("objective", STACKING_OBJECTIVES)
def test_trace_values_equal_recomputed_bottom_values(objective):
    d = two_triangles()
    arr = build_arrangement(d)
    trace = []
    order, _ = greedy_order(arr, objective, trace)
    placed = []
    for e, remaining in trace:
        placed.append(e)
        for f, val in remaining.items():
            tunnels_with_rest = [
                arr.crossings[c] for c in arr.per_edge[f] if arr.crossings[c].other(f) not in placed
            ]
            if objective == "min-max-tunnels":
                assert val == len(tunnels_with_rest)
            elif objective == "max-min-tunnel-distance":
                gaps = [dist2(a.point, b.point) for a, b in zip(tunnels_with_rest, tunnels_with_rest[1:])]
                assert val == (min(gaps) if gaps else None)
            else:
                w = d.casing_width
                assert float(val) == pytest.approx(sum(float(c.tunnel_length2(w)) ** 0.5 for c in tunnels_with_rest))


def test_order_induces_report_value():
    arr = build_arrangement(parallel_triangles(2))
    for objective in STACKING_OBJECTIVES:
        order, agg = greedy_order(arr, objective)
        got = casing_metrics(arr, casing_from_order(arr, order)).value(objective)
        assert (got is None and agg is None) or got == agg


def test_model_tag():
    assert solve_stacking(triangle(), "min-max-tunnels")[2].extra["model"] == "stacking"
