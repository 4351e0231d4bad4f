import itertools

import pytest

from casedraw.arrangement import build_arrangement
from casedraw.crossing_graph import casing_metrics
from casedraw.fixtures import grid, parallel_triangles, pentagram, triangle, two_triangles
from casedraw.geometry import degree_one_transform
from casedraw.matching import EXACT_DP_LIMIT, MatchingInstance, _match_blossom, _match_small, min_weight_perfect_matching
from casedraw.oracle import enumerate_optimal_casing
from casedraw.switches import dual_distances, odd_face_polygons, solve_min_total_switches, switch_lower_bound


def d1_arrangement(d):
    return build_arrangement(degree_one_transform(d), validate=False)


class TestOddFaces:
    def test_triangle(self):
        assert odd_face_polygons(d1_arrangement(triangle())).q == 1

    def test_grid(self):
        assert odd_face_polygons(d1_arrangement(grid())).q == 0

    def test_two_triangles(self):
        assert odd_face_polygons(d1_arrangement(two_triangles())).q == 2

    def test_independent_of_clip_ratio(self):
        d = parallel_triangles(2)
        counts = {
            odd_face_polygons(build_arrangement(degree_one_transform(d, ratio=r), validate=False)).q
            for r in ("1/10", "1/2", "9/10")
        }
        assert len(counts) == 1


class TestDualDistances:
    def test_triangle_to_outside(self):
        arr = d1_arrangement(triangle())
        dd = dual_distances(arr, odd_face_polygons(arr))
        assert dd.matrix[0][-1] == 1

    def test_two_triangles_between(self):
        arr = d1_arrangement(two_triangles())
        dd = dual_distances(arr, odd_face_polygons(arr))
        assert dd.matrix[0][1] == dd.matrix[1][0] == 2

    def test_center_cell_of_four_by_four_grid(self):
        arr = d1_arrangement(grid(4, 4))
        center = next(r.face for r in arr.face_records if r.has_polygon and not arr.faces[r.face].unbounded
                      and all(f != arr.unbounded for f, _ in arr.face_adjacency()[r.face]))
        from casedraw.switches import OddFaceSet

        dd = dual_distances(arr, OddFaceSet((center,)))
        assert dd.matrix[0][-1] == 2

    def test_path_lengths_match_distances(self):
        arr = d1_arrangement(two_triangles())
        odd = odd_face_polygons(arr)
        dd = dual_distances(arr, odd)
        assert len(dd.path(0, odd.faces[1])) == dd.matrix[0][1]
        assert len(dd.path(0, arr.unbounded)) == dd.matrix[0][-1]


class TestMatching:
    def test_single_face(self):
        pairs, w = min_weight_perfect_matching(MatchingInstance(((None,),), (1,)))
        assert w == 1 and pairs == [(("f", 0), ("o", 0))]

    def test_tie_prefers_outer(self):
        inst = MatchingInstance(((None, 2), (2, None)), (1, 1))
        pairs, w = min_weight_perfect_matching(inst)
        assert w == 2
        assert pairs == [(("f", 0), ("o", 0)), (("f", 1), ("o", 1))]

    def test_pair_when_cheaper(self):
        inst = MatchingInstance(((None, 1), (1, None)), (3, 3))
        pairs, w = min_weight_perfect_matching(inst)
        assert w == 1
        assert (("f", 0), ("f", 1)) in pairs and (("o", 0), ("o", 1)) in pairs

    def test_weights(self):
        inst = MatchingInstance(((None, 2), (2, None)), (1, 4))
        assert inst.weight(("f", 0), ("f", 1)) == 2
        assert inst.weight(("f", 1), ("o", 1)) == 4
        assert inst.weight(("o", 0), ("o", 1)) == 0
        assert inst.weight(("f", 0), ("o", 1)) is None

    @pytest.mark.parametrize("seed", range(12))
    def test_blossom_agrees_with_subset_search(self, seed):
        import random

        rng = random.Random(seed)
        q = rng.randint(1, 9)
        pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(q)]
        dist = tuple(
            tuple(None if i == j else abs(a[0] - b[0]) + abs(a[1] - b[1]) + 1 for j, b in enumerate(pts))
            for i, a in enumerate(pts)
        )
        outer = tuple(min(p[0], p[1], 6 - p[0], 6 - p[1]) + 1 for p in pts)
        inst = MatchingInstance(dist, outer)
        assert _match_small(inst)[0] == _match_blossom(inst)[0]

    def test_brute_force_small(self):
        inst = MatchingInstance(((None, 3, 1), (3, None, 2), (1, 2, None)), (2, 2, 2))
        best = min(
            sum(inst.face_dist[a][b] for a, b in pairs) + 2 * (3 - 2 * len(pairs))
            for r in range(2)
            for pairs in itertools.combinations([(0, 1), (0, 2), (1, 2)], r)
        )
        assert min_weight_perfect_matching(inst)[1] == best == 3

    def test_limit_constant(self):
        assert EXACT_DP_LIMIT >= 10


@pytest.mark.parametrize(
    "make, expected",
    [(triangle, 1), (two_triangles, 2), (pentagram, 1), (grid, 0)],
    ids=["triangle", "two-triangles", "pentagram", "grid"],
)
def test_solver_examples(make, expected):
    casing, report = solve_min_total_switches(make())
    assert report.total_switches == expected
    assert casing_metrics(build_arrangement(make()), casing).total_switches == expected


def test_lower_bound_examples():
    assert switch_lower_bound(build_arrangement(triangle())) == 1
    assert switch_lower_bound(build_arrangement(grid())) == 0


def test_parallel_triangles_bound_grows():
    qs = [odd_face_polygons(d1_arrangement(parallel_triangles(p))).q for p in (2, 3, 4)]
    assert qs == sorted(qs) and qs[0] < qs[-1]
    for p in (2, 3):
        d = parallel_triangles(p)
        _, rep = solve_min_total_switches(d)
        assert switch_lower_bound(build_arrangement(d)) <= rep.total_switches


def test_parallel_triangles_matches_oracle():
    d = parallel_triangles(2)
    assert solve_min_total_switches(d)[1].total_switches == enumerate_optimal_casing(d, "weaving", "min-total-switches").value


def test_nested_triangles():
    from casedraw.fixtures import from_segments

    big = [((-10, 0), (50, 0)), ((50, -15), (10, 45)), ((30, 45), (-10, -15))]
    small = [((14, 5), (20, 5)), ((20, 3.5), (16, 9.5)), ((18, 9.5), (14, 3.5))]
    from fractions import Fraction as F

    small = [((F(str(p[0])), F(str(p[1]))), (F(str(q[0])), F(str(q[1])))) for p, q in small]
    d = from_segments(big + small)
    _, rep = solve_min_total_switches(d)
    assert rep.total_switches == enumerate_optimal_casing(d, "weaving", "min-total-switches").value == 2
