from decimal import Decimal
from fractions import Fraction as F

import pytest

from casedraw._exact import RootSum, as_fraction
from casedraw.exceptions import DegenerateOverlap, InvalidDrawingError, ParallelEdges
from casedraw.fixtures import from_segments, grid
from casedraw.geometry import (
    Drawing,
    crossing_angle_sin,
    crossing_angle_sin2,
    degree_one_transform,
    find_crossings,
    segment_intersection,
    tunnel_length,
    validate_drawing,
)


def seg(x1, y1, x2, y2):
    return ((F(x1), F(y1)), (F(x2), F(y2)))


class TestSegmentIntersection:
    def test_symmetric_cross(self):
        hit = segment_intersection(seg(0, 0, 2, 2), seg(0, 2, 2, 0))
        assert hit.point == (1, 1)

    def test_disjoint_collinear(self):
        assert segment_intersection(seg(0, 0, 1, 0), seg(2, 0, 3, 0)) is None

    def test_perpendicular_params(self):
        hit = segment_intersection(seg(0, 0, 4, 0), seg(1, -1, 1, 1))
        assert hit.point == (1, 0)
        assert (hit.t, hit.u) == (F(1, 4), F(1, 2))

    def test_shared_endpoint_is_not_a_crossing(self):
        assert segment_intersection(seg(0, 0, 1, 1), seg(1, 1, 2, 0)) is None

    def test_touching_interior_is_not_a_crossing(self):
        assert segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 1, 1)) is None

    def test_parallel_apart(self):
        assert segment_intersection(seg(0, 0, 2, 0), seg(0, 1, 2, 1)) is None

    def test_collinear_touching_ends(self):
        assert segment_intersection(seg(0, 0, 1, 0), seg(1, 0, 2, 0)) is None

    def test_overlap_is_degenerate(self):
        with pytest.raises(DegenerateOverlap):
            segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 3, 0))


class TestAngles:
    def test_perpendicular(self):
        assert crossing_angle_sin(seg(0, 0, 1, 0), seg(0, 0, 0, 1)) == 1

    def test_twice_arctan_quarter(self):
        # slopes +1/4 and -1/4 meet at 2*arctan(1/4)
        s2 = crossing_angle_sin2(seg(0, 0, 4, 1), seg(0, 0, 4, -1))
        assert s2 == F(64, 289)
        assert crossing_angle_sin(seg(0, 0, 4, 1), seg(0, 0, 4, -1)) == F(8, 17)

    def test_slopes_four_and_quarter(self):
        assert crossing_angle_sin(seg(0, 0, 1, 4), seg(0, 0, 4, 1)) == F(15, 17)

    def test_forty_five_degrees(self):
        assert crossing_angle_sin2(seg(0, 0, 1, 0), seg(0, 0, 1, 1)) == F(1, 2)

    def test_parallel_raises(self):
        with pytest.raises(ParallelEdges):
            crossing_angle_sin2(seg(0, 0, 1, 0), seg(0, 1, 2, 1))


class TestTunnelLength:
    def test_right_angle(self):
        assert tunnel_length(1, 1) == 1

    def test_thirty_degrees(self):
        assert tunnel_length(1, F(1, 2)) == 2

    def test_gadget_angle_is_seventeen_eighths(self):
        w = F(3, 7)
        length = tunnel_length(w, crossing_angle_sin(seg(0, 0, 4, 1), seg(0, 0, 4, -1)))
        assert length == F(17, 8) * w
        assert not length != F(17, 8) * w

    @pytest.mark.parametrize("sin2", [F(1, 10), F(1, 4), F(1, 2), F(9, 10)])
    def test_longer_than_width(self, sin2):
        assert tunnel_length(1, RootSum.sqrt(sin2)) > 1


class TestDrawing:
    def test_decimal_string_is_exact(self):
        d = Drawing([(0, "0.1", "0"), (1, "1", "0")], [(0, 0, 1)], "0.1")
        assert d.vertex(0).x == F(1, 10)
        assert d.casing_width == F(1, 10)

    def test_float_refused(self):
        with pytest.raises(TypeError):
            as_fraction(0.1)

    def test_decimal_accepted(self):
        assert as_fraction(Decimal("2.50")) == F(5, 2)

    @pytest.mark.parametrize(
        "vertices, edges, w",
        [
            ([(0, 0, 0), (0, 1, 1)], [], 1),
            ([(0, 0, 0), (1, 1, 1)], [(0, 0, 2)], 1),
            ([(0, 0, 0), (1, 0, 0)], [(0, 0, 1)], 1),
            ([(0, 0, 0), (1, 1, 1)], [(0, 0, 1)], 0),
        ],
        ids=["duplicate-vertex", "missing-endpoint", "zero-length", "zero-width"],
    )
    def test_invalid(self, vertices, edges, w):
        with pytest.raises(InvalidDrawingError):
            Drawing(vertices, edges, w)


class TestValidation:
    def test_grid_is_clean(self):
        report = validate_drawing(grid())
        assert report.ok and not report.warnings

    def test_vertex_on_edge(self):
        d = from_segments([((0, 0), (4, 0)), ((2, 0), (2, 3))])
        kinds = {i.kind for i in validate_drawing(d).errors}
        assert kinds == {"vertex-near-edge"}

    def test_vertex_near_edge_uses_tolerance(self):
        d = from_segments([((0, 0), (4, 0)), ((2, F(1, 100)), (2, 3))], casing_width=1)
        assert not validate_drawing(d).ok
        assert validate_drawing(d, near_tolerance=F(1, 1000)).ok

    def test_triple_point(self):
        d = from_segments([((-1, 0), (1, 0)), ((0, -1), (0, 1)), ((-1, -1), (1, 1))])
        assert [i.kind for i in validate_drawing(d).errors] == ["concurrent"]

    def test_overlap(self):
        d = from_segments([((0, 0), (2, 0)), ((1, 0), (3, 0))])
        assert "overlap" in {i.kind for i in validate_drawing(d).errors}

    def test_close_crossings_warn(self):
        d = from_segments([((0, 0), (4, 0)), ((1, -1), (1, 1)), ((F(11, 10), -1), (F(11, 10), 1))], casing_width=1)
        report = validate_drawing(d, near_tolerance=F(1, 20))
        assert report.ok
        assert [i.kind for i in report.warnings] == ["crossings-close"]

    def test_raise_for_errors(self):
        d = from_segments([((0, 0), (2, 0)), ((1, 0), (3, 0))])
        with pytest.raises(InvalidDrawingError) as info:
            validate_drawing(d).raise_for_errors()
        assert info.value.report.errors


def test_find_crossings_sorted_and_keyed():
    crossings, overlaps = find_crossings(grid())
    assert not overlaps
    assert [c.id for c in crossings] == list(range(9))
    assert [c.key for c in crossings] == sorted(c.key for c in crossings)
    assert all(c.edge_a < c.edge_b for c in crossings)
    assert all(0 < c.param_a < 1 and 0 < c.param_b < 1 for c in crossings)


def test_degree_one_transform_keeps_crossings():
    d = from_segments([((0, 0), (4, 0)), ((1, -1), (1, 1)), ((0, 0), (3, 3))])
    d1 = degree_one_transform(d)
    assert all(d1.degree(v.id) == 1 for v in d1.vertices)
    before = {c.key: c.point for c in find_crossings(d)[0]}
    after = {c.key: c.point for c in find_crossings(d1)[0]}
    assert before == after


def test_degree_one_transform_rejects_bad_ratio():
    with pytest.raises(ValueError):
        degree_one_transform(grid(), ratio=1)
