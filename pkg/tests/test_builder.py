import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordered_theta.builder import OrderedThetaGraph, build, validate_general_position
from ordered_theta.errors import DegenerateInput, DuplicatePoint
from ordered_theta.geometry import cone_and_projection
from ordered_theta.instances import random_points
from ordered_theta.oracles import connected, theta_edges_bruteforce


def test_single_vertex():
    g = build([(0, 0)], 4)
    assert g.n == 1 and g.m == 0 and g.edges() == []


def test_second_vertex_connects_to_first():
    assert build([(0, 0), (1, 2)], 4).edges() == [(1, 2)]


def test_fig3_pattern(fig3):
    assert fig3.edges() == [(1, 2), (2, 3)]
    assert theta_edges_bruteforce([(0, 0), (2, 1), (1, 3)], 4) == {(1, 2), (2, 3)}
    # v3 is in cone 0 of v1 but v1 has no edge in that cone
    assert cone_and_projection((0, 0), (1, 3), 4)[0] == 0
    assert all(cone_and_projection((0, 0), fig3.point(nb.id), 4)[0] != 0 for nb in fig3.neighbours(1))


def test_adjacency_is_ccw(fig3, four):
    assert [nb.id for nb in fig3.neighbours(2)] == [3, 1]
    assert fig3.neighbours(2)[0].angle == pytest.approx(math.atan2(2, -1))
    assert [nb.id for nb in four.neighbours(1)] == [2, 4]


def test_validate_ok():
    assert validate_general_position([(0, 0), (1, 2)], 4).ok


def test_validate_boundary_ray():
    report = validate_general_position([(0, 0), (1, 1)], 4)
    assert not report.ok
    assert [(v.kind, v.vertex, v.other) for v in report.violations] == [("boundary", 2, 1)]


def test_validate_reports_v5():
    report = validate_general_position([(0, 0), (1, 0), (-1, 0), (-2, 0), (0, -2)], 4)
    assert report.vertex_ids() == [5]
    assert ("boundary", 5, 4) in [(v.kind, v.vertex, v.other) for v in report.violations]


def test_validate_tie_with_minimum():
    # v2 and v3 both at projection 1 in cone 0 of v4
    report = validate_general_position([(0.3, 1.0), (-0.3, 1.0), (5.0, -4.0), (0.0, 0.0)], 4)
    kinds = {(v.kind, v.vertex) for v in report.violations}
    assert ("tie", 4) in kinds


def test_non_minimal_tie_is_allowed():
    # v2 and v3 tie at projection 2 but v4's closest vertex in cone 0 is v1 at 1
    pts = [(0.0, 1.0), (0.3, 2.0), (-0.3, 2.0), (0.0, 0.0)]
    assert validate_general_position(pts, 4).ok
    assert (1, 4) in build(pts, 4).edges()


def test_same_direction_neighbours_flagged():
    # v2 and v3 both link back to v1 and sit straight above it
    report = validate_general_position([(0.0, 0.0), (0.0, 2.0), (0.0, 1.0)], 4)
    assert [(v.kind, v.vertex) for v in report.violations] == [("angle", 1), ("angle", 2)]


def test_build_errors():
    with pytest.raises(DuplicatePoint):
        build([(0, 0), (1, 2), (0, 0)], 4)
    with pytest.raises(DegenerateInput) as info:
        build([(0, 0), (1, 1)], 4)
    assert info.value.violations[0].vertex == 2
    with pytest.raises(ValueError):
        build([(0, 0)], 1)
    with pytest.raises(ValueError):
        build([(0, float("nan"))], 4)


def test_from_edges_roundtrip(four):
    again = OrderedThetaGraph.from_edges(4, four.points, four.edges())
    assert again.same_as(four)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.integers(2, 12), st.integers(0, 10_000))
def test_build_matches_bruteforce(n, k, seed):
    pts = random_points(n, seed, ks=(k,))
    g = build(pts, k)
    assert set(g.edges()) == theta_edges_bruteforce(pts, k)
    assert connected(g)
    assert g.m <= k * (n - 1)
    for u in range(1, n + 1):
        earlier = [nb for nb in g.neighbours(u) if nb.id < u]
        assert len(earlier) <= min(k, u - 1)
        angles = [nb.angle for nb in g.neighbours(u)]
        assert all(a < b for a, b in zip(angles, angles[1:]))
        for nb in g.neighbours(u):
            assert u in g.neighbour_ids(nb.id)


@pytest.mark.parametrize("backend", ["numpy", "python"])
def test_backends_build_identical_graphs(backend):
    pts = random_points(120, 5, ks=(7,))
    assert build(pts, 7, backend=backend).same_as(build(pts, 7))


def test_build_is_deterministic():
    pts = random_points(80, 11, ks=(5,))
    a, b = build(pts, 5), build(list(pts), 5)
    assert a.same_as(b)
    assert a.adjacency == b.adjacency


def test_unique_argmin_per_created_edge():
    pts = random_points(70, 3, ks=(6,))
    g = build(pts, 6)
    for a, b in g.edges():
        u, v = max(a, b), min(a, b)
        cone, d = cone_and_projection(pts[u - 1], pts[v - 1], 6)
        for w in range(1, u):
            if w == v:
                continue
            cw, dw = cone_and_projection(pts[u - 1], pts[w - 1], 6)
            if cw == cone:
                assert dw > d
