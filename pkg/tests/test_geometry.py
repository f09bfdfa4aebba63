import math
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polygons, star_polygon
from dirichlet_bounds.errors import InputError, ThresholdError
from dirichlet_bounds.geometry import (
    N_PARTS,
    THREE_PARTS,
    Polygon,
    SmoothArc,
    arc_partition,
    chord_graph_check,
    extended_volume_bound,
    inertia_about,
    kj_threshold,
    middle_third_distance,
    moment_of_inertia,
    partition_case,
    polygon_metrics,
    polygon_side_threshold,
    square_count_lower,
    squares_disjoint,
    tile_arc,
    three_point_curvature,
)
from dirichlet_bounds.constants import C1

UNIT = Polygon([[0, 0], [1, 0], [1, 1], [0, 1]])


# -- polygons ---------------------------------------------------------------

def test_unit_square_metrics():
    V, sides, per, c = polygon_metrics(UNIT)
    assert V == 1.0 and per == 4.0
    np.testing.assert_array_equal(sides, [1, 1, 1, 1])
    np.testing.assert_allclose(c, [0.5, 0.5])


def test_right_triangle_metrics():
    V, _, per, _ = polygon_metrics(Polygon([[0, 0], [4, 0], [0, 3]]))
    assert V == pytest.approx(6.0, rel=1e-15)
    assert per == pytest.approx(12.0, rel=1e-15)


@pytest.mark.parametrize("verts", [
    [[0, 0], [1, 1], [2, 2]],  # collinear
    [[0, 0], [0, 1], [1, 1], [1, 0]],  # clockwise
    [[0, 0], [1, 1], [1, 0], [0, 1]],  # bow tie
    [[0, 0], [1, 0]],
])
def test_invalid_polygons(verts):
    with pytest.raises(InputError):
        Polygon(verts)


def test_json_roundtrip():
    P = Polygon.from_json({"vertices": [[0, 0], [2, 0], [1, 3]]})
    assert Polygon.from_json(P.to_json()).area == P.area


def test_unit_square_inertia():
    I, a = moment_of_inertia(UNIT)
    assert I == pytest.approx(1 / 6, rel=1e-14)
    np.testing.assert_allclose(a, [0.5, 0.5], atol=1e-15)


def test_translated_square_inertia():
    I, a = moment_of_inertia(UNIT.transformed(shift=(10, 10)))
    assert I == pytest.approx(1 / 6, rel=1e-12)
    np.testing.assert_allclose(a, [10.5, 10.5], rtol=1e-14)


def test_regular_256gon_inertia_near_disk():
    I, _ = moment_of_inertia(Polygon.regular(256, area=1.0))
    assert abs(I * 2 * math.pi - 1) < 5e-3


def test_inertia_quadrature_oracle():
    # independent route: integrate |x - c|^2 over a fan of triangles with a 7-point rule
    P = star_polygon(np.random.default_rng(4), n=9)
    I, c = moment_of_inertia(P)
    bary = np.array([[1 / 3, 1 / 3], [0.0597158717, 0.4701420641], [0.4701420641, 0.0597158717],
                     [0.4701420641, 0.4701420641], [0.7974269853, 0.1012865073],
                     [0.1012865073, 0.7974269853], [0.1012865073, 0.1012865073]])
    w = np.array([0.225, *[0.1323941527] * 3, *[0.1259391805] * 3])
    total = 0.0
    v = P.vertices
    for p, q in zip(v, np.roll(v, -1, axis=0)):
        area = 0.5 * ((p - c)[0] * (q - c)[1] - (p - c)[1] * (q - c)[0])
        pts = c + bary[:, :1] * (p - c) + bary[:, 1:] * (q - c)
        total += area * float(w @ np.sum((pts - c) ** 2, axis=1))
    assert I == pytest.approx(total, rel=1e-8)


@settings(max_examples=200, deadline=None)
@given(polygons())
def test_inertia_isoperimetric(P):
    I, _ = moment_of_inertia(P)
    assert I >= P.area**2 / (2 * math.pi) * (1 - 1e-12)


@settings(max_examples=100, deadline=None)
@given(polygons(), st.floats(-5, 5), st.floats(-5, 5))
def test_inertia_parallel_axis(P, x, y):
    I, c = moment_of_inertia(P)
    a = np.array([x, y])
    assert inertia_about(P, a) == pytest.approx(I + P.area * float((a - c) @ (a - c)), rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(polygons(), st.floats(0, 2 * math.pi), st.floats(-100, 100), st.floats(-100, 100))
def test_rigid_motion_invariance(P, th, x, y):
    Q = P.transformed(rotation=th, shift=(x, y))
    assert Q.area == pytest.approx(P.area, rel=1e-12)
    np.testing.assert_allclose(Q.side_lengths, P.side_lengths, rtol=1e-12)
    assert moment_of_inertia(Q)[0] == pytest.approx(moment_of_inertia(P)[0], rel=1e-10)
    for j in range(P.n):
        assert middle_third_distance(Q, j) == pytest.approx(middle_third_distance(P, j), rel=1e-9, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(polygons(), st.floats(0.1, 10))
def test_scaling_covariance(P, c):
    Q = P.transformed(scale=c)
    assert Q.area == pytest.approx(c * c * P.area, rel=1e-12)
    assert moment_of_inertia(Q)[0] == pytest.approx(c**4 * moment_of_inertia(P)[0], rel=1e-10)
    for j in range(P.n):
        assert polygon_side_threshold(Q, j) == pytest.approx(polygon_side_threshold(P, j), rel=1e-9)


def test_middle_third_unit_square():
    for j in range(4):
        assert middle_third_distance(UNIT, j) == 1 / 3


def test_middle_third_long_rectangle():
    R = Polygon.rectangle(10, 1)
    assert middle_third_distance(R, 0) == pytest.approx(1.0, rel=1e-15)
    assert middle_third_distance(R, 1) == pytest.approx(1 / 3, rel=1e-15)


def test_middle_third_equilateral():
    T = Polygon([[0, 0], [1, 0], [0.5, math.sqrt(3) / 2]])
    for j in range(3):
        assert middle_third_distance(T, j) == pytest.approx(math.sqrt(3) / 6, rel=1e-12)


def test_side_threshold_values():
    assert polygon_side_threshold(UNIT, 0) == pytest.approx(81 / (2 * math.pi), rel=1e-14)
    big = UNIT.transformed(scale=2.0)
    assert polygon_side_threshold(big, 2) == pytest.approx(81 / (2 * math.pi), rel=1e-14)


def test_zero_gap_gives_infinite_threshold(monkeypatch):
    import dirichlet_bounds.geometry.polygon as poly
    monkeypatch.setattr(poly, "middle_third_distance", lambda P, j: 0.0)
    assert poly.polygon_side_threshold(UNIT, 0) == math.inf


def test_contains():
    pts = np.array([[0.5, 0.5], [0.0, 0.5], [1.5, 0.5], [1.0, 1.0]])
    np.testing.assert_array_equal(UNIT.contains(pts), [True, False, False, False])


# -- arcs -------------------------------------------------------------------

def test_partition_quarter_circle():
    arc = SmoothArc.circle(1.0, sweep=math.pi / 2)
    assert partition_case(arc.length, arc.kappa_max) == (N_PARTS, 4)


def test_partition_full_circle():
    arc = SmoothArc.circle(1.0)
    part = arc_partition(arc)
    assert part.case == N_PARTS and part.n_pieces == 16
    assert 0 < part.d < 2


def test_partition_straight():
    arc = SmoothArc.segment([0, 0], [1, 0])
    with pytest.warns(UserWarning):
        part = arc_partition(arc)
    assert part.case == THREE_PARTS
    np.testing.assert_allclose(part.breakpoints, [0, 1 / 3, 2 / 3, 1])
    assert part.d == math.inf


def test_partition_boundary_inclusive():
    kappa = 2.0
    assert partition_case(3 * math.pi / (8 * kappa), kappa)[0] == THREE_PARTS
    assert partition_case(3 * math.pi / (8 * kappa) * (1 + 1e-9), kappa)[0] == N_PARTS


def test_partition_three_parts_with_rest():
    arc = SmoothArc.segment([0, 0], [1, 0])
    part = arc_partition(arc, [np.array([[0, 0.25], [1, 0.25]])])
    assert part.d == pytest.approx(0.25, abs=1e-12)


def test_three_point_curvature_circle():
    t = np.linspace(0, 1, 50)
    pts = np.column_stack([2 * np.cos(t), 2 * np.sin(t)])
    np.testing.assert_allclose(three_point_curvature(pts), 0.5, rtol=1e-6)


def test_ellipse_arclength_and_curvature():
    arc = SmoothArc.ellipse(2.0, 1.0, nsamples=257)
    from scipy.special import ellipe
    assert arc.length == pytest.approx(4 * 2.0 * ellipe(1 - 0.25), rel=1e-10)
    assert arc.kappa_max == pytest.approx(2.0, rel=1e-6)  # a / b^2
    np.testing.assert_allclose(np.diff(arc.s), arc.length / 256, rtol=1e-12)
    chords = np.hypot(*np.diff(arc.points, axis=0).T)
    assert np.all(chords <= np.diff(arc.s) * (1 + 1e-9))


def test_arc_json_roundtrip():
    arc = SmoothArc.from_json({"primitive": "circle", "params": {"radius": 2.0, "sweep": 1.0}, "nsamples": 33})
    back = SmoothArc.from_json(arc.to_json())
    np.testing.assert_allclose(back.points, arc.points)
    assert back.kappa_max == pytest.approx(0.5)


def test_arc_rejects_bad_samples():
    with pytest.raises(InputError):
        SmoothArc.from_samples([[0, 0, 0, 0], [0.5, 1, 0, 0]])  # chord 1 > arc 0.5


def test_kj_threshold_unit_area_disk():
    r = 1 / math.sqrt(math.pi)
    arc = SmoothArc.circle(r)
    part = arc_partition(arc)
    kj = kj_threshold(arc, part, 1.0)
    terms = [9 * 2**10 / r**2, 2**64 * C1, 2**22 * 6**8 / r**4 / C1, 9 / part.d**2,
             128 / (math.pi * r) ** 2, 6 / (r * part.d)]
    assert 2**64 * C1 == pytest.approx(1.5135e8, rel=1e-4)
    assert kj == pytest.approx(max(terms) / (2 * math.pi), rel=1e-14)
    assert kj > 1e10


def test_kj_threshold_straight_piece():
    arc = SmoothArc.segment([0, 0], [1, 0])
    part = arc_partition(arc, [np.array([[0, 1 / 3], [1, 1 / 3]])])
    kj = kj_threshold(arc, part, 1.0)
    assert kj == pytest.approx(2**64 * C1 / (2 * math.pi), rel=1e-12)


def test_kj_threshold_zero_gap():
    arc = SmoothArc.segment([0, 0], [1, 0])
    part = arc_partition(arc, [np.array([[0.5, 0.0], [0.5, 1.0]])])
    assert part.d == 0.0
    assert kj_threshold(arc, part, 1.0) == math.inf


def test_chord_check_circle():
    arc = SmoothArc.circle(1.0)
    chk = chord_graph_check(arc, 0.0, math.pi / 4)
    assert chk.ok and chk.precondition
    assert chk.u0 == pytest.approx(2 * math.sin(math.pi / 8), rel=1e-12)
    assert chk.max_sagitta == pytest.approx(1 - math.cos(math.pi / 8), rel=1e-6)


def test_chord_check_segment():
    chk = chord_graph_check(SmoothArc.segment([0, 0], [3, 4]), 1.0, 4.0)
    assert chk.ok and chk.u0 == pytest.approx(3.0) and chk.max_sagitta == pytest.approx(0.0, abs=1e-14)


def test_chord_check_precondition():
    chk = chord_graph_check(SmoothArc.circle(1.0), 0.0, math.pi / 2)
    assert not chk.precondition and not chk.ok


@settings(max_examples=60, deadline=None)
@given(st.floats(0.2, 5), st.floats(0, 1), st.floats(0.01, 1))
def test_chord_check_random_circle_subarcs(R, a, frac):
    arc = SmoothArc.circle(R, nsamples=513)
    span = frac * math.pi / 4 * R
    s1 = a * (arc.length - span)
    assert chord_graph_check(arc, s1, s1 + span).ok


# -- tiling -----------------------------------------------------------------

def test_square_counts():
    assert square_count_lower(1.0, 1800, True) == 10
    assert square_count_lower(9 * math.sqrt(2), 1.0, False) == 1
    assert square_count_lower(1.0, 0.0, True) == 0


def test_extended_volume():
    arc = SmoothArc.circle(1.0, sweep=1.0)
    ev = extended_volume_bound([arc], 1.0, 2**1.5)
    assert ev.bound == pytest.approx(2.0) and not ev.doubled_ok
    ev = extended_volume_bound([arc], 1.0, 9216.0)
    assert ev.doubled_ok and ev.bound <= 2.0
    flat = SmoothArc.segment([0, 0], [1, 0])
    assert extended_volume_bound([flat], 3.0, 10.0).bound == 3.0


def test_tile_straight_piece():
    arc = SmoothArc.segment([0, 0], [1, 0])
    part = arc_partition(arc, [np.array([[0, 1.0], [1, 1.0]])])
    til = tile_arc(arc, part, 1e4)
    a = math.sqrt(2) / 100
    S, cov = til.coverage[0]
    assert cov >= S / 3 and S - cov <= a + 1e-12
    assert len(til.squares) >= square_count_lower(1.0, 1e4, True)
    assert til.disjoint
    np.testing.assert_allclose(np.diff(til.arcs, axis=1), a)


def test_tile_quarter_circle():
    arc = SmoothArc.circle(1.0, sweep=math.pi / 2)
    part = arc_partition(arc, [np.array([[0, 1], [0, 0], [1, 0]])])
    til = tile_arc(arc, part, 1e6, inside=lambda p: float(np.hypot(*p)) < 1)
    assert til.disjoint and len(til.squares) > 100
    # outer sides sit on the exterior offset line, the rest reaches inwards
    rad = np.hypot(til.squares[..., 0], til.squares[..., 1])
    assert rad.max() <= 1 + 2**1.5 / 1e6 + 1e-9
    assert rad.min() >= 1 - 0.5e-3 * math.sqrt(2) - 1e-9


def test_tile_threshold_error():
    arc = SmoothArc.circle(1.0, sweep=math.pi / 2)
    part = arc_partition(arc, [np.array([[0, 1], [0, 0], [1, 0]])])
    with pytest.raises(ThresholdError, match="d/3"):
        tile_arc(arc, part, 1.0)


def test_squares_disjoint_detects_overlap():
    sq = np.array([[[0, 0], [1, 0], [1, 1], [0, 1]], [[0.5, 0.5], [1.5, 0.5], [1.5, 1.5], [0.5, 1.5]]], float)
    assert not squares_disjoint(sq)
    sq[1] += 0.5
    assert squares_disjoint(sq)  # touching at a corner only
