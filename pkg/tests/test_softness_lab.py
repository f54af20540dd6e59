import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial.transform import Rotation

from cwlab import (
    PreconditionError,
    UsageError,
    boundary_lift_points,
    coplanarity_residual,
    diameter_orthogonality_check,
    nonopenness_report,
    project,
    reuleaux_triangle,
    rotate,
    scale,
)
from cwlab.geometry_core import ball, direction_grid, support_eval, support_profile
from cwlab.softness_lab import is_coplanar

S2, S3 = np.sqrt(2.0), np.sqrt(3.0)
PAPER_POINTS = [(0, 1, 0), (0, -1, 0), (-1, 0, S2), (1, 0, S2)]
AXES = [(1, 0), (-1, 0), (0, 1), (0, -1)]


def test_project_ball():
    g = direction_grid(2, 64)
    np.testing.assert_allclose(
        support_profile(project(ball((0, 0, 5), 1.5)), g).values,
        support_profile(ball((0, 0), 1.5), g).values,
        atol=1e-15,
    )
    with pytest.raises(UsageError):
        project(ball((0, 0), 1))


def test_projected_simplex_extremes(simplex):
    vals = support_profile(project(simplex), direction_grid(2, 4096)).values
    assert vals.min() == pytest.approx(1.0, abs=1e-12)
    # two-sphere closed form at the diagonal (1,1)/sqrt2
    assert vals.max() == pytest.approx(S3 - S2 / 2, abs=1e-9)
    u = np.array([1, 1, 0]) / S2
    assert support_eval(simplex, u) == pytest.approx(S3 - S2 / 2, abs=1e-12)


def test_boundary_lift_points_ball():
    pts = boundary_lift_points(ball((0, 0, 0), 1), AXES)
    np.testing.assert_allclose(pts, [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)], atol=1e-15)


def test_boundary_lift_points_simplex(simplex):
    pts = boundary_lift_points(simplex, [(0, 1)])
    np.testing.assert_allclose(pts[0], (0, 1, 0), atol=1e-12)
    pts = boundary_lift_points(simplex, AXES)
    np.testing.assert_allclose(pts, [(1, 0, S2), (-1, 0, S2), (0, 1, 0), (0, -1, 0)], atol=1e-12)
    # each lifted point lies on the boundary of the projection
    P = project(simplex)
    for u, p in zip(AXES, pts):
        assert p[:2] @ u == pytest.approx(support_eval(P, u), abs=1e-12)


def test_boundary_lift_validation(simplex):
    with pytest.raises(UsageError):
        boundary_lift_points(simplex, [])
    with pytest.raises(UsageError):
        boundary_lift_points(ball((0, 0), 1), AXES)
    with pytest.raises(UsageError):
        boundary_lift_points(simplex, [(1, 1)])


def test_coplanarity_examples():
    assert coplanarity_residual([(0, 0, 0), (1, 2, 3), (4, 5, 7)]) == 0.0
    assert coplanarity_residual([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]) == 0.0
    # edge vectors (0,-2,0), (-1,-1,sqrt2), (1,-1,sqrt2)
    assert coplanarity_residual(PAPER_POINTS) == pytest.approx(4 * S2, abs=1e-12)
    with pytest.raises(UsageError):
        coplanarity_residual([(0, 0, 0), (1, 1, 1)])


def test_coplanarity_many_points(rng):
    t = rng.uniform(0, 2 * np.pi, 12)
    flat = np.column_stack([np.cos(t), np.sin(t), np.zeros(12)])
    tilted = Rotation.from_rotvec([0.3, -0.4, 1.0]).apply(flat) + [1, 2, 3]
    assert coplanarity_residual(tilted) < 1e-12
    assert is_coplanar(tilted)
    bumped = tilted.copy()
    bumped[0] += [0, 0, 0.1]
    assert not is_coplanar(bumped)


@settings(max_examples=10, deadline=None)
@given(rot=st.lists(st.floats(-3, 3), min_size=3, max_size=3),
       shift=st.lists(st.floats(-5, 5), min_size=3, max_size=3))
def test_coplanarity_rigid_invariance(rot, shift):
    P = Rotation.from_rotvec(rot).apply(np.array(PAPER_POINTS, float)) + shift
    assert coplanarity_residual(P) == pytest.approx(4 * S2, abs=1e-9)


def test_diameter_check_ball():
    assert diameter_orthogonality_check(ball((0.2, 0.1), 0.8), direction_grid(2, 256)) <= 1e-12


@pytest.mark.parametrize("i", [1, 5])
def test_diameter_check_polygons(polygons, i):
    assert diameter_orthogonality_check(polygons[i], direction_grid(2, 4096)) <= 1e-8


def test_diameters_parallel_to_normals(polygons):
    g = direction_grid(2, 2048)
    for K in (polygons[3], rotate(reuleaux_triangle(2.0), 0.3), scale(polygons[1], 0.5)):
        U = g.directions
        d = K.support_many(U)[1] - K.support_many(-U)[1]
        cross = d[:, 0] * U[:, 1] - d[:, 1] * U[:, 0]
        ang = np.arctan2(np.abs(cross), np.einsum("md,md->m", d, U))
        assert ang.max() <= 1e-7


def test_diameter_check_requires_constant_width(simplex):
    with pytest.raises(PreconditionError) as err:
        diameter_orthogonality_check(simplex, direction_grid(3, 500), 1e-6)
    assert err.value.report.max_width > err.value.report.min_width


def test_nonopenness_report():
    rep = nonopenness_report(4, m2=4096, m3=2000)
    assert rep.coplanarity == pytest.approx(4 * S2, abs=1e-9)
    np.testing.assert_allclose(rep.witness_points, PAPER_POINTS, atol=1e-9)
    assert all(r <= 1e-8 for r in rep.diameter_residuals)
    assert len(rep.diameter_residuals) == 4
    assert all(a > b for a, b in zip(rep.hausdorff_to_disc, rep.hausdorff_to_disc[1:]))
    assert rep.projection_deviation == pytest.approx(S3 - S2 / 2 - 1, abs=1e-9)
    d = rep.to_dict()
    assert list(d) == [
        "width_report_L", "projection_deviation", "witness_points", "coplanarity",
        "diameter_residuals", "hausdorff_to_disc",
    ]
    with pytest.raises(UsageError):
        nonopenness_report(0)


def test_witness_points_stable():
    a = nonopenness_report(1, m2=64, m3=64)
    b = nonopenness_report(1, m2=64, m3=64)
    assert a.to_dict() == b.to_dict()
