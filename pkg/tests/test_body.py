import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cwlab import (
    EmptyBody,
    UnsupportedQuery,
    UsageError,
    minkowski_sum,
    negate,
    project,
    reuleaux_polygon,
    rotate,
    scale,
)
from cwlab.geometry_core import (
    Ball,
    BallIntersection,
    Project3to2,
    Rotate2D,
    angle_direction,
    ball,
    contains,
    direction_grid,
    support_eval,
    support_point,
    support_profile,
)
from conftest import kkt_certificate

S2, S3 = np.sqrt(2.0), np.sqrt(3.0)


def test_unit_ball_support():
    B = ball((0, 0, 0), 1.0)
    for u in direction_grid(3, 50).directions:
        assert support_eval(B, u) == pytest.approx(1.0, abs=1e-15)
        np.testing.assert_allclose(support_point(B, u), u, atol=1e-15)


def test_ball_support_point():
    B = ball((1.0, -2.0), 0.5)
    u = angle_direction(0.7)
    np.testing.assert_allclose(support_point(B, u), np.array([1, -2]) + 0.5 * u, atol=1e-15)


def test_triangle_plateaus(triangle):
    assert support_eval(triangle, angle_direction(np.pi / 6)) == pytest.approx(1.0, abs=1e-12)
    assert support_eval(triangle, angle_direction(7 * np.pi / 6)) == pytest.approx(0.0, abs=1e-12)


def test_triangle_support_point_on_arc(triangle):
    p = support_point(triangle, angle_direction(np.pi / 6))
    np.testing.assert_allclose(p, [np.cos(np.pi / 6), np.sin(np.pi / 6)], atol=1e-12)
    # dense boundary sampling of the arc centred at the origin
    t = np.linspace(0, np.pi / 3, 100_001)
    arc = np.stack([np.cos(t), np.sin(t)], axis=1)
    best = arc[np.argmax(arc @ angle_direction(np.pi / 6))]
    np.testing.assert_allclose(p, best, atol=1e-4)


def test_simplex_support_points(simplex):
    assert support_eval(simplex, (1, 0, 0)) == pytest.approx(1.0, abs=1e-10)
    p = support_point(simplex, (0, 1, 0))
    np.testing.assert_allclose(p, [0, 1, 0], atol=1e-12)
    C = np.array([b.center for b in simplex.balls])
    np.testing.assert_allclose(np.linalg.norm(C - [0, 1, 0], axis=1)[1:], 2.0, atol=1e-15)


def test_simplex_kkt_along_z(simplex):
    C = simplex.centers
    R = simplex.radii
    top = support_point(simplex, (0, 0, 1))
    bottom = support_point(simplex, (0, 0, -1))
    np.testing.assert_allclose(top, [0, 0, S3], atol=1e-12)
    np.testing.assert_allclose(bottom, [0, 0, S2 - S3], atol=1e-12)
    assert kkt_certificate(C, R, np.array([0, 0, S3]), [0, 0, 1]) < 1e-12
    assert kkt_certificate(C, R, np.array([0, 0, S2 - S3]), [0, 0, -1]) < 1e-12


def test_contains(triangle):
    assert contains(ball((0, 0), 1), (0, 0), 1e-12)
    assert contains(triangle, (0.5, S3 / 6), 1e-12)
    assert not contains(triangle, (2, 0), 1e-12)


def test_contains_through_motions(triangle):
    body = negate(scale(rotate(triangle, 0.4), 2.0))
    p = -2.0 * np.array([[np.cos(0.4), -np.sin(0.4)], [np.sin(0.4), np.cos(0.4)]]) @ [0.5, 0.3]
    assert contains(body, p, 1e-12)
    assert contains(scale(triangle, 0.0), (0, 0), 1e-12)
    assert not contains(scale(triangle, 0.0), (0.1, 0), 1e-12)


def test_contains_unsupported_nodes(triangle, simplex):
    with pytest.raises(UnsupportedQuery):
        contains(minkowski_sum(triangle, triangle), (0, 0), 1e-9)
    with pytest.raises(UnsupportedQuery):
        contains(project(simplex), (0, 0), 1e-9)
    with pytest.raises(UsageError):
        contains(triangle, (0, 0), 0.0)


def test_construction_checks():
    with pytest.raises(EmptyBody):
        BallIntersection(2, (Ball((0, 0), 1), Ball((5, 0), 1)))
    with pytest.raises(UsageError):
        BallIntersection(2, (Ball((0, 0, 0), 1),))
    with pytest.raises(UsageError):
        BallIntersection(2, ())
    with pytest.raises(UsageError):
        Rotate2D(1.0, ball((0, 0, 0), 1))
    with pytest.raises(UsageError):
        Project3to2(ball((0, 0), 1))
    with pytest.raises(UsageError):
        support_eval(ball((0, 0), 1), (1, 0, 0))


def test_support_point_consistency(triangle, simplex, polygons):
    bodies = [triangle, simplex, polygons[4], rotate(polygons[2], 1.1), negate(scale(triangle, 3.0))]
    for body in bodies:
        for u in direction_grid(body.dim, 64).directions:
            p = support_point(body, u)
            assert p @ u == pytest.approx(support_eval(body, u), abs=1e-9)
            assert contains(body, p, 1e-8)


def test_composition_rules_are_exact(triangle, polygons):
    g = direction_grid(2, 256)
    A, B = triangle, polygons[3]
    hA = support_profile(A, g).values
    hB = support_profile(B, g).values
    hA_neg = A.support_many(-g.directions)[0]
    np.testing.assert_array_equal(support_profile(minkowski_sum(A, B), g).values, hA + hB)
    np.testing.assert_array_equal(support_profile(negate(A), g).values, hA_neg)
    np.testing.assert_array_equal(support_profile(scale(A, 0.37), g).values, 0.37 * hA)


def test_sum_support_point_adds(triangle, polygons):
    u = angle_direction(2.0)
    S = minkowski_sum(triangle, polygons[2])
    np.testing.assert_allclose(
        support_point(S, u), support_point(triangle, u) + support_point(polygons[2], u), atol=0
    )


def test_projection_identity(simplex):
    P = project(simplex)
    for u in direction_grid(2, 100).directions:
        u3 = np.array([u[0], u[1], 0.0])
        assert support_eval(P, u) == support_eval(simplex, u3)
        np.testing.assert_array_equal(support_point(P, u), support_point(simplex, u3)[:2])


@settings(max_examples=20, deadline=None)
@given(alpha=st.floats(-10, 10, allow_nan=False))
def test_rotation_covariance(alpha):
    K = reuleaux_polygon(2)
    Ka = rotate(K, alpha)
    gam = 2 * np.pi * np.arange(2048) / 2048
    lhs = Ka.support_many(np.stack([np.cos(gam), np.sin(gam)], 1))[0]
    rhs = K.support_many(np.stack([np.cos(gam - alpha), np.sin(gam - alpha)], 1))[0]
    np.testing.assert_allclose(lhs, rhs, atol=1e-10)
