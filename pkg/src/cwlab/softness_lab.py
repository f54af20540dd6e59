"""Numerical witnesses for the projection obstruction on 3D constant-width bodies.

A constant-width lift of a planar constant-width body must put the preimage of
the planar boundary in a plane, because diameters of constant-width bodies are
orthogonal to their supporting hyperplanes. The Reuleaux simplex, which
projects close to the unit disc, has four boundary-preimage points that are
far from coplanar. This module measures both facts.
"""

from dataclasses import dataclass

import numpy as np

from .constant_width import is_constant_width, reuleaux_polygon, reuleaux_simplex
from .errors import PreconditionError, UsageError
from .geometry_core import (
    Project3to2,
    ball,
    direction_grid,
    hausdorff,
    support_profile,
    width_report,
    widths_on_grid,
)

# e2, -e2, -e1, e1: the support points appear in the order the ball centres are listed
WITNESS_DIRECTIONS = ((0.0, 1.0), (0.0, -1.0), (-1.0, 0.0), (1.0, 0.0))
COPLANAR_TOL = 1e-8


@dataclass(frozen=True)
class WitnessReport:
    width_report_L: object
    projection_deviation: float
    witness_points: tuple
    coplanarity: float
    diameter_residuals: tuple
    hausdorff_to_disc: tuple

    def to_dict(self):
        return {
            "width_report_L": self.width_report_L.to_dict(),
            "projection_deviation": self.projection_deviation,
            "witness_points": [list(p) for p in self.witness_points],
            "coplanarity": self.coplanarity,
            "diameter_residuals": list(self.diameter_residuals),
            "hausdorff_to_disc": list(self.hausdorff_to_disc),
        }


def project(body):
    """Orthogonal projection of a 3D body onto the first two coordinates."""
    if body.dim != 3:
        raise UsageError("projection expects a 3D body")
    return Project3to2(body)


def boundary_lift_points(body3d, directions):
    """Support points of ``body3d`` in the horizontal directions ``(u1, u2, 0)``.

    Each returned point projects onto the boundary of ``project(body3d)``.
    """
    if body3d.dim != 3:
        raise UsageError("boundary lifts need a 3D body")
    D = np.atleast_2d(np.asarray(directions, dtype=float))
    if D.size == 0 or D.shape[1] != 2:
        raise UsageError("need a nonempty list of planar directions")
    if np.any(np.abs(np.linalg.norm(D, axis=1) - 1.0) > 1e-12):
        raise UsageError("planar directions must be unit vectors")
    U3 = np.column_stack([D, np.zeros(len(D))])
    return list(body3d.support_many(U3)[1])


def coplanarity_residual(points):
    """Zero iff the points lie in a common plane.

    For four points this is the absolute scalar triple product of the edge
    vectors from the first point; for more, the smallest singular value of the
    centred coordinate matrix.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[1] != 3:
        raise UsageError("coplanarity needs 3D points")
    if len(P) < 3:
        raise UsageError("coplanarity needs at least 3 points")
    if len(P) == 3:
        return 0.0
    if len(P) == 4:
        E = P[1:] - P[0]
        return float(abs(np.linalg.det(E)))
    s = np.linalg.svd(P - P.mean(axis=0), compute_uv=False)
    return float(s[-1])


def is_coplanar(points, tol=COPLANAR_TOL):
    """Coplanarity verdict; for > 4 points the residual is normalized by the cloud radius."""
    P = np.asarray(points, dtype=float)
    res = coplanarity_residual(P)
    if len(P) > 4:
        radius = np.linalg.norm(P - P.mean(axis=0), axis=1).max()
        res = res / radius if radius > 0 else 0.0
    return res <= tol


def diameter_orthogonality_check(body, grid, tol=1e-6):
    """Max over ``u`` of ``|(p(u) - p(-u)) - w(u) u|`` for a constant-width body.

    Raises :class:`PreconditionError` (carrying the width report) if the body
    fails the constant-width test at ``tol``.
    """
    verdict = is_constant_width(body, grid, tol)
    if not verdict.is_constant:
        raise PreconditionError(
            f"body is not of constant width (spread {verdict.report.spread:.3e} > {tol})",
            verdict.report,
        )
    U = grid.directions
    _, p_plus = body.support_many(U)
    _, p_minus = body.support_many(-U)
    w = widths_on_grid(body, grid)
    diff = (p_plus - p_minus) - w[:, None] * U
    return float(np.linalg.norm(diff, axis=1).max())


def nonopenness_report(i_max=10, m2=4096, m3=20000):
    """Assemble both sides of the obstruction.

    * widths of the Reuleaux simplex L and how far its projection is from the unit disc;
    * the four support points of L over the planar axes and their coplanarity residual;
    * for each planar Reuleaux polygon K_i, i = 1..i_max, the diameter residual
      (how well its diameters align with their normals) and its Hausdorff
      distance to the unit disc.
    """
    if isinstance(i_max, bool) or int(i_max) != i_max or i_max < 1:
        raise UsageError(f"i_max must be an integer >= 1, got {i_max!r}")
    grid2 = direction_grid(2, m2)
    grid3 = direction_grid(3, m3)
    L = reuleaux_simplex()
    proj = support_profile(project(L), grid2).values
    points = boundary_lift_points(L, WITNESS_DIRECTIONS)
    disc = ball((0.0, 0.0), 1.0)
    residuals, distances = [], []
    for i in range(1, int(i_max) + 1):
        K = reuleaux_polygon(i)
        residuals.append(diameter_orthogonality_check(K, grid2))
        distances.append(hausdorff(K, disc, grid2))
    return WitnessReport(
        width_report_L=width_report(L, grid3),
        projection_deviation=float(np.max(np.abs(proj - 1.0))),
        witness_points=tuple(tuple(float(x) for x in p) for p in points),
        coplanarity=coplanarity_residual(points),
        diameter_residuals=tuple(residuals),
        hausdorff_to_disc=tuple(distances),
    )
