"""Reuleaux constructions, constant-width verdicts and the rotated-family rank experiment."""

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .geometry_core import (
    Ball,
    BallIntersection,
    Rotate2D,
    WidthReport,
    angle_direction,
    width_report,
)

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
# regular tetrahedron of edge 2
SIMPLEX_CENTERS = (
    (0.0, 1.0, 0.0),
    (0.0, -1.0, 0.0),
    (-1.0, 0.0, SQRT2),
    (1.0, 0.0, SQRT2),
)


@dataclass(frozen=True)
class ConstantWidthVerdict:
    is_constant: bool
    report: WidthReport
    tolerance: float

    def to_dict(self):
        return {
            "is_constant": self.is_constant,
            "report": self.report.to_dict(),
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class RankReport:
    k: int
    matrix_rows: int
    matrix_cols: int
    rank: int
    tolerance: float

    def to_dict(self):
        return {
            "k": self.k,
            "matrix_rows": self.matrix_rows,
            "matrix_cols": self.matrix_cols,
            "rank": self.rank,
            "tolerance": self.tolerance,
        }


def _positive(name, value):
    value = float(value)
    if not np.isfinite(value) or value <= 0:
        raise UsageError(f"{name} must be a positive number, got {value!r}")
    return value


def reuleaux_triangle(d=1.0):
    """Reuleaux triangle of width ``d`` with corners (0,0), (d,0), (d/2, d*sqrt(3)/2)."""
    d = _positive("d", d)
    centers = [(0.0, 0.0), (d, 0.0), (d / 2.0, d * SQRT3 / 2.0)]
    return BallIntersection(2, tuple(Ball(c, d) for c in centers))


def polygon_radius(i):
    """Disc radius |x_0 - x_i| of the Reuleaux (2i+1)-gon inscribed in the unit circle."""
    return 2.0 * np.sin(np.pi * i / (2 * i + 1))


def reuleaux_polygon(i):
    """Reuleaux (2i+1)-gon: discs of radius |x_0 - x_i| centred at the (2i+1)-st roots of unity."""
    if isinstance(i, bool) or int(i) != i or i < 1:
        raise UsageError(f"i must be an integer >= 1, got {i!r}")
    i = int(i)
    n = 2 * i + 1
    j = np.arange(n)
    xs = np.column_stack([np.cos(2 * np.pi * j / n), np.sin(2 * np.pi * j / n)])
    r = float(np.linalg.norm(xs[0] - xs[i]))
    return BallIntersection(2, tuple(Ball(x, r) for x in xs))


def reuleaux_simplex():
    """Four radius-2 balls centred at the vertices of a regular tetrahedron of edge 2."""
    return BallIntersection(3, tuple(Ball(c, 2.0) for c in SIMPLEX_CENTERS))


def reuleaux_simplex_edge(d):
    """Same construction for a regular tetrahedron of edge ``d`` (balls of radius ``d``)."""
    d = _positive("d", d)
    return BallIntersection(
        3, tuple(Ball(tuple(0.5 * d * x for x in c), d) for c in SIMPLEX_CENTERS)
    )


def rotate(body, alpha):
    """Rotate a planar body counterclockwise by ``alpha`` about the origin."""
    if body.dim != 2:
        raise UsageError("only planar bodies can be rotated")
    return Rotate2D(float(alpha), body)


def is_constant_width(body, grid, tol=1e-6):
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    report = width_report(body, grid)
    return ConstantWidthVerdict(report.spread <= tol, report, float(tol))


def support_family_matrix(k):
    """Matrix ``M[r, j] = h_j(pi/3 + r*pi/(3k))`` for the Reuleaux triangle of width 1
    rotated by ``j*pi/(3k)``, with ``r, j = 0..k``."""
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise UsageError(f"k must be an integer >= 1, got {k!r}")
    k = int(k)
    K = reuleaux_triangle(1.0)
    step = np.pi / (3 * k)
    U = np.array([angle_direction(np.pi / 3 + r * step) for r in range(k + 1)])
    M = np.empty((k + 1, k + 1))
    for j in range(k + 1):
        M[:, j] = rotate(K, j * step).support_many(U)[0]
    return M


def numerical_rank(M, tol):
    s = np.linalg.svd(M, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def support_family_rank(k, tol=1e-8):
    """Numerical rank of the rotated support family; full rank is ``k + 1``."""
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    M = support_family_matrix(k)
    return RankReport(
        k=int(k),
        matrix_rows=M.shape[0],
        matrix_cols=M.shape[1],
        rank=numerical_rank(M, tol),
        tolerance=float(tol),
    )
