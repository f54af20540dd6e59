"""Minkowski algebra on bodies, the central symmetry map and ball fitting."""

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, UsageError
from .geometry_core import Negate, Scale, Sum, support_profile


@dataclass(frozen=True)
class BallFit:
    center: tuple
    radius: float
    residual: float

    def to_dict(self):
        return {"center": list(self.center), "radius": self.radius, "residual": self.residual}


def scale(body, t):
    """The dilate ``t*K`` for ``t >= 0``; ``t = 0`` collapses to the origin."""
    t = float(t)
    if not np.isfinite(t) or t < 0:
        raise UsageError(f"scale factor must be >= 0 (use negate to reflect), got {t!r}")
    return Scale(t, body)


def negate(body):
    return Negate(body)


def minkowski_sum(a, b):
    if a.dim != b.dim:
        raise UsageError(f"cannot add bodies of dimension {a.dim} and {b.dim}")
    return Sum(a, b)


def central_symmetry(body):
    """``(K - K) / 2``; a ball of radius d/2 exactly when K has constant width d."""
    return Scale(0.5, Sum(body, Negate(body)))


def fit_ball(profile):
    """Least-squares fit of ``h(u) ~ <c, u> + r`` over the profile's grid.

    The residual is the sup-norm mismatch, not the least-squares objective.
    """
    U = profile.grid.directions
    h = np.asarray(profile.values, dtype=float)
    if not np.all(np.isfinite(h)):
        raise NumericError("profile has non-finite support values")
    A = np.column_stack([U, np.ones(len(U))])
    coef, _, rank, _ = np.linalg.lstsq(A, h, rcond=None)
    if rank < A.shape[1]:
        raise NumericError("degenerate ball-fit normal equations")
    c, r = coef[:-1], float(coef[-1])
    residual = float(np.max(np.abs(h - A @ coef)))
    return BallFit(tuple(float(x) for x in c), r, residual)


def is_pair_constant_width(a, b, grid, tol=1e-6):
    """Is ``a - b`` a ball? Returns ``(verdict, BallFit)``."""
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    fit = fit_ball(support_profile(minkowski_sum(a, negate(b)), grid))
    return fit.residual <= tol, fit
