"""Maximizing a linear form over an intersection of balls.

Two independent solvers live here:

* an exact active-set enumeration: the maximizer of <x, u> over a ball
  intersection is either ``c_i + r_i*u`` for a single active ball, the top of a
  sphere-sphere circle (3D, two active balls), or a vertex where two circles
  (2D) or three spheres (3D) meet. Everything except the single-ball and
  circle candidates is independent of ``u``, so it is computed once per body.
* an iterative fallback: a log-barrier path-following method in the (at most
  3) primal variables, certified by its duality gap ``n / t``.

Both operate on batches of directions, shape ``(m, dim)``.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import EmptyBody, SolverFailure, UsageError
from .grid import as_direction

FEAS_TOL = 1e-10
GAP_TOL = 1e-10
TIE_TOL = 1e-12
EMPTY_TOL = 1e-8
EXACT_MAX_BALLS = 64  # larger systems go to the barrier solver
_CHUNK_BUDGET = 2_000_000


@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: float

    def __post_init__(self):
        c = tuple(float(x) for x in self.center)
        r = float(self.radius)
        if len(c) not in (2, 3):
            raise UsageError(f"ball center must have 2 or 3 coordinates, got {len(c)}")
        if not all(np.isfinite(c)):
            raise UsageError(f"ball center {c} is not finite")
        if not np.isfinite(r) or r < 0:
            raise UsageError(f"ball radius must be finite and >= 0, got {r}")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)

    @property
    def dim(self):
        return len(self.center)


def _scale(centers, radii):
    return max(1.0, float(np.abs(centers).max() + radii.max()))


def _violation(X, centers, radii):
    """Max over balls of ``|x - c_i| - r_i`` for each row of ``X``."""
    d = np.linalg.norm(X[..., None, :] - centers, axis=-1)
    return (d - radii).max(axis=-1)


class BallSystem:
    """Centers/radii of a ball intersection plus the direction-free candidates."""

    def __init__(self, centers, radii):
        self.centers = np.asarray(centers, dtype=float)
        self.radii = np.asarray(radii, dtype=float)
        self.n, self.dim = self.centers.shape
        self.tol = FEAS_TOL * _scale(self.centers, self.radii)

    def feasible(self, X, tol=None):
        tol = self.tol if tol is None else tol
        return _violation(X, self.centers, self.radii) <= tol

    # -- direction-independent candidates ---------------------------------

    @cached_property
    def vertices(self):
        """Feasible points where 2 circles (2D) or 3 spheres (3D) meet."""
        pts = _pair_points_2d(self) if self.dim == 2 else _triple_points_3d(self)
        if len(pts) == 0:
            return np.empty((0, self.dim))
        pts = np.asarray(pts)
        return pts[self.feasible(pts)]

    @cached_property
    def circles(self):
        """Sphere-sphere intersection circles as (centers, normals, radii, lexmin points)."""
        if self.dim != 3:
            return None
        M, N, rho = [], [], []
        C, R = self.centers, self.radii
        for i in range(self.n):
            for j in range(i + 1, self.n):
                e = C[j] - C[i]
                d = np.linalg.norm(e)
                if d == 0.0 or d > R[i] + R[j] + self.tol or d < abs(R[i] - R[j]) - self.tol:
                    continue
                e = e / d
                a = (d * d + R[i] ** 2 - R[j] ** 2) / (2.0 * d)
                M.append(C[i] + a * e)
                N.append(e)
                rho.append(np.sqrt(max(R[i] ** 2 - a * a, 0.0)))
        if not M:
            return None
        M, N, rho = np.array(M), np.array(N), np.array(rho)
        lexmin = np.empty_like(M)
        for k in range(len(M)):
            lexmin[k] = _circle_lexmin(M[k], N[k], rho[k])
        return M, N, rho, lexmin

    # -- solvers -----------------------------------------------------------

    def exact(self, U):
        """Exact support values and maximizers for directions ``U`` (m, dim)."""
        U = np.atleast_2d(np.asarray(U, dtype=float))
        K = self.n + len(self.vertices) + (0 if self.circles is None else len(self.circles[0]))
        chunk = max(1, _CHUNK_BUDGET // max(1, K * self.n * self.dim))
        vals = np.empty(len(U))
        pts = np.empty((len(U), self.dim))
        for s in range(0, len(U), chunk):
            vals[s:s + chunk], pts[s:s + chunk] = self._exact_chunk(U[s:s + chunk])
        return vals, pts

    def _exact_chunk(self, U):
        m = len(U)
        C, R = self.centers, self.radii
        singles = C[None, :, :] + R[None, :, None] * U[:, None, :]
        groups = [(singles, self.feasible(singles))]
        if len(self.vertices):
            V = np.broadcast_to(self.vertices, (m,) + self.vertices.shape)
            groups.append((V, np.ones(V.shape[:2], dtype=bool)))
        if self.circles is not None:
            Mc, Nc, rho, lexmin = self.circles
            un = U @ Nc.T
            w = U[:, None, :] - un[:, :, None] * Nc[None]
            nw = np.linalg.norm(w, axis=-1)
            flat = nw <= 1e-14
            safe = np.where(flat, 1.0, nw)
            X = Mc[None] + rho[None, :, None] * w / safe[:, :, None]
            X = np.where(flat[:, :, None], lexmin[None], X)
            groups.append((X, self.feasible(X)))
        P = np.concatenate([g[0] for g in groups], axis=1)
        ok = np.concatenate([g[1] for g in groups], axis=1)
        vals = np.einsum("mkd,md->mk", P, U)
        vals = np.where(ok, vals, -np.inf)
        best = vals.max(axis=1)
        if not np.all(np.isfinite(best)):
            raise EmptyBody("no feasible active-set candidate; the ball intersection is empty")
        tied = vals >= best[:, None] - TIE_TOL
        idx = _lexmin_index(P, tied)
        return best, P[np.arange(m), idx]

    def fallback(self, U, x0):
        """Iterative support values for ``U`` by a log-barrier path-following method.

        Every iterate is strictly inside all balls; after the last centering step
        the duality gap is at most ``n / t <= GAP_TOL * scale``. Returns
        ``(values, points, residual)`` with ``residual`` the largest violation
        (nonpositive when certified).
        """
        U = np.atleast_2d(np.asarray(U, dtype=float))
        C, R = self.centers, self.radii
        if np.any(R == 0.0):
            # a zero-radius ball pins the body to its center
            k = int(np.argmin(R))
            X = np.tile(C[k], (len(U), 1))
            residual = float(max(_violation(C[k], C, R), 0.0))
            if residual > self.tol:
                raise SolverFailure("point ball is not inside the others", residual)
            return U @ C[k], X, residual
        x_in = strictly_interior_point(C, R, x0)
        X = _barrier_path(C, R, U, x_in, GAP_TOL * _scale(C, R))
        residual = float(max(_violation(X, C, R).max(), 0.0))
        if residual > self.tol:
            raise SolverFailure("barrier iterate left the feasible set", residual)
        return np.einsum("md,md->m", X, U), X, residual


def _barrier_path(C, R, U, x_in, gap, growth=8.0):
    n = len(R)
    X = np.tile(x_in, (len(U), 1))
    t = 1.0 / _scale(C, R)
    while True:
        X = _center(C, R, U, X, t)
        if n / t <= gap:
            return X
        t *= growth


def _center(C, R, U, X, t, max_newton=200):
    """Damped Newton on ``-t<u,x> - sum log(r_i^2 - |x - c_i|^2)``."""
    d = X.shape[1]
    eye = np.eye(d)
    R2 = R * R
    for _ in range(max_newton):
        D = X[:, None, :] - C[None]
        s = R2 - np.einsum("mnd,mnd->mn", D, D)
        g = -t * U + 2.0 * np.einsum("mnd,mn->md", D, 1.0 / s)
        H = (2.0 / s).sum(axis=1)[:, None, None] * eye + 4.0 * np.einsum(
            "mni,mnj,mn->mij", D, D, 1.0 / (s * s)
        )
        step = -np.linalg.solve(H, g[..., None])[..., 0]
        lam = np.sqrt(np.maximum(-np.einsum("md,md->m", g, step), 0.0))
        if lam.max() <= 1e-6:
            break
        # self-concordant damping keeps the iterate inside the domain
        alpha = np.where(lam > 0.25, 1.0 / (1.0 + lam), 1.0)
        Y = X + alpha[:, None] * step
        inside = (np.linalg.norm(Y[:, None, :] - C[None], axis=-1) < R).all(axis=1)
        while not inside.all():
            alpha = np.where(inside, alpha, 0.5 * alpha)
            Y = X + alpha[:, None] * step
            inside = (np.linalg.norm(Y[:, None, :] - C[None], axis=-1) < R).all(axis=1)
        X = Y
    else:
        # roundoff floor at large t; a decrement this small costs < lam**2 / t in the gap
        if lam.max() > 1e-3:
            raise SolverFailure("barrier centering did not converge", float(lam.max()))
    return X


def strictly_interior_point(centers, radii, x0=None):
    """A point at positive depth inside every ball.

    Projects onto balls shrunk by a margin, halving the margin until the
    projection converges; the barrier needs to start well away from the boundary.
    """
    C = np.asarray(centers, dtype=float)
    R = np.asarray(radii, dtype=float)
    x = C.mean(axis=0) if x0 is None else np.asarray(x0, dtype=float)
    shrink = 0.5 * R.min()
    for _ in range(40):
        y = polish_feasible(C, R - shrink, x, sweeps=500)
        if np.all(np.linalg.norm(y - C, axis=1) < R):
            return y
        shrink *= 0.5
    raise SolverFailure(
        "no strictly interior point; the barrier fallback needs a body with interior",
        float(_violation(x, C, R)),
    )


def _pair_points_2d(sys):
    C, R, pts = sys.centers, sys.radii, []
    for i in range(sys.n):
        for j in range(i + 1, sys.n):
            e = C[j] - C[i]
            d = np.linalg.norm(e)
            if d == 0.0 or d > R[i] + R[j] + sys.tol or d < abs(R[i] - R[j]) - sys.tol:
                continue
            e = e / d
            a = (d * d + R[i] ** 2 - R[j] ** 2) / (2.0 * d)
            h = np.sqrt(max(R[i] ** 2 - a * a, 0.0))
            base = C[i] + a * e
            perp = np.array([-e[1], e[0]])
            pts.append(base + h * perp)
            pts.append(base - h * perp)
    return pts


def _triple_points_3d(sys):
    C, R, pts = sys.centers, sys.radii, []
    n = sys.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                p1, p2, p3 = C[i], C[j], C[k]
                d = np.linalg.norm(p2 - p1)
                if d == 0.0:
                    continue
                ex = (p2 - p1) / d
                a = ex @ (p3 - p1)
                ey = p3 - p1 - a * ex
                b = np.linalg.norm(ey)
                if b <= 1e-12 * max(1.0, d):
                    continue
                ey = ey / b
                ez = np.cross(ex, ey)
                x = (R[i] ** 2 - R[j] ** 2 + d * d) / (2.0 * d)
                y = (R[i] ** 2 - R[k] ** 2 + a * a + b * b) / (2.0 * b) - a * x / b
                z2 = R[i] ** 2 - x * x - y * y
                if z2 < -sys.tol * max(1.0, R[i]):
                    continue
                z = np.sqrt(max(z2, 0.0))
                base = p1 + x * ex + y * ey
                pts.append(base + z * ez)
                pts.append(base - z * ez)
    return pts


def _circle_lexmin(center, normal, rho):
    """Lexicographically smallest point of a circle in 3D."""
    for k in range(3):
        e = np.zeros(3)
        e[k] = 1.0
        q = e - (e @ normal) * normal
        nq = np.linalg.norm(q)
        if nq > 1e-12:
            return center - rho * q / nq
    return center.copy()


def _lexmin_index(P, mask):
    """Per row, index of the lexicographically smallest point among ``mask``."""
    mask = mask.copy()
    for k in range(P.shape[-1]):
        coord = np.where(mask, P[..., k], np.inf)
        mask &= coord == coord.min(axis=1, keepdims=True)
    return mask.argmax(axis=1)


def find_common_point(centers, radii, max_sweeps=20000):
    """Cyclic projection onto the balls starting at the centroid of centers.

    Returns ``(point, residual)`` with residual the largest ball violation.
    """
    C = np.asarray(centers, dtype=float)
    R = np.asarray(radii, dtype=float)
    x = C.mean(axis=0)
    res = float(_violation(x, C, R))
    sweeps = 0
    while res > 0.0 and sweeps < max_sweeps:
        for c, r in zip(C, R):
            d = x - c
            n = np.linalg.norm(d)
            if n > r:
                x = c + d * (r / n)
        res = float(_violation(x, C, R))
        sweeps += 1
    return x, max(res, 0.0)


def polish_feasible(centers, radii, x, sweeps=200):
    """A few more projection sweeps from ``x``; used to tighten a start point."""
    C = np.asarray(centers, dtype=float)
    R = np.asarray(radii, dtype=float)
    x = np.asarray(x, dtype=float).copy()
    for _ in range(sweeps):
        if _violation(x, C, R) <= 0.0:
            break
        for c, r in zip(C, R):
            d = x - c
            n = np.linalg.norm(d)
            if n > r:
                x = c + d * (r / n)
    return x


def certify_nonempty(centers, radii):
    """Return a common point of the balls or raise :class:`EmptyBody`."""
    x, res = find_common_point(centers, radii)
    if res > EMPTY_TOL * _scale(np.asarray(centers, float), np.asarray(radii, float)):
        raise EmptyBody(f"balls have no common point (projection residual {res:.3e})", res)
    return x


def max_linear_over_balls(balls, u, method="auto"):
    """Maximize ``<x, u>`` over the intersection of ``balls``.

    Parameters
    ----------
    balls : sequence of Ball
        Nonempty list of balls sharing the dimension of ``u``.
    u : array_like
        Unit direction.
    method : {"auto", "exact", "fallback"}
        ``auto`` uses active-set enumeration up to ``EXACT_MAX_BALLS`` balls.

    Returns
    -------
    value : float
    maximizer : ndarray
    """
    balls = list(balls)
    if not balls:
        raise UsageError("need at least one ball")
    dim = balls[0].dim
    if any(b.dim != dim for b in balls):
        raise UsageError("balls have mixed dimensions")
    u = as_direction(u, dim)
    C = np.array([b.center for b in balls])
    R = np.array([b.radius for b in balls])
    x0 = certify_nonempty(C, R)
    sys = BallSystem(C, R)
    vals, pts = solve(sys, u[None, :], x0, method)
    return float(vals[0]), pts[0]


def solve(sys, U, x0, method="auto"):
    if method not in ("auto", "exact", "fallback"):
        raise UsageError(f"unknown solver method {method!r}")
    if method == "exact" or (method == "auto" and sys.n <= EXACT_MAX_BALLS):
        return sys.exact(U)
    vals, pts, _ = sys.fallback(U, x0)
    return vals, pts
