"""Convex bodies as composition trees over ball intersections.

Leaves are :class:`BallIntersection`; internal nodes apply a Minkowski or rigid
operation and are evaluated only through their support function:

=============  ==============================  =============================
node           support value h(u)              support point
=============  ==============================  =============================
Scale(t, K)    t * h_K(u)                      t * p_K(u)
Negate(K)      h_K(-u)                         -p_K(-u)
Sum(A, B)      h_A(u) + h_B(u)                 p_A(u) + p_B(u)
Rotate2D(a,K)  h_K(R(-a) u)                    R(a) p_K(R(-a) u)
Project3to2(K) h_K(u1, u2, 0)                  first two coords of p_K
=============  ==============================  =============================
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import UnsupportedQuery, UsageError
from .balls import Ball, BallSystem, certify_nonempty, solve
from .grid import as_direction


class Body:
    """Base class of all body nodes. Subclasses are frozen dataclasses."""

    dim: int

    def support_many(self, U, method="auto"):
        """Support values ``(m,)`` and support points ``(m, dim)`` for directions ``U``."""
        raise NotImplementedError

    def _contains(self, p, tol):
        raise UnsupportedQuery(f"membership is not available for {type(self).__name__} nodes")


def rotation_matrix(alpha):
    c, s = np.cos(alpha), np.sin(alpha)
    return np.array([[c, -s], [s, c]])


@dataclass(frozen=True, eq=False)
class BallIntersection(Body):
    """Intersection of closed balls; nonemptiness is certified on construction."""

    dim: int
    balls: tuple
    witness: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        balls = tuple(b if isinstance(b, Ball) else Ball(*b) for b in self.balls)
        if self.dim not in (2, 3):
            raise UsageError(f"dimension must be 2 or 3, got {self.dim!r}")
        if not balls:
            raise UsageError("a ball intersection needs at least one ball")
        if any(b.dim != self.dim for b in balls):
            raise UsageError(f"every ball must have dimension {self.dim}")
        object.__setattr__(self, "balls", balls)
        object.__setattr__(self, "witness", certify_nonempty(self.centers, self.radii))

    @cached_property
    def centers(self):
        return np.array([b.center for b in self.balls], dtype=float)

    @cached_property
    def radii(self):
        return np.array([b.radius for b in self.balls], dtype=float)

    @cached_property
    def system(self):
        return BallSystem(self.centers, self.radii)

    def support_many(self, U, method="auto"):
        return solve(self.system, U, self.witness, method)

    def _contains(self, p, tol):
        d = np.linalg.norm(self.centers - p, axis=1)
        return bool(np.all(d <= self.radii + tol))


@dataclass(frozen=True, eq=False)
class Scale(Body):
    t: float
    inner: Body

    def __post_init__(self):
        t = float(self.t)
        if not np.isfinite(t) or t < 0:
            raise UsageError(f"scale factor must be finite and >= 0, got {self.t!r}")
        object.__setattr__(self, "t", t)

    @property
    def dim(self):
        return self.inner.dim

    def support_many(self, U, method="auto"):
        v, p = self.inner.support_many(U, method)
        return self.t * v, self.t * p

    def _contains(self, p, tol):
        if self.t == 0.0:
            return bool(np.linalg.norm(p) <= tol)
        return self.inner._contains(p / self.t, tol / self.t)


@dataclass(frozen=True, eq=False)
class Negate(Body):
    inner: Body

    @property
    def dim(self):
        return self.inner.dim

    def support_many(self, U, method="auto"):
        v, p = self.inner.support_many(-np.asarray(U, dtype=float), method)
        return v, -p

    def _contains(self, p, tol):
        return self.inner._contains(-p, tol)


@dataclass(frozen=True, eq=False)
class Sum(Body):
    left: Body
    right: Body

    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise UsageError(
                f"Minkowski sum of bodies of dimension {self.left.dim} and {self.right.dim}"
            )

    @property
    def dim(self):
        return self.left.dim

    def support_many(self, U, method="auto"):
        va, pa = self.left.support_many(U, method)
        vb, pb = self.right.support_many(U, method)
        return va + vb, pa + pb


@dataclass(frozen=True, eq=False)
class Rotate2D(Body):
    alpha: float
    inner: Body

    def __post_init__(self):
        if self.inner.dim != 2:
            raise UsageError("rotation is only defined for planar bodies")
        object.__setattr__(self, "alpha", float(self.alpha))

    dim = 2

    def support_many(self, U, method="auto"):
        Rm = rotation_matrix(self.alpha)
        # rows of U @ Rm are R(-alpha) u
        v, p = self.inner.support_many(np.asarray(U, dtype=float) @ Rm, method)
        return v, p @ Rm.T

    def _contains(self, p, tol):
        return self.inner._contains(rotation_matrix(-self.alpha) @ p, tol)


@dataclass(frozen=True, eq=False)
class Project3to2(Body):
    inner: Body

    def __post_init__(self):
        if self.inner.dim != 3:
            raise UsageError("projection expects a 3D body")

    dim = 2

    def support_many(self, U, method="auto"):
        U = np.atleast_2d(np.asarray(U, dtype=float))
        U3 = np.column_stack([U, np.zeros(len(U))])
        v, p = self.inner.support_many(U3, method)
        return v, p[:, :2]


def ball(center, radius):
    """Single ball as a body."""
    center = tuple(center)
    return BallIntersection(len(center), (Ball(center, radius),))


def point_body(dim):
    """The origin as a (zero-radius ball) body."""
    return ball((0.0,) * dim, 0.0)


def support_eval(body, u, method="auto"):
    """h_K(u) = max <x, u> over the body."""
    u = as_direction(u, body.dim)
    return float(body.support_many(u[None, :], method)[0][0])


def support_point(body, u, method="auto"):
    """A point of the body attaining h_K(u); ties go to the lexicographically smallest."""
    u = as_direction(u, body.dim)
    return body.support_many(u[None, :], method)[1][0]


def contains(body, p, tol=1e-9):
    """Membership test through leaf constraints after undoing rigid/scale nodes.

    Raises :class:`UnsupportedQuery` for trees containing Sum or Project3to2.
    """
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    p = np.asarray(p, dtype=float)
    if p.shape != (body.dim,):
        raise UsageError(f"point must have {body.dim} coordinates")
    return body._contains(p, tol)
