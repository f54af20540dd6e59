"""Deterministic direction grids on S^1 and S^2."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import UsageError

MIN_RESOLUTION = {2: 3, 3: 16}
GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))
UNIT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DirectionGrid:
    """Sampled unit directions; ``directions`` has shape ``(m, dim)``."""

    dim: int
    m: int
    directions: np.ndarray = field(repr=False)

    def __len__(self):
        return self.m

    @property
    def closed_under_negation(self):
        return self.dim == 2 and self.m % 2 == 0

    def mesh(self):
        """Covering radius of the grid (geodesic, in radians)."""
        if self.dim == 2:
            return np.pi / self.m
        # nearest-neighbour spacing is a lower bound; the covering radius of a
        # spiral grid is within a small factor of it
        d = self.directions
        cos = np.clip(d @ d.T, -1.0, 1.0)
        np.fill_diagonal(cos, -1.0)
        return float(np.arccos(cos.max(axis=1)).max())


def direction_grid(dim, m):
    """Build the deterministic grid of ``m`` directions in dimension ``dim``.

    In 2D the directions sit at angles ``2*pi*j/m``. In 3D they follow the
    golden-angle spiral ``z = 1 - (2i+1)/m``, azimuth ``i*pi*(3 - sqrt(5))``.
    """
    if dim not in MIN_RESOLUTION:
        raise UsageError(f"dimension must be 2 or 3, got {dim!r}")
    if isinstance(m, bool) or int(m) != m or m < MIN_RESOLUTION[dim]:
        raise UsageError(
            f"resolution for dim {dim} must be an integer >= {MIN_RESOLUTION[dim]}, got {m!r}"
        )
    m = int(m)
    i = np.arange(m, dtype=float)
    if dim == 2:
        theta = 2.0 * np.pi * i / m
        dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    else:
        z = 1.0 - (2.0 * i + 1.0) / m
        rho = np.sqrt(1.0 - z * z)
        a = i * GOLDEN_ANGLE
        dirs = np.column_stack([rho * np.cos(a), rho * np.sin(a), z])
    dirs.setflags(write=False)
    return DirectionGrid(dim=dim, m=m, directions=dirs)


def angle_direction(theta):
    """Unit vector ``(cos theta, sin theta)``."""
    return np.array([np.cos(theta), np.sin(theta)])


def as_direction(u, dim=None):
    """Validate ``u`` as a unit vector (norm within 1e-12 of one)."""
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.shape[0] not in (2, 3):
        raise UsageError(f"direction must be a 2- or 3-vector, got shape {u.shape}")
    if dim is not None and u.shape[0] != dim:
        raise UsageError(f"direction has dimension {u.shape[0]}, body has dimension {dim}")
    if not np.all(np.isfinite(u)) or abs(np.linalg.norm(u) - 1.0) > UNIT_TOL:
        raise UsageError(f"direction {u.tolist()} is not a unit vector")
    return u


def normalize(v):
    """Scale a nonzero vector to unit length."""
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if not np.isfinite(n) or n == 0.0:
        raise UsageError("cannot normalize a zero or non-finite vector")
    return v / n
