"""Direction-indexed quantities: support profiles, widths, Hausdorff distance."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import UsageError
from .body import support_eval
from .grid import DirectionGrid, as_direction


@dataclass(frozen=True, eq=False)
class SupportProfile:
    grid: DirectionGrid
    values: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class WidthReport:
    min_width: float
    max_width: float
    argmin: tuple
    argmax: tuple
    resolution: int

    @property
    def spread(self):
        return self.max_width - self.min_width

    def to_dict(self):
        return {
            "min_width": self.min_width,
            "max_width": self.max_width,
            "argmin": list(self.argmin),
            "argmax": list(self.argmax),
            "resolution": self.resolution,
        }


def _check_grid(body, grid):
    if grid.dim != body.dim:
        raise UsageError(f"grid dimension {grid.dim} does not match body dimension {body.dim}")


def support_profile(body, grid, method="auto"):
    """Support values of ``body`` at every grid direction."""
    _check_grid(body, grid)
    values, _ = body.support_many(grid.directions, method)
    values = np.array(values)
    values.setflags(write=False)
    return SupportProfile(grid, values)


def width(body, u, method="auto"):
    """Distance between the two supporting hyperplanes orthogonal to ``u``: h(u) + h(-u)."""
    u = as_direction(u, body.dim)
    return support_eval(body, u, method) + support_eval(body, -u, method)


def widths_on_grid(body, grid, method="auto"):
    """Width at each grid direction, evaluating each antipodal pair once."""
    _check_grid(body, grid)
    U = grid.directions
    if grid.closed_under_negation:
        h, _ = body.support_many(U, method)
        half = grid.m // 2
        opp = np.roll(np.arange(grid.m), -half)
        # sum the pair in a fixed order so that w(u) == w(-u) bitwise
        lo = np.minimum(np.arange(grid.m), opp)
        hi = np.maximum(np.arange(grid.m), opp)
        return h[lo] + h[hi]
    h, _ = body.support_many(np.vstack([U, -U]), method)
    return h[: grid.m] + h[grid.m:]


def width_report(body, grid, method="auto"):
    w = widths_on_grid(body, grid, method)
    i, j = int(np.argmin(w)), int(np.argmax(w))
    return WidthReport(
        min_width=float(w[i]),
        max_width=float(w[j]),
        argmin=tuple(float(x) for x in grid.directions[i]),
        argmax=tuple(float(x) for x in grid.directions[j]),
        resolution=grid.m,
    )


def hausdorff(a, b, grid, method="auto"):
    """Hausdorff distance of two convex bodies as the sup-norm gap of their support functions.

    Only the grid directions are inspected, so the value can undershoot the
    true distance by at most ``(R_a + R_b) * grid.mesh()`` where ``R`` is the
    largest point norm of each body.
    """
    if a.dim != b.dim:
        raise UsageError("bodies must have the same dimension")
    ha = support_profile(a, grid, method).values
    hb = support_profile(b, grid, method).values
    return float(np.max(np.abs(ha - hb)))
