"""Body representation, support-function solvers, widths and Hausdorff distance."""

from .balls import EXACT_MAX_BALLS, Ball, BallSystem, max_linear_over_balls
from .body import (
    BallIntersection,
    Body,
    Negate,
    Project3to2,
    Rotate2D,
    Scale,
    Sum,
    ball,
    contains,
    point_body,
    rotation_matrix,
    support_eval,
    support_point,
)
from .grid import DirectionGrid, angle_direction, as_direction, direction_grid, normalize
from .metrics import (
    SupportProfile,
    WidthReport,
    hausdorff,
    support_profile,
    width,
    width_report,
    widths_on_grid,
)

__all__ = [
    "EXACT_MAX_BALLS",
    "Ball",
    "BallIntersection",
    "BallSystem",
    "Body",
    "DirectionGrid",
    "Negate",
    "Project3to2",
    "Rotate2D",
    "Scale",
    "Sum",
    "SupportProfile",
    "WidthReport",
    "angle_direction",
    "as_direction",
    "ball",
    "contains",
    "direction_grid",
    "hausdorff",
    "max_linear_over_balls",
    "normalize",
    "point_body",
    "rotation_matrix",
    "support_eval",
    "support_point",
    "support_profile",
    "width",
    "width_report",
    "widths_on_grid",
]
