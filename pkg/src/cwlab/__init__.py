"""Convex bodies of constant width in the plane and in space.

Bodies are ball intersections composed with Minkowski and rigid operations
and are queried through their support functions.
"""

from .constant_width import (
    ConstantWidthVerdict,
    RankReport,
    is_constant_width,
    reuleaux_polygon,
    reuleaux_simplex,
    reuleaux_simplex_edge,
    reuleaux_triangle,
    rotate,
    support_family_rank,
)
from .errors import (
    CwlabError,
    EmptyBody,
    NumericError,
    PreconditionError,
    SolverFailure,
    UnsupportedQuery,
    UsageError,
)
from .geometry_core import *  # noqa: F401,F403
from .geometry_core import __all__ as _core_all
from .minkowski_ops import (
    BallFit,
    central_symmetry,
    fit_ball,
    is_pair_constant_width,
    minkowski_sum,
    negate,
    scale,
)
from .softness_lab import (
    WitnessReport,
    boundary_lift_points,
    coplanarity_residual,
    diameter_orthogonality_check,
    nonopenness_report,
    project,
)

__version__ = "0.1.0"

__all__ = list(_core_all) + [
    "BallFit",
    "ConstantWidthVerdict",
    "CwlabError",
    "EmptyBody",
    "NumericError",
    "PreconditionError",
    "RankReport",
    "SolverFailure",
    "UnsupportedQuery",
    "UsageError",
    "WitnessReport",
    "boundary_lift_points",
    "central_symmetry",
    "coplanarity_residual",
    "diameter_orthogonality_check",
    "fit_ball",
    "is_constant_width",
    "is_pair_constant_width",
    "minkowski_sum",
    "negate",
    "nonopenness_report",
    "project",
    "reuleaux_polygon",
    "reuleaux_simplex",
    "reuleaux_simplex_edge",
    "reuleaux_triangle",
    "rotate",
    "scale",
    "support_family_rank",
]
