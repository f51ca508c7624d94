"""
CONTINUOUS Package: Cuboid families, their alpha-score and discretization.
"""

from src.continuous.cuboids import (
    Cuboid,
    CuboidFamily,
    Interval,
    cuboids_comparable,
    eight_half_cubes,
    norm,
    refine,
    score,
    stretch,
    two_cuboid_family,
    unit_cube,
)
from src.continuous.discretize import DiscretizeResult, Filler, discretize, fill_block
from src.continuous.optimize import (
    AlphaSearch,
    OptimizeResult,
    bisect_alpha,
    family_score,
    five_cuboid_family,
    optimize_x,
    score_curve,
    solve_alpha,
)
from src.continuous.profile import ShiftOutcome, StepFunction, cross_profile, improve_shift

__all__ = [
    "Interval",
    "Cuboid",
    "CuboidFamily",
    "score",
    "norm",
    "cuboids_comparable",
    "stretch",
    "refine",
    "unit_cube",
    "two_cuboid_family",
    "eight_half_cubes",
    "five_cuboid_family",
    "family_score",
    "score_curve",
    "optimize_x",
    "bisect_alpha",
    "solve_alpha",
    "OptimizeResult",
    "AlphaSearch",
    "StepFunction",
    "ShiftOutcome",
    "cross_profile",
    "improve_shift",
    "Filler",
    "DiscretizeResult",
    "discretize",
    "fill_block",
]
