"""
OPTIMIZE Module: The five-cuboid family and the best exponent it certifies.

Stretching the five-point comparable cube with cuts 0 < x < 1-x < 1 gives a
family of five cuboids scoring 2x^(3a) + 3x^(2a)(1-2x)^a. The module
maximizes that score over x and bisects on a for the largest exponent whose
maximum still reaches 1.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple, Union

import numpy as np
import pandas as pd
from loguru import logger

from src.config import ALPHA_BRACKET, OPTIMIZE_SCAN_POINTS, OPTIMIZE_TOL
from src.constructions.gallery import COMP5_3CUBE
from src.continuous.cuboids import CuboidFamily, stretch
from src.core.errors import CertificateError, InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

# Slack allowed on the scan before a dip counts as a second peak
_SCAN_SLACK = 1e-14


@dataclass(frozen=True)
class OptimizeResult:
    alpha: float
    x_star: float
    value: float

    def to_dict(self):
        return {"alpha": self.alpha, "x_star": self.x_star, "value": self.value}


@dataclass(frozen=True)
class AlphaSearch:
    """Bisection outcome: the exponent plus every evaluated step."""

    alpha: float
    tol: float
    trace: pd.DataFrame

    @property
    def exponent(self) -> float:
        """Size exponent 3a of the discrete families the score certifies."""
        return 3 * self.alpha


def five_cuboid_family(x: Union[Fraction, float, str]) -> CuboidFamily:
    """
    Stretches the comparable five-point cube with cuts (0, x, 1-x, 1).

    Args:
        x: Cut in (0, 1/2); floats and strings go through Fraction

    Returns:
        CuboidFamily of five cuboids, two of side x and three of sides x, x, 1 - 2x
    """
    x = Fraction(x)
    if not 0 < x < Fraction(1, 2):
        raise InvalidInputError(f"x must lie in (0, 1/2), got {x}")
    seed = TupleFamily(Box.cube(3, 3), 2, Mode.COMPARABLE, COMP5_3CUBE)
    cut = (0, x, 1 - x, 1)
    return stretch(seed, (cut, cut, cut))


def family_score(x: float, alpha: float) -> float:
    """2x^(3a) + 3x^(2a)(1-2x)^a for 0 < x < 1/2."""
    if not 0 < x < 0.5:
        raise InvalidInputError(f"x must lie in (0, 1/2), got {x}")
    if alpha <= 0:
        raise InvalidInputError(f"alpha must be positive, got {alpha}")
    return 2 * x ** (3 * alpha) + 3 * x ** (2 * alpha) * (1 - 2 * x) ** alpha


def score_curve(alpha: float, points: int = OPTIMIZE_SCAN_POINTS) -> pd.DataFrame:
    """
    family_score on an even grid of interior points of (0, 1/2).

    Returns:
        DataFrame with columns x, value
    """
    xs = np.linspace(0.0, 0.5, points + 2)[1:-1]
    values = 2 * xs ** (3 * alpha) + 3 * xs ** (2 * alpha) * (1 - 2 * xs) ** alpha
    return pd.DataFrame({"x": xs, "value": values})


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = OPTIMIZE_TOL) -> Tuple[float, float]:
    """
    Golden-section search for the maximum of a unimodal f on [a, b].

    Returns:
        (c, d) sub-interval of width at most tol holding the maximum
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        return a, d
    return c, b


def optimize_x(alpha: float) -> OptimizeResult:
    """
    Maximizes family_score(., alpha) over (0, 1/2).

    A grid scan locates the peak and checks that the scan rises then falls;
    golden-section search then refines inside the neighbouring grid cells.
    At alpha = 1 the score increases all the way to x = 1/2, which the scan
    accepts as a peak on the boundary.

    Args:
        alpha: Exponent in (0, 1]

    Returns:
        OptimizeResult with x_star to within OPTIMIZE_TOL
    """
    if not 0 < alpha <= 1:
        raise InvalidInputError(f"alpha must lie in (0, 1], got {alpha}")
    curve = score_curve(alpha)
    xs = curve["x"].to_numpy()
    values = curve["value"].to_numpy()

    peak = int(np.argmax(values))
    rising = np.diff(values[: peak + 1])
    falling = np.diff(values[peak:])
    if (rising < -_SCAN_SLACK).any() or (falling > _SCAN_SLACK).any():
        raise CertificateError(f"family_score is not unimodal on the scan at alpha={alpha}")

    lo = xs[peak - 1] if peak > 0 else 0.0
    hi = xs[peak + 1] if peak < len(xs) - 1 else 0.5
    c, d = golden_section_max(lambda x: family_score(x, alpha), lo, hi)
    x_star = (c + d) / 2
    value = family_score(x_star, alpha)
    if value < values[peak]:
        x_star, value = float(xs[peak]), float(values[peak])

    logger.debug(f"[CONTINUOUS] alpha={alpha:.12f}: x*={x_star:.12f}, score={value:.12f}")
    return OptimizeResult(alpha=alpha, x_star=float(x_star), value=float(value))


def bisect_alpha(tol: float = 1e-6) -> AlphaSearch:
    """
    Bisects for the largest alpha with max_x family_score(x, alpha) >= 1.

    Args:
        tol: Width of the final bracket, at least 1e-12

    Returns:
        AlphaSearch; trace has columns step, alpha, x_star, value, holds
    """
    if tol < 1e-12:
        raise InvalidInputError(f"tol must be at least 1e-12, got {tol}")
    lo, hi = ALPHA_BRACKET
    rows = []

    def holds_at(alpha: float) -> bool:
        result = optimize_x(alpha)
        holds = result.value >= 1.0
        rows.append({"step": len(rows), "alpha": alpha, "x_star": result.x_star, "value": result.value, "holds": holds})
        return holds

    if not holds_at(lo) or holds_at(hi):
        raise CertificateError(f"the threshold does not change sign on [{lo}, {hi}]")

    while hi - lo > tol:
        mid = (lo + hi) / 2
        if holds_at(mid):
            lo = mid
        else:
            hi = mid

    trace = pd.DataFrame(rows, columns=["step", "alpha", "x_star", "value", "holds"])
    _check_monotone(trace)
    logger.info(f"[CONTINUOUS] alpha* = {lo:.10f} after {len(trace)} evaluations")
    return AlphaSearch(alpha=lo, tol=tol, trace=trace)


def _check_monotone(trace: pd.DataFrame):
    ordered = trace.sort_values("alpha")
    if (ordered["value"].diff().dropna() > _SCAN_SLACK).any():
        raise CertificateError("optimal score increased with alpha along the bisection trace")
    holds = ordered["holds"].to_numpy()
    if (np.diff(holds.astype(int)) > 0).any():
        raise CertificateError("threshold predicate is not monotone along the bisection trace")


def solve_alpha(tol: float = 1e-6) -> float:
    """Largest alpha, to within tol, whose optimized five-cuboid score reaches 1."""
    return bisect_alpha(tol).alpha
