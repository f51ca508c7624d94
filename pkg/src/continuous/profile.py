"""
PROFILE Module: Cross-section profiles and the score-increasing shift.

For a cuboid family and an axis, the profile at t adds x^(a-1) (y z)^a over
the cuboids whose interval on that axis contains t, where x is the side
along the axis and y, z are the other two sides. It is a step function. If
it is not constant, stretching the axis where it is large and compressing
it where it is small raises the score.
"""

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from loguru import logger

from src.config import SHIFT_MAX_HALVINGS
from src.continuous.cuboids import Cuboid, CuboidFamily, Interval, cuboids_comparable, score
from src.core.errors import CertificateError, InvalidInputError
from src.core.tuples import Mode

_PROFILE_REL_TOL = 1e-12


@dataclass(frozen=True)
class StepFunction:
    """
    Piecewise-constant function on [0, 1].

    values[i] holds on the open piece (breakpoints[i], breakpoints[i+1]).
    """

    breakpoints: Tuple[Fraction, ...] = ()
    values: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.breakpoints and len(self.values) != len(self.breakpoints) - 1:
            raise InvalidInputError("a step function needs one value per piece")

    def pieces(self) -> Iterator[Tuple[Fraction, Fraction, float]]:
        for i, value in enumerate(self.values):
            yield self.breakpoints[i], self.breakpoints[i + 1], value

    def __call__(self, t: float) -> float:
        """Value at t; t must not be a breakpoint."""
        i = bisect_left(self.breakpoints, t)
        if i == 0 or i == len(self.breakpoints) or self.breakpoints[i] == t:
            raise InvalidInputError(f"{t} is a breakpoint or outside [0, 1]")
        return self.values[i - 1]

    def is_constant(self) -> bool:
        if not self.values:
            return True
        first = self.values[0]
        return all(math.isclose(v, first, rel_tol=_PROFILE_REL_TOL, abs_tol=1e-15) for v in self.values)

    def to_dict(self) -> Dict:
        return {
            "pieces": [
                {"lo": str(lo), "hi": str(hi), "value": value} for lo, hi, value in self.pieces()
            ],
            "constant": self.is_constant(),
        }


@dataclass(frozen=True)
class ShiftOutcome:
    """
    Result of improve_shift.

    `family` is None when the profile is balanced or no step size improved
    the score; `diagnostics` then says which.
    """

    status: str
    family: Optional[CuboidFamily]
    score_before: float
    score_after: float
    delta: Optional[Fraction] = None
    diagnostics: str = ""

    @property
    def improved(self) -> bool:
        return self.status == "improved"

    def to_dict(self) -> Dict:
        return {
            "status": self.status,
            "score_before": self.score_before,
            "score_after": self.score_after,
            "delta": None if self.delta is None else str(self.delta),
            "diagnostics": self.diagnostics,
            "family": None if self.family is None else self.family.to_list(),
        }


def _check_axis(axis: int) -> int:
    if axis not in (1, 2, 3):
        raise InvalidInputError(f"axis must be 1, 2 or 3, got {axis}")
    return axis - 1


def _weight(cuboid: Cuboid, k: int, alpha: float) -> float:
    sides = [float(side.length) for side in cuboid.sides]
    along = sides.pop(k)
    return along ** (alpha - 1) * (sides[0] * sides[1]) ** alpha


def cross_profile(b: CuboidFamily, axis: int, alpha: float) -> StepFunction:
    """
    Profile of the family along one axis.

    Breakpoints are every endpoint on that axis plus 0 and 1; pieces not
    covered by any cuboid take the value 0.
    """
    k = _check_axis(axis)
    if not len(b):
        return StepFunction()
    weights = [_weight(c, k, alpha) for c in b.cuboids]
    points = sorted({Fraction(0), Fraction(1)} | {e for c in b.cuboids for e in (c.sides[k].lo, c.sides[k].hi)})
    values = []
    for lo, hi in zip(points, points[1:]):
        values.append(
            math.fsum(w for c, w in zip(b.cuboids, weights) if c.sides[k].lo <= lo and hi <= c.sides[k].hi)
        )
    return StepFunction(tuple(points), tuple(values))


def _remap(points: List[Fraction], lengths: List[Fraction]):
    """Piecewise-linear bijection sending old breakpoints to new cumulative ones."""
    image = [Fraction(0)]
    for length in lengths:
        image.append(image[-1] + length)
    table = dict(zip(points, image))
    return lambda t: table[t]


def _shifted(b: CuboidFamily, k: int, points: List[Fraction], expand: int, shrink: int, delta: Fraction) -> CuboidFamily:
    lengths = [hi - lo for lo, hi in zip(points, points[1:])]
    lengths[expand] += delta
    lengths[shrink] -= delta
    phi = _remap(points, lengths)
    cuboids = []
    for c in b.cuboids:
        sides = list(c.sides)
        sides[k] = Interval(phi(sides[k].lo), phi(sides[k].hi))
        cuboids.append(Cuboid(*sides))
    return CuboidFamily(tuple(cuboids))


def improve_shift(b: CuboidFamily, axis: int, alpha: float) -> ShiftOutcome:
    """
    Tries to raise the score by reparameterizing one axis.

    The piece where the profile is largest is stretched by delta and the
    piece where it is smallest is compressed by the same amount. delta
    starts at half the shorter of the two pieces and is halved until the
    score strictly increases.

    Args:
        b: Cuboid family
        axis: 1, 2 or 3
        alpha: Score exponent

    Returns:
        ShiftOutcome with status "improved" or "balanced"
    """
    k = _check_axis(axis)
    before = score(b, alpha)
    profile = cross_profile(b, axis, alpha)
    if profile.is_constant():
        return ShiftOutcome("balanced", None, before, before, diagnostics="profile is constant")

    points = list(profile.breakpoints)
    values = list(profile.values)
    expand = max(range(len(values)), key=lambda i: values[i])
    shrink = min(range(len(values)), key=lambda i: values[i])
    delta = min(points[expand + 1] - points[expand], points[shrink + 1] - points[shrink]) / 2

    for _ in range(SHIFT_MAX_HALVINGS):
        candidate = _shifted(b, k, points, expand, shrink, delta)
        after = score(candidate, alpha)
        if after > before:
            if cuboids_comparable(b, Mode.COMPARABLE) and not cuboids_comparable(candidate, Mode.COMPARABLE):
                raise CertificateError("shift broke 2-comparability")
            logger.debug(f"[CONTINUOUS] axis {axis}: score {before:.12f} -> {after:.12f} with delta {float(delta):.3e}")
            return ShiftOutcome("improved", candidate, before, after, delta)
        delta /= 2

    spread = values[expand] - values[shrink]
    return ShiftOutcome(
        "balanced",
        None,
        before,
        before,
        diagnostics=(
            f"no improvement after {SHIFT_MAX_HALVINGS} halvings; "
            f"profile spread {spread:.3e} is below numeric resolution"
        ),
    )
