"""
CUBOIDS Module: Disjoint open boxes in the unit cube and their alpha-score.

Endpoints are exact fractions; floating point is only used when a score is
evaluated.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from src.core.errors import InvalidInputError
from src.core.tuples import Mode, TupleFamily

Rational = Union[Fraction, int, str]


# ========================================================================
# DOMAIN TYPES
# ========================================================================


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi) with 0 <= lo < hi <= 1."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if not 0 <= lo < hi <= 1:
            raise InvalidInputError(f"interval ({lo}, {hi}) must satisfy 0 <= lo < hi <= 1")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def precedes(self, other: "Interval") -> bool:
        """Every point of self is below every point of other."""
        return self.hi <= other.lo

    def overlaps(self, other: "Interval") -> bool:
        return self.lo < other.hi and other.lo < self.hi

    def to_list(self) -> List[int]:
        return [self.lo.numerator, self.lo.denominator, self.hi.numerator, self.hi.denominator]

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "Interval":
        if len(values) != 4:
            raise InvalidInputError(f"interval needs [p, q, p', q'], got {values}")
        p, q, p2, q2 = values
        return cls(Fraction(p, q), Fraction(p2, q2))


@dataclass(frozen=True)
class Cuboid:
    """Axis-parallel open box X x Y x Z."""

    x: Interval
    y: Interval
    z: Interval

    @property
    def sides(self) -> Tuple[Interval, Interval, Interval]:
        return (self.x, self.y, self.z)

    @property
    def volume(self) -> Fraction:
        return self.x.length * self.y.length * self.z.length

    def less(self, other: "Cuboid") -> bool:
        """2-less: intervals precede in at least two axes."""
        return sum(a.precedes(b) for a, b in zip(self.sides, other.sides)) >= 2

    def disjoint(self, other: "Cuboid") -> bool:
        return any(not a.overlaps(b) for a, b in zip(self.sides, other.sides))

    def to_dict(self) -> Dict:
        return {"x": self.x.to_list(), "y": self.y.to_list(), "z": self.z.to_list()}

    @classmethod
    def from_dict(cls, data: Dict) -> "Cuboid":
        try:
            return cls(*(Interval.from_list(data[key]) for key in ("x", "y", "z")))
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"malformed cuboid document: {e}") from e


@dataclass(frozen=True)
class CuboidFamily:
    """Pairwise disjoint open cuboids inside the unit cube, in a fixed order."""

    cuboids: Tuple[Cuboid, ...] = ()

    def __post_init__(self):
        cuboids = tuple(self.cuboids)
        object.__setattr__(self, "cuboids", cuboids)
        for (i, a), (j, b) in itertools.combinations(enumerate(cuboids), 2):
            if not a.disjoint(b):
                raise InvalidInputError(f"cuboids {i} and {j} overlap")

    def __len__(self) -> int:
        return len(self.cuboids)

    def __iter__(self):
        return iter(self.cuboids)

    @classmethod
    def from_tuples(cls, family: TupleFamily) -> "CuboidFamily":
        """Scales a triple family into the unit cube, one small box per triple."""
        return stretch(family, [[Fraction(i, n) for i in range(n + 1)] for n in family.box.dims])

    def to_list(self) -> List[Dict]:
        return [c.to_dict() for c in self.cuboids]

    @classmethod
    def from_list(cls, data: Iterable[Dict]) -> "CuboidFamily":
        return cls(tuple(Cuboid.from_dict(item) for item in data))


# ========================================================================
# SCORES
# ========================================================================


def _check_alpha(alpha: float):
    if alpha <= 0:
        raise InvalidInputError(f"alpha must be positive, got {alpha}")


def score(b: CuboidFamily, alpha: float) -> float:
    """
    Sum of |B_i|^alpha over the family.

    The family clears the threshold (norm at least 1) exactly when this sum
    is at least 1. Terms are added in family order with math.fsum.
    """
    _check_alpha(alpha)
    return math.fsum(float(c.volume) ** alpha for c in b.cuboids)


def norm(b: CuboidFamily, alpha: float) -> float:
    """(sum |B_i|^alpha)^(1/alpha)."""
    return score(b, alpha) ** (1.0 / alpha)


def cuboids_comparable(b: CuboidFamily, mode: Mode = Mode.COMPARABLE) -> bool:
    """
    Checks interval-wise 2-comparability, or 2-increase along the family
    order when mode is INCREASING.
    """
    mode = Mode(mode)
    for a, c in itertools.combinations(b.cuboids, 2):
        if mode is Mode.INCREASING:
            if not a.less(c):
                return False
        elif not (a.less(c) or c.less(a)):
            return False
    return True


# ========================================================================
# BUILDERS
# ========================================================================


def stretch(family: TupleFamily, cuts: Sequence[Sequence[Rational]]) -> CuboidFamily:
    """
    Turns a triple family into cuboids.

    Coordinate value v on axis k becomes the interval (cuts[k][v-1], cuts[k][v]).

    Args:
        family: Triple family
        cuts: Per axis, dims[k] + 1 increasing fractions from 0 to 1

    Returns:
        CuboidFamily in the family's order
    """
    if family.arity != 3:
        raise InvalidInputError(f"cuboids need triples, got arity {family.arity}")
    axes = []
    for k, (n, cut) in enumerate(zip(family.box.dims, cuts)):
        cut = [Fraction(c) for c in cut]
        if len(cut) != n + 1 or cut[0] != 0 or cut[-1] != 1:
            raise InvalidInputError(f"axis {k + 1} needs {n + 1} cuts from 0 to 1, got {cut}")
        axes.append(cut)
    return CuboidFamily(
        tuple(
            Cuboid(*(Interval(axes[k][v - 1], axes[k][v]) for k, v in enumerate(t)))
            for t in family.tuples
        )
    )


def refine(outer: CuboidFamily, inner: CuboidFamily) -> CuboidFamily:
    """
    Places a scaled copy of `inner` inside every cuboid of `outer`.

    Volumes multiply, so score(refine(B, B), a) == score(B, a) ** 2.

    Args:
        outer: Host cuboids
        inner: Family copied into each host, scaled axis by axis

    Returns:
        CuboidFamily of len(outer) * len(inner) cuboids, host by host
    """

    def place(host: Interval, part: Interval) -> Interval:
        return Interval(host.lo + part.lo * host.length, host.lo + part.hi * host.length)

    return CuboidFamily(
        tuple(
            Cuboid(*(place(h, p) for h, p in zip(host.sides, part.sides)))
            for host in outer.cuboids
            for part in inner.cuboids
        )
    )


def unit_cube() -> CuboidFamily:
    """
    The whole cube (0,1)^3 as a one-cuboid family.

    Returns:
        CuboidFamily scoring 1 at every alpha
    """
    whole = Interval(0, 1)
    return CuboidFamily((Cuboid(whole, whole, whole),))


def two_cuboid_family() -> CuboidFamily:
    """
    (0,1/2)^2 x (0,1) followed by (1/2,1)^2 x (0,1).

    Returns:
        CuboidFamily, 2-increasing in this order; scores exactly 1 at alpha = 1/2
    """
    low, high, whole = Interval(0, Fraction(1, 2)), Interval(Fraction(1, 2), 1), Interval(0, 1)
    return CuboidFamily((Cuboid(low, low, whole), Cuboid(high, high, whole)))


def eight_half_cubes() -> CuboidFamily:
    """
    The eight octants of the unit cube.

    Returns:
        CuboidFamily that tiles the cube but is not 2-comparable
    """
    halves = (Interval(0, Fraction(1, 2)), Interval(Fraction(1, 2), 1))
    return CuboidFamily(tuple(Cuboid(a, b, c) for a, b, c in itertools.product(halves, repeat=3)))
