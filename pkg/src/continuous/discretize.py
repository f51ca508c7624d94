"""
DISCRETIZE Module: From a rational cuboid family back to a triple family.

Each axis is scaled by the common denominator of its endpoints, so every
cuboid becomes an integer block. Each block is filled with a 2-comparable
set; since the blocks themselves are 2-comparable, any two triples from
different blocks are too.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.constructions.generators import base_interleave
from src.continuous.cuboids import CuboidFamily, cuboids_comparable
from src.core.errors import InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily, TupleR

Dims = Tuple[int, int, int]


class Filler(str, Enum):
    INTERLEAVE = "interleave"
    DIAGONAL = "diagonal"
    AUTO = "auto"


@dataclass(frozen=True)
class DiscretizeResult:
    family: TupleFamily
    scale: Dims
    block_counts: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {
            "scale": list(self.scale),
            "block_counts": list(self.block_counts),
            "family": self.family.to_dict(),
        }


def interleave_fill(dims: Dims) -> List[TupleR]:
    """
    Base-m interleave with m = floor(sqrt(min side)), coordinates cycled
    to (c2, c3, c1). Gives m^3 triples inside [m^2]^3.
    """
    m = math.isqrt(min(dims))
    return [(t[1], t[2], t[0]) for t in base_interleave(m, 3, 2).tuples]


def diagonal_fill(dims: Dims) -> List[TupleR]:
    """
    Walks the diagonal of the two longest axes; the third coordinate follows
    it until capped by its own side.
    """
    order = sorted(range(3), key=lambda k: -dims[k])
    p, q, rest = order
    triples = []
    for i in range(1, dims[q] + 1):
        t = [0, 0, 0]
        t[p] = i
        t[q] = i
        t[rest] = min(i, dims[rest])
        triples.append(tuple(t))
    return triples


def fill_block(dims: Dims, filler: Filler = Filler.AUTO) -> List[TupleR]:
    """Fills a block of sides dims with a 2-comparable set of local triples."""
    filler = Filler(filler)
    if filler is Filler.INTERLEAVE:
        return interleave_fill(dims)
    if filler is Filler.DIAGONAL:
        return diagonal_fill(dims)
    interleaved, diagonal = interleave_fill(dims), diagonal_fill(dims)
    return interleaved if len(interleaved) >= len(diagonal) else diagonal


def axis_scales(b: CuboidFamily) -> Dims:
    """Least common denominator of the endpoints on each axis."""
    return tuple(
        reduce(math.lcm, (e.denominator for c in b.cuboids for e in (c.sides[k].lo, c.sides[k].hi)), 1)
        for k in range(3)
    )


def discretize(b: CuboidFamily, filler: Filler = Filler.AUTO, scale: Optional[Sequence[int]] = None) -> DiscretizeResult:
    """
    Turns a 2-comparable cuboid family into a 2-comparable triple family.

    Args:
        b: Cuboid family with rational endpoints
        filler: Block filling strategy
        scale: Per-axis multipliers; defaults to the endpoint denominators

    Returns:
        DiscretizeResult with the family in [D1] x [D2] x [D3]

    Raises:
        InvalidInputError: The cuboids are not pairwise 2-comparable, or the
            scale leaves a fractional endpoint
    """
    if not cuboids_comparable(b):
        raise InvalidInputError("cuboid family is not 2-comparable")
    scale = axis_scales(b) if scale is None else tuple(int(d) for d in scale)
    if len(scale) != 3 or any(d < 1 for d in scale):
        raise InvalidInputError(f"scale needs three positive integers, got {scale}")

    triples: List[TupleR] = []
    counts = []
    for index, cuboid in enumerate(b.cuboids):
        lows, dims = [], []
        for k, side in enumerate(cuboid.sides):
            lo, hi = side.lo * scale[k], side.hi * scale[k]
            if lo.denominator != 1 or hi.denominator != 1:
                raise InvalidInputError(f"cuboid {index} axis {k + 1}: scale {scale[k]} does not clear {side.lo}, {side.hi}")
            lows.append(int(lo))
            dims.append(int(hi - lo))
        local = fill_block(tuple(dims), filler)
        counts.append(len(local))
        triples.extend(tuple(low + v for low, v in zip(lows, t)) for t in local)

    logger.debug(f"[CONTINUOUS] discretized {len(b)} cuboids into {len(triples)} triples at scale {scale}")
    family = TupleFamily(Box(scale), 2, Mode.COMPARABLE, tuple(sorted(triples)))
    return DiscretizeResult(family=family, scale=scale, block_counts=tuple(counts))
