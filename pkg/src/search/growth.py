"""
GROWTH Module: Random maximal s-increasing sequences.

The sequence is built tuple by tuple. At each step the candidates are the
tuples that are s-greater than every tuple chosen so far; the next tuple is
picked among the coordinatewise-minimal candidates, narrowed by the policy
and then drawn uniformly with a seeded generator. Growth stops when no
candidate is left, so the result is maximal.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List

import numpy as np
import pandas as pd
from loguru import logger

from src.core.tuples import Box, Mode, TupleFamily

# Rows compared per block when looking for minimal candidates
_MINIMAL_BLOCK_ELEMENTS = 4_000_000


class GrowthKind(str, Enum):
    UNIFORM_MINIMAL = "uniformMinimal"
    MIN_SUM_SQUARES = "minSumSquares"
    MAX_MIN_COORDINATE = "maxMinCoordinate"


@dataclass(frozen=True)
class GrowthPolicy:
    """Tie-breaking policy plus the 64-bit seed of its generator."""

    kind: GrowthKind = GrowthKind.UNIFORM_MINIMAL
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", GrowthKind(self.kind))
        object.__setattr__(self, "seed", int(self.seed) & 0xFFFFFFFFFFFFFFFF)

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.seed))


def minimal_rows(rows: np.ndarray) -> np.ndarray:
    """
    Marks the rows not dominated coordinatewise by another row.

    Args:
        rows: (m, r) array of distinct tuples

    Returns:
        Boolean mask of length m
    """
    m = len(rows)
    if m == 0:
        return np.zeros(0, dtype=bool)
    block = max(1, _MINIMAL_BLOCK_ELEMENTS // max(1, m * rows.shape[1]))
    keep = np.empty(m, dtype=bool)
    for start in range(0, m, block):
        chunk = rows[start:start + block]
        below_or_equal = (rows[None, :, :] <= chunk[:, None, :]).all(axis=2)
        # Each row is below-or-equal to itself exactly once.
        keep[start:start + block] = below_or_equal.sum(axis=1) == 1
    return keep


def _narrow(pool: np.ndarray, tuples: np.ndarray, kind: GrowthKind) -> np.ndarray:
    if kind is GrowthKind.MIN_SUM_SQUARES:
        score = (tuples[pool] ** 2).sum(axis=1)
        return pool[score == score.min()]
    if kind is GrowthKind.MAX_MIN_COORDINATE:
        score = tuples[pool].min(axis=1)
        return pool[score == score.max()]
    return pool


def random_grow(box: Box, s: int, policy: GrowthPolicy) -> TupleFamily:
    """
    Grows one maximal s-increasing sequence.

    Args:
        box: Ambient box
        s: Comparability parameter
        policy: Tie-breaking rule and seed

    Returns:
        TupleFamily in INCREASING mode; identical for identical inputs
    """
    rng = policy.generator()
    tuples = np.array(list(box.tuples()), dtype=np.int64)
    candidates = np.ones(len(tuples), dtype=bool)
    chosen: List[int] = []

    while candidates.any():
        index = np.flatnonzero(candidates)
        pool = index[minimal_rows(tuples[index])]
        pool = _narrow(pool, tuples, policy.kind)
        pick = int(pool[rng.integers(len(pool))])
        chosen.append(pick)
        candidates &= (tuples[pick] < tuples).sum(axis=1) >= s

    logger.debug(f"[SEARCH] grew {len(chosen)} tuples in {box} with {policy.kind.value}, seed {policy.seed}")
    return TupleFamily(box, s, Mode.INCREASING, tuple(tuple(int(c) for c in tuples[i]) for i in chosen))


def grow_many(box: Box, s: int, kind: GrowthKind, seeds: Iterable[int]) -> pd.DataFrame:
    """
    Runs one policy over many seeds.

    Returns:
        DataFrame with columns seed, policy, length
    """
    rows = []
    for seed in seeds:
        family = random_grow(box, s, GrowthPolicy(kind, seed))
        rows.append({"seed": seed, "policy": GrowthKind(kind).value, "length": len(family)})
    return pd.DataFrame(rows, columns=["seed", "policy", "length"])
