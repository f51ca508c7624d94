"""
SAMPLING Module: Random s-comparable families by deletion.

Draw uniform tuples from [n]^r, then repeatedly delete the tuple involved in
the most non-comparable pairs until every remaining pair is s-comparable.
"""

import math
from fractions import Fraction
from typing import Iterable, Union

import numpy as np
import pandas as pd
from loguru import logger

from src.core.errors import InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily, less_matrix


def comparability_parameter(r: int, beta: Union[Fraction, float, str]) -> int:
    """s = floor(beta * r), computed exactly."""
    s = math.floor(Fraction(beta) * r)
    if not 1 <= s <= r:
        raise InvalidInputError(f"beta * r must give 1 <= s <= r, got s={s} for r={r}, beta={beta}")
    return s


def comparable_sample(
    n: int,
    r: int,
    beta: Union[Fraction, float, str],
    sample_size: int,
    seed: int,
) -> TupleFamily:
    """
    Samples and repairs an s-comparable family.

    Args:
        n: Alphabet size, tuples live in [n]^r
        r: Tuple length
        beta: Ratio with s = floor(beta * r)
        sample_size: Number of uniform draws
        seed: Seed of the PCG64 generator

    Returns:
        TupleFamily in COMPARABLE mode; survivors keep their draw order
    """
    if n < 1 or r < 1 or sample_size < 0:
        raise InvalidInputError(f"need n, r >= 1 and sample_size >= 0, got {n}, {r}, {sample_size}")
    s = comparability_parameter(r, beta)
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.integers(1, n + 1, size=(sample_size, r), dtype=np.int64)

    less = less_matrix(draws, s)
    conflict = ~less & ~less.T
    np.fill_diagonal(conflict, False)
    degree = conflict.sum(axis=1)
    alive = np.ones(sample_size, dtype=bool)

    while sample_size and degree.max() > 0:
        # argmax takes the lowest index among ties
        worst = int(np.argmax(degree))
        alive[worst] = False
        degree -= conflict[:, worst]
        degree[worst] = 0
        conflict[worst, :] = False
        conflict[:, worst] = False

    kept = draws[alive]
    logger.debug(f"[SEARCH] sample n={n} r={r} s={s}: kept {len(kept)} of {sample_size}")
    return TupleFamily(Box.cube(n, r), s, Mode.COMPARABLE, tuple(tuple(int(c) for c in row) for row in kept))


def sampling_experiment(
    n: int,
    rs: Iterable[int],
    beta: Union[Fraction, float, str],
    sample_size: int,
    seeds: Iterable[int],
) -> pd.DataFrame:
    """
    Retained sizes over a grid of tuple lengths and seeds.

    Returns:
        DataFrame with columns r, s, seed, retained
    """
    seeds = list(seeds)
    rows = []
    for r in rs:
        s = comparability_parameter(r, beta)
        for seed in seeds:
            family = comparable_sample(n, r, beta, sample_size, seed)
            rows.append({"r": r, "s": s, "seed": seed, "retained": len(family)})
    return pd.DataFrame(rows, columns=["r", "s", "seed", "retained"])
