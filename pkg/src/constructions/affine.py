"""
AFFINE Module: Value tables of affine functions over a finite field.

Two distinct affine maps F_q^k -> F_q agree on at most q^(k-1) points, so
their value tables are s-comparable for s = ceil((q^k - q^(k-1)) / 2).
"""

import itertools
import math

import galois
import numpy as np
from loguru import logger

from src.core.errors import InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily

# Largest number of table entries (tuples x length) we are willing to build
MAX_TABLE_ENTRIES = 10**7


def affine_comparability(q: int, k: int) -> int:
    """Comparability parameter guaranteed by the agreement bound."""
    return math.ceil((q**k - q ** (k - 1)) / 2)


def affine_code(q: int, k: int) -> TupleFamily:
    """
    Lists every map x -> a.x + b with a in F_q^k and b in F_q.

    Each map becomes the tuple (f(x) + 1) over x in F_q^k in lexicographic
    order; maps are listed with a in lexicographic order, then b.

    Args:
        q: Field order, a prime power
        k: Dimension of the domain, at least 1

    Returns:
        TupleFamily of q^(k+1) tuples of length q^k over [q], COMPARABLE mode
    """
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    if q < 2 or not galois.is_prime_power(q):
        raise InvalidInputError(f"q must be a prime power, got {q}")
    r = q**k
    if q ** (k + 1) * r > MAX_TABLE_ENTRIES:
        raise InvalidInputError(f"affine table for q={q}, k={k} is too large")

    field = galois.GF(q)
    points = field(np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64))

    tuples = []
    for a in itertools.product(range(q), repeat=k):
        linear = points @ field(np.array(a, dtype=np.int64))
        for b in range(q):
            values = np.asarray(linear + field(b), dtype=np.int64) + 1
            tuples.append(tuple(int(v) for v in values))

    s = affine_comparability(q, k)
    logger.debug(f"[CONSTRUCT] affine code q={q} k={k}: {len(tuples)} tuples, s={s}")
    return TupleFamily(Box.cube(q, r), s, Mode.COMPARABLE, tuple(tuples))


def max_agreement(family: TupleFamily) -> int:
    """Largest number of positions on which two distinct tuples agree."""
    array = family.as_array()
    if len(array) < 2:
        return 0
    agree = (array[:, None, :] == array[None, :, :]).sum(axis=2)
    np.fill_diagonal(agree, 0)
    return int(agree.max())
