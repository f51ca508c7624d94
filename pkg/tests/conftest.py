"""
Shared fixtures for the test suite.
"""

import itertools

import matplotlib

matplotlib.use("Agg")

import numpy as np
import pytest

from src.constructions import GalleryId, gallery
from src.core import Box, Mode, TupleFamily, comparable_pair


@pytest.fixture
def n4():
    return gallery(GalleryId.N4_LEN8)


@pytest.fixture
def comp5():
    return gallery(GalleryId.COMP5_3CUBE)


@pytest.fixture
def fig2a():
    return gallery(GalleryId.FIG2A_28)


@pytest.fixture
def lastfig():
    return gallery(GalleryId.LASTFIG_15)


@pytest.fixture
def grid10():
    return gallery(GalleryId.GRID10_554)


def random_comparable_family(rng: np.random.Generator, n: int = 4) -> TupleFamily:
    """Greedy 2-comparable subset of [n]^3 taken in a random order."""
    candidates = list(itertools.product(range(1, n + 1), repeat=3))
    chosen = []
    for index in rng.permutation(len(candidates)):
        t = candidates[index]
        if all(comparable_pair(t, c, 2) for c in chosen):
            chosen.append(t)
    return TupleFamily(Box.cube(n, 3), 2, Mode.COMPARABLE, tuple(sorted(chosen)))


@pytest.fixture
def comparable_family_factory():
    return random_comparable_family
