"""
RUZSA Module: Sets without non-trivial solutions of 2x + 2y = z + 3w.

A solution-free set A gives a labelled bipartite graph on [n] x [n]: the edge
(x, y) with x > y and x + y in A carries the label x - y. That graph has no
path labelled aa, aba or abcab.
"""

from typing import Iterable, Optional, Tuple

from loguru import logger

from src.core.bipartite import LabelledBipartite
from src.core.errors import InvalidInputError

Quadruple = Tuple[int, int, int, int]


def ruzsa_solution(a: Iterable[int]) -> Optional[Quadruple]:
    """
    Finds a non-trivial solution of 2x + 2y = z + 3w inside A.

    Several solutions may exist; the one returned is the smallest (x, y, z, w)
    in lexicographic order, so {1, 2, 3} gives (1, 2, 3, 1) rather than
    (1, 3, 2, 2).

    Args:
        a: Finite set of integers

    Returns:
        The solution, or None when only x = y = z = w solves the equation
    """
    values = sorted(set(a))
    members = set(values)
    for x in values:
        for y in values:
            for z in values:
                rest = 2 * x + 2 * y - z
                if rest % 3:
                    continue
                w = rest // 3
                if w in members and not x == y == z == w:
                    return (x, y, z, w)
    return None


def ruzsa_free(a: Iterable[int]) -> bool:
    """
    Checks that A has no non-trivial solution of 2x + 2y = z + 3w.

    Args:
        a: Finite set of integers

    Returns:
        True when ruzsa_solution finds nothing
    """
    return ruzsa_solution(a) is None


def ap3_witness(a: Iterable[int]) -> Optional[Tuple[int, int, int]]:
    """First x < y < z in A with x + z = 2y."""
    values = sorted(set(a))
    members = set(values)
    for i, x in enumerate(values):
        for y in values[i + 1:]:
            if 2 * y - x in members:
                return (x, y, 2 * y - x)
    return None


def ap3_free(a: Iterable[int]) -> bool:
    return ap3_witness(a) is None


def ruzsa_greedy(n: int) -> Tuple[int, ...]:
    """Adds 1, 2, ..., n in turn whenever the set stays solution-free."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    chosen = []
    for k in range(1, n + 1):
        if ruzsa_free(chosen + [k]):
            chosen.append(k)
    logger.debug(f"[HYPER] greedy solution-free set up to {n}: {len(chosen)} elements")
    return tuple(chosen)


def ruzsa_graph(a: Iterable[int], n: int) -> LabelledBipartite:
    """
    Edges (x, y) of [n] x [n] with x > y and x + y in A, labelled x - y.

    Args:
        a: Set of sums, inside [1, 2n]
        n: Side size

    Returns:
        LabelledBipartite with U = V = [n]
    """
    a = set(a)
    if n < 1 or any(not 1 <= k <= 2 * n for k in a):
        raise InvalidInputError(f"A must be a subset of [1, {2 * n}]")
    edges = {
        (x, y): x - y
        for x in range(1, n + 1)
        for y in range(1, x)
        if x + y in a
    }
    return LabelledBipartite(n, n, edges)
