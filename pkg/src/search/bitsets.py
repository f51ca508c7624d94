"""
Bitset helpers for the exact searches.

Vertex sets are Python integers; bit v is set when vertex v belongs to the set.
"""

import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

from src.search.report import BudgetMeter


class SearchInterrupted(Exception):
    """Raised inside a search when its budget runs out."""


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def color_sort(candidates: int, adj: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    Greedy sequential coloring of the candidate vertices.

    Each color class is an independent set, so a clique meets every class at
    most once.

    Returns:
        (vertices, colors) with colors non-decreasing along the list
    """
    order: List[int] = []
    colors: List[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~(adj[v] | low)
            uncolored ^= low
            order.append(v)
            colors.append(color)
    return order, colors


def color_bound(candidates: int, adj: Sequence[int]) -> int:
    """Number of colors used by `color_sort`."""
    _, colors = color_sort(candidates, adj)
    return colors[-1] if colors else 0


def projection_classes(tuples: Sequence[Tuple[int, ...]], s: int) -> List[List[int]]:
    """
    Tuples agreeing on r - s + 1 coordinates are never s-comparable.

    Returns:
        For every (r - s + 1)-subset of coordinates, the masks of the
        classes of tuples with equal projection onto that subset
    """
    if not tuples:
        return []
    r = len(tuples[0])
    partitions = []
    for subset in itertools.combinations(range(r), r - s + 1):
        classes = {}
        for index, t in enumerate(tuples):
            key = tuple(t[i] for i in subset)
            classes[key] = classes.get(key, 0) | (1 << index)
        partitions.append(list(classes.values()))
    return partitions


def class_bound(candidates: int, partitions: Sequence[Sequence[int]]) -> int:
    """Pigeonhole bound: fewest classes met by the candidates over all partitions."""
    if not partitions:
        return popcount(candidates)
    return min(sum(1 for mask in classes if mask & candidates) for classes in partitions)


class CliqueSearch:
    """
    Branch and bound maximum clique over bitset adjacency.

    Branches on vertices in reverse color order and prunes when the chosen
    size plus the color of the next vertex cannot beat the incumbent.
    """

    def __init__(
        self,
        adj: Sequence[int],
        meter: BudgetMeter,
        lower_bound: int = 0,
        partitions: Optional[Sequence[Sequence[int]]] = None,
    ):
        self.adj = adj
        self.meter = meter
        self.best = lower_bound
        self.best_clique: Optional[List[int]] = None
        self.partitions = partitions or []

    def run(self, candidates: int, chosen: Optional[List[int]] = None) -> bool:
        """
        Explores cliques that extend `chosen` inside `candidates`.

        Returns:
            True when the subtree was exhausted, False if the budget ran out
        """
        chosen = list(chosen or [])
        if len(chosen) > self.best:
            self.best = len(chosen)
            self.best_clique = list(chosen)
        try:
            if candidates:
                self._expand(chosen, candidates)
        except SearchInterrupted:
            return False
        return True

    def _expand(self, chosen: List[int], candidates: int):
        if not self.meter.tick():
            raise SearchInterrupted
        if self.partitions and len(chosen) + class_bound(candidates, self.partitions) <= self.best:
            return
        order, colors = color_sort(candidates, self.adj)
        for index in range(len(order) - 1, -1, -1):
            if len(chosen) + colors[index] <= self.best:
                return
            v = order[index]
            chosen.append(v)
            narrowed = candidates & self.adj[v]
            if narrowed:
                self._expand(chosen, narrowed)
            elif len(chosen) > self.best:
                self.best = len(chosen)
                self.best_clique = list(chosen)
            chosen.pop()
            candidates &= ~(1 << v)
