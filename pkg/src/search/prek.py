"""
PREK Module: Largest cell sets of [n]^2 without a forbidden triple.

A triple is forbidden when x is 2-less than y (strictly below-left) and a
third cell z is weakly incomparable to both of them.
"""

import itertools
import time
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from src.config import PREK_MAX_N
from src.constructions.gallery import prek_sharp
from src.core.errors import InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily, weakly_comparable
from src.search.bitsets import SearchInterrupted, iter_bits, popcount
from src.search.report import BudgetMeter, SearchBudget, SearchReport

Cell = Tuple[int, int]


def _is_forbidden(x: Cell, y: Cell, z: Cell) -> bool:
    return (
        x[0] < y[0]
        and x[1] < y[1]
        and not weakly_comparable(z, x)
        and not weakly_comparable(z, y)
    )


def prek_violations(cells: Iterable[Cell]) -> List[Tuple[Cell, Cell, Cell]]:
    """
    Lists the forbidden triples of a cell set.

    Returns:
        (x, y, z) with x 2-less than y and z weakly incomparable to both
    """
    points = sorted(set(cells))
    return [
        (x, y, z)
        for x, y in itertools.permutations(points, 2)
        for z in points
        if z not in (x, y) and _is_forbidden(x, y, z)
    ]


class _PrekSearch:
    """Include/exclude search over cells in lexicographic order."""

    def __init__(self, cells: Sequence[Cell], meter: BudgetMeter, lower_bound: int):
        self.cells = cells
        self.meter = meter
        self.best = lower_bound
        self.best_mask: Optional[int] = None
        size = len(cells)
        # completes[i][j]: cells that would close a forbidden triple with i and j
        self.completes = [[0] * size for _ in range(size)]
        for i, j, k in itertools.permutations(range(size), 3):
            if _is_forbidden(cells[i], cells[j], cells[k]):
                for a, b, c in ((i, j, k), (i, k, j), (j, k, i)):
                    self.completes[a][b] |= 1 << c
                    self.completes[b][a] |= 1 << c

    def run(self) -> bool:
        try:
            self._dfs(0, 0, (1 << len(self.cells)) - 1)
        except SearchInterrupted:
            return False
        return True

    def _dfs(self, chosen: int, count: int, allowed: int):
        if count > self.best:
            self.best = count
            self.best_mask = chosen
        if not allowed or count + popcount(allowed) <= self.best:
            return
        if not self.meter.tick():
            raise SearchInterrupted
        low = allowed & -allowed
        v = low.bit_length() - 1
        excluded = 0
        for j in iter_bits(chosen):
            excluded |= self.completes[v][j]
        self._dfs(chosen | low, count + 1, (allowed ^ low) & ~excluded)
        self._dfs(chosen, count, allowed ^ low)


def prek_max(n: int, budget: Optional[SearchBudget] = None) -> SearchReport:
    """
    Exact maximum size of a subset of [n]^2 with no forbidden triple.

    The witness is returned as a family of pairs with s = 1, which every set
    of distinct pairs satisfies.

    Args:
        n: Grid side, 1 <= n <= PREK_MAX_N
        budget: Node and time limits

    Returns:
        SearchReport
    """
    if not 1 <= n <= PREK_MAX_N:
        raise InvalidInputError(f"n must lie in [1, {PREK_MAX_N}] for an exact answer, got {n}")
    started = time.monotonic()
    cells = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    seed = sorted(prek_sharp(n)) if n >= 2 else [(1, 1)]

    meter = BudgetMeter(budget or SearchBudget())
    search = _PrekSearch(cells, meter, len(seed))
    complete = search.run()

    found = seed if search.best_mask is None else [cells[i] for i in iter_bits(search.best_mask)]
    logger.info(f"[SEARCH] preK n={n}: {len(found)} (proven={complete}) in {meter.nodes} nodes")
    witness = TupleFamily(Box((n, n)), 1, Mode.COMPARABLE, tuple(sorted(found)))
    return SearchReport(
        optimum=len(found),
        witness=witness,
        proven_optimal=complete,
        nodes_explored=meter.nodes,
        wall_time=time.monotonic() - started,
        upper_bound=len(found) if complete else n * n,
    )
