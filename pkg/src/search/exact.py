"""
EXACT SEARCH Module: Longest s-increasing sequences and largest s-comparable sets.

Both searches enumerate every tuple of the box, encode vertex sets as Python
integer bitsets, and prune with the pigeonhole bound over coordinate
projections and a greedy coloring bound. Incumbents are seeded from the
explicit constructions so the search only has to beat them.
"""

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from src.config import LOG_EVERY_NODES, SEARCH_MEMO_LIMIT
from src.constructions.gallery import family_fixtures
from src.constructions.generators import base_interleave
from src.core.errors import InvalidInputError
from src.core.tuples import (
    Box,
    Mode,
    TupleFamily,
    TupleR,
    acyclic,
    less_matrix,
    pigeonhole_bound,
    topological_order,
)
from src.search.bitsets import (
    CliqueSearch,
    SearchInterrupted,
    class_bound,
    color_bound,
    iter_bits,
    projection_classes,
)
from src.search.report import BudgetMeter, SearchBudget, SearchReport

# Interleave seeds are skipped above this many tuples
MAX_SEED_TUPLES = 20_000

# Boxes with more tuples than this are refused by the exact searches
MAX_EXACT_TUPLES = 4096


# ========================================================================
# BOUNDS AND SYMMETRY
# ========================================================================


def easy_bound(n: int) -> int:
    """Size bound for 2-comparable triple sets in [n]^3: 3n^2/4, or (3n^2 + 2n + 3)/4 for odd n."""
    if n % 2 == 0:
        return 3 * n * n // 4
    return (3 * n * n + 2 * n + 3) // 4


def box_symmetries(box: Box, with_reversal: bool = True) -> List[Callable[[TupleR], TupleR]]:
    """
    Maps of the box onto itself that preserve s-less.

    Coordinate permutations that keep the dimensions in place, optionally
    composed with the reversal x -> n + 1 - x in every coordinate.
    """
    dims = box.dims
    perms = [
        perm
        for perm in itertools.permutations(range(box.arity))
        if all(dims[perm[i]] == dims[i] for i in range(box.arity))
    ]
    maps = []
    for perm in perms:
        maps.append(lambda t, p=perm: tuple(t[i] for i in p))
        if with_reversal:
            maps.append(lambda t, p=perm: tuple(dims[k] + 1 - t[i] for k, i in enumerate(p)))
    return maps


def orbit_representatives(tuples: Sequence[TupleR], maps) -> Dict[TupleR, TupleR]:
    """Sends every tuple to the smallest tuple of its orbit."""
    return {t: min(f(t) for f in maps) for t in tuples}


# ========================================================================
# WARM START
# ========================================================================


def _interleave_base(min_dim: int, s: int) -> int:
    m = 1
    while (m + 1) ** s <= min_dim:
        m += 1
    return m


def warm_start(box: Box, s: int, mode: Mode) -> TupleFamily:
    """
    Largest known family that fits the box.

    Candidates are the interleave construction with the largest base that
    fits, every gallery fixture with matching arity and s that fits, and the
    single all-ones tuple.
    """
    candidates: List[Tuple[TupleR, ...]] = [((1,) * box.arity,)]

    m = _interleave_base(min(box.dims), s)
    if m > 1 and m**box.arity <= MAX_SEED_TUPLES:
        candidates.append(base_interleave(m, box.arity, s).tuples)

    for fixture in family_fixtures().values():
        if fixture.arity != box.arity or fixture.s != s or not fixture.box.fits_inside(box):
            continue
        if mode is Mode.COMPARABLE or fixture.mode is Mode.INCREASING:
            candidates.append(fixture.tuples)
        elif acyclic(fixture.tuples, s):
            candidates.append(tuple(topological_order(fixture.tuples, s)))

    best = max(candidates, key=len)
    return TupleFamily(box, s, mode, best)


# ========================================================================
# SHARED PREPARATION
# ========================================================================


def _row_masks(matrix: np.ndarray) -> List[int]:
    masks = []
    for row in matrix:
        mask = 0
        for j in np.flatnonzero(row):
            mask |= 1 << int(j)
        masks.append(mask)
    return masks


class _Instance:
    """Tuples of a box with their bitset relations."""

    def __init__(self, box: Box, s: int):
        if not 1 <= s <= box.arity:
            raise InvalidInputError(f"s must lie in [1, {box.arity}], got {s}")
        if box.size > MAX_EXACT_TUPLES:
            raise InvalidInputError(f"box {box} has {box.size} tuples, too many for exact search")
        self.box = box
        self.s = s
        self.tuples: List[TupleR] = list(box.tuples())
        self.index = {t: i for i, t in enumerate(self.tuples)}
        array = np.array(self.tuples, dtype=np.int64)
        less = less_matrix(array, s)
        self.succ = _row_masks(less)
        self.adj = _row_masks(less | less.T)
        dominated = (array[:, None, :] >= array[None, :, :]).all(axis=2)
        np.fill_diagonal(dominated, False)
        self.below = _row_masks(dominated)
        self.partitions = projection_classes(self.tuples, s)


# ========================================================================
# LONGEST S-INCREASING SEQUENCE
# ========================================================================


class _SequenceSearch:
    """
    Depth-first search over sequences extended only by coordinatewise-minimal
    candidates. A candidate set that has been fully explored is remembered
    with the best extension it can still offer.
    """

    def __init__(self, instance: _Instance, meter: BudgetMeter, lower_bound: int):
        self.inst = instance
        self.meter = meter
        self.best = lower_bound
        self.best_seq: Optional[List[int]] = None
        self.memo: Dict[int, int] = {}

    def minimal(self, candidates: int) -> List[int]:
        below = self.inst.below
        return [v for v in iter_bits(candidates) if not candidates & below[v]]

    def run(self, chosen: List[int], candidates: int) -> bool:
        try:
            self._dfs(list(chosen), candidates)
        except SearchInterrupted:
            return False
        return True

    def _remember(self, candidates: int, bound: int):
        if candidates in self.memo or len(self.memo) < SEARCH_MEMO_LIMIT:
            self.memo[candidates] = bound

    def _dfs(self, chosen: List[int], candidates: int):
        depth = len(chosen)
        if depth > self.best:
            self.best = depth
            self.best_seq = list(chosen)
        if not candidates:
            return
        if not self.meter.tick():
            raise SearchInterrupted
        if self.meter.nodes % LOG_EVERY_NODES == 0:
            logger.debug(f"[SEARCH] {self.meter.nodes} nodes, best {self.best}, memo {len(self.memo)}")

        bound = self.memo.get(candidates)
        if bound is None:
            bound = class_bound(candidates, self.inst.partitions)
            if depth + bound > self.best:
                bound = min(bound, color_bound(candidates, self.inst.adj))
        if depth + bound <= self.best:
            self._remember(candidates, bound)
            return

        succ = self.inst.succ
        for v in self.minimal(candidates):
            chosen.append(v)
            self._dfs(chosen, candidates & succ[v])
            chosen.pop()
        self._remember(candidates, min(bound, self.best - depth))


def _sequence_task(dims: Tuple[int, ...], s: int, second: int, lower_bound: int, budget: SearchBudget):
    instance = _Instance(Box(dims), s)
    meter = BudgetMeter(budget)
    search = _SequenceSearch(instance, meter, lower_bound)
    complete = search.run([0, second], instance.succ[0] & instance.succ[second])
    return search.best, search.best_seq, meter.nodes, complete


def max_increasing(
    box: Box,
    s: int,
    budget: Optional[SearchBudget] = None,
    threads: int = 1,
) -> SearchReport:
    """
    Longest s-increasing sequence in a box.

    The first tuple can always be taken to be all ones, and the second is
    taken up to the coordinate permutations that preserve the box.

    Args:
        box: Ambient box
        s: Comparability parameter
        budget: Node and time limits
        threads: Worker processes for the second-level branches

    Returns:
        SearchReport; proven_optimal is False when the budget ran out
    """
    budget = budget or SearchBudget()
    started = time.monotonic()
    instance = _Instance(box, s)
    seed = warm_start(box, s, Mode.INCREASING)
    bound = pigeonhole_bound(box, s)
    logger.info(f"[SEARCH] increasing {box} s={s}: seed {len(seed)}, pigeonhole {bound}")

    root = instance.succ[0]
    if len(seed) >= bound or not root:
        return SearchReport(len(seed), seed, True, 0, time.monotonic() - started, len(seed))

    search = _SequenceSearch(instance, BudgetMeter(budget), len(seed))
    reps = orbit_representatives(instance.tuples, box_symmetries(box, with_reversal=False))
    seconds = [v for v in search.minimal(root) if reps[instance.tuples[v]] == instance.tuples[v]]

    best, best_seq, nodes, complete = len(seed), None, 0, True
    if threads > 1 and len(seconds) > 1:
        share = budget.split(len(seconds))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_sequence_task, box.dims, s, v, len(seed), share) for v in seconds]
            for future in futures:
                task_best, task_seq, task_nodes, task_complete = future.result()
                nodes += task_nodes
                complete &= task_complete
                if task_seq is not None and task_best > best:
                    best, best_seq = task_best, task_seq
    else:
        for v in seconds:
            if not search.run([0, v], root & instance.succ[v]):
                complete = False
                break
        best, best_seq, nodes = search.best, search.best_seq, search.meter.nodes

    witness = seed if best_seq is None else TupleFamily(
        box, s, Mode.INCREASING, tuple(instance.tuples[i] for i in best_seq)
    )
    elapsed = time.monotonic() - started
    logger.info(f"[SEARCH] increasing {box} s={s}: {len(witness)} (proven={complete}) in {nodes} nodes")
    return SearchReport(
        optimum=len(witness),
        witness=witness,
        proven_optimal=complete,
        nodes_explored=nodes,
        wall_time=elapsed,
        upper_bound=len(witness) if complete else bound,
    )


# ========================================================================
# LARGEST S-COMPARABLE SET
# ========================================================================


def _clique_task(dims: Tuple[int, ...], s: int, rep: int, allowed: int, lower_bound: int, budget: SearchBudget):
    instance = _Instance(Box(dims), s)
    meter = BudgetMeter(budget)
    search = CliqueSearch(instance.adj, meter, lower_bound, instance.partitions)
    complete = search.run(instance.adj[rep] & allowed, [rep])
    return search.best, search.best_clique, meter.nodes, complete


def max_comparable(
    box: Box,
    s: int,
    budget: Optional[SearchBudget] = None,
    threads: int = 1,
) -> SearchReport:
    """
    Largest s-comparable set in a box, as a maximum clique of the
    comparability graph.

    The search is split by orbit representatives under the box symmetries:
    for each representative in turn it looks for the largest clique that
    contains it and avoids the orbits of earlier representatives.

    Args:
        box: Ambient box
        s: Comparability parameter
        budget: Node and time limits
        threads: Worker processes, one task per representative

    Returns:
        SearchReport; when the budget runs out the optimum is a lower bound
    """
    budget = budget or SearchBudget()
    started = time.monotonic()
    instance = _Instance(box, s)
    seed = warm_start(box, s, Mode.COMPARABLE)
    bound = pigeonhole_bound(box, s)
    if box.arity == 3 and s == 2 and len(set(box.dims)) == 1:
        bound = min(bound, easy_bound(box.dims[0]))
    logger.info(f"[SEARCH] comparable {box} s={s}: seed {len(seed)}, bound {bound}")

    if len(seed) >= bound:
        return SearchReport(len(seed), seed, True, 0, time.monotonic() - started, len(seed))

    reps_of = orbit_representatives(instance.tuples, box_symmetries(box))
    orbits: Dict[TupleR, int] = {}
    for t, rep in reps_of.items():
        orbits[rep] = orbits.get(rep, 0) | (1 << instance.index[t])
    reps = sorted(orbits)

    tasks = []
    allowed = (1 << len(instance.tuples)) - 1
    for rep in reps:
        tasks.append((instance.index[rep], allowed))
        allowed &= ~orbits[rep]

    best, best_clique, nodes, complete = len(seed), None, 0, True
    if threads > 1 and len(tasks) > 1:
        share = budget.split(len(tasks))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_clique_task, box.dims, s, rep, mask, len(seed), share) for rep, mask in tasks
            ]
            for future in futures:
                task_best, task_clique, task_nodes, task_complete = future.result()
                nodes += task_nodes
                complete &= task_complete
                if task_clique is not None and task_best > best:
                    best, best_clique = task_best, task_clique
    else:
        meter = BudgetMeter(budget)
        search = CliqueSearch(instance.adj, meter, len(seed), instance.partitions)
        for rep, mask in tasks:
            if not search.run(instance.adj[rep] & mask, [rep]):
                complete = False
                break
        best, best_clique, nodes = search.best, search.best_clique, meter.nodes

    witness = seed if best_clique is None else TupleFamily(
        box, s, Mode.COMPARABLE, tuple(sorted(instance.tuples[i] for i in best_clique))
    )
    elapsed = time.monotonic() - started
    logger.info(f"[SEARCH] comparable {box} s={s}: {len(witness)} (proven={complete}) in {nodes} nodes")
    return SearchReport(
        optimum=len(witness),
        witness=witness,
        proven_optimal=complete,
        nodes_explored=nodes,
        wall_time=elapsed,
        upper_bound=len(witness) if complete else bound,
    )
