"""
DECOMPOSITION Module: Label merging and block certificates.

A triple family, drawn as a grid with one coordinate as the label, is
decomposable when the grid splits into rectangles R_i x S_i and the labels
into classes T_i such that every label lives in a single rectangle.

Two labels are forced into the same class when some row holds both and some
column holds both. Merging until nothing changes decides decomposability;
when at least two classes survive, the rectangles are built by cutting the
grid along whole rows or columns that no class crosses, and the result is
checked before it is returned.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Set, Tuple

from loguru import logger
from networkx.utils import UnionFind

from src.core.errors import CertificateError
from src.core.grid import GridLabelling, render_ascii, to_grid
from src.core.tuples import TupleFamily

DECOMPOSABLE = "decomposable"
INDECOMPOSABLE = "indecomposable"
TRIVIAL = "trivially-indecomposable"

_BLOCK_MARKS = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Block:
    """Rectangle xs x ys of the grid owning the labels in `labels`."""

    xs: Tuple[int, ...]
    ys: Tuple[int, ...]
    labels: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {"xs": list(self.xs), "ys": list(self.ys), "labels": list(self.labels)}


@dataclass(frozen=True)
class DecompositionResult:
    label_coord: int
    status: str
    classes: Tuple[Tuple[int, ...], ...]
    blocks: Tuple[Block, ...] = ()

    @property
    def decomposable(self) -> bool:
        return self.status == DECOMPOSABLE

    def to_dict(self) -> Dict:
        return {
            "label_coord": self.label_coord,
            "status": self.status,
            "decomposable": self.decomposable,
            "classes": [list(c) for c in self.classes],
            "blocks": [b.to_dict() for b in self.blocks],
        }


@dataclass(frozen=True)
class DecompositionSummary:
    """The three label coordinates checked together."""

    results: Tuple[DecompositionResult, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        statuses = {r.status for r in self.results}
        if DECOMPOSABLE in statuses:
            return DECOMPOSABLE
        if statuses == {TRIVIAL}:
            return TRIVIAL
        return INDECOMPOSABLE

    def to_dict(self) -> Dict:
        return {"verdict": self.verdict, "results": [r.to_dict() for r in self.results]}


# ========================================================================
# MERGING
# ========================================================================


def _co_occurring(lines: Sequence[Set[int]], uf: UnionFind) -> Set[Tuple[int, int]]:
    pairs = set()
    for labels in lines:
        roots = sorted({uf[label] for label in labels})
        pairs.update(combinations(roots, 2))
    return pairs


def merge_labels(grid: GridLabelling) -> Tuple[Tuple[int, ...], ...]:
    """
    Merges label classes that share a row and share a column, to a fixpoint.

    Returns:
        Classes as sorted label tuples, ordered by smallest label
    """
    uf = UnionFind(grid.labels())
    rows = [set(grid.row(y).values()) for y in range(1, grid.rows + 1)]
    columns = [set(grid.column(x).values()) for x in range(1, grid.cols + 1)]
    while True:
        both = _co_occurring(rows, uf) & _co_occurring(columns, uf)
        if not both:
            break
        for a, b in sorted(both):
            uf.union(a, b)
    return tuple(sorted(tuple(sorted(c)) for c in uf.to_sets()))


# ========================================================================
# BLOCKS
# ========================================================================


def _groups(keys: Sequence[int], occupied: Dict[int, Set[int]]) -> List[List[int]]:
    """
    Groups lines that share a class; empty lines join the first group.

    Args:
        keys: Line indices of the region
        occupied: Line index -> classes present on it
    """
    uf = UnionFind(keys)
    owner: Dict[int, int] = {}
    for key in keys:
        for cls in occupied.get(key, ()):
            if cls in owner:
                uf.union(owner[cls], key)
            else:
                owner[cls] = key
    filled = [sorted(g) for g in uf.to_sets() if any(occupied.get(k) for k in g)]
    filled.sort()
    empty = [k for k in keys if not occupied.get(k)]
    if filled:
        filled[0] = sorted(filled[0] + empty)
    return filled


def _split(grid: GridLabelling, class_of: Dict[int, int], xs: List[int], ys: List[int]) -> List[Block]:
    x_set, y_set = set(xs), set(ys)
    cells = {(x, y): label for (x, y), label in grid.cells.items() if x in x_set and y in y_set}
    classes = {class_of[label] for label in cells.values()}
    if len(classes) <= 1:
        return [Block(tuple(xs), tuple(ys), tuple(sorted(set(cells.values()))))]

    by_column: Dict[int, Set[int]] = {}
    by_row: Dict[int, Set[int]] = {}
    for (x, y), label in cells.items():
        by_column.setdefault(x, set()).add(class_of[label])
        by_row.setdefault(y, set()).add(class_of[label])

    column_groups = _groups(xs, by_column)
    if len(column_groups) > 1:
        return [block for group in column_groups for block in _split(grid, class_of, group, ys)]
    row_groups = _groups(ys, by_row)
    if len(row_groups) > 1:
        return [block for group in row_groups for block in _split(grid, class_of, xs, group)]
    raise CertificateError(
        f"label classes {sorted(classes)} survive merging but no row or column cut separates them "
        f"in region x={xs}, y={ys}"
    )


def _validate_blocks(grid: GridLabelling, classes: Sequence[Tuple[int, ...]], blocks: Sequence[Block]):
    covered: Set[Tuple[int, int]] = set()
    for block in blocks:
        area = {(x, y) for x in block.xs for y in block.ys}
        if covered & area:
            raise CertificateError(f"block {block} overlaps an earlier block")
        covered |= area
    if covered != {(x, y) for x in range(1, grid.cols + 1) for y in range(1, grid.rows + 1)}:
        raise CertificateError("blocks do not cover the grid")

    owner: Dict[int, int] = {}
    for i, block in enumerate(blocks):
        area_labels = {grid.cells[(x, y)] for x in block.xs for y in block.ys if (x, y) in grid.cells}
        if area_labels != set(block.labels):
            raise CertificateError(f"block {i} claims labels {block.labels} but holds {sorted(area_labels)}")
        for label in block.labels:
            if owner.setdefault(label, i) != i:
                raise CertificateError(f"label {label} occurs in blocks {owner[label]} and {i}")

    flat = [label for c in classes for label in c]
    if sorted(flat) != grid.labels() or len(set(flat)) != len(flat):
        raise CertificateError("label classes do not partition the labels")

    total = math.fsum(math.sqrt(len(b.xs) * len(b.ys) * len(b.labels)) for b in blocks)
    bound = math.sqrt(grid.cols * grid.rows * grid.label_bound)
    if total > bound * (1 + 1e-12):
        raise CertificateError(f"block sizes break the Cauchy-Schwarz bound: {total} > {bound}")


# ========================================================================
# PUBLIC ENTRY POINTS
# ========================================================================


def decompose_grid(grid: GridLabelling) -> DecompositionResult:
    """Decides decomposability of a grid labelling and certifies a positive answer."""
    classes = merge_labels(grid)
    if grid.rows * grid.cols <= 1 or len(grid.labels()) <= 1:
        return DecompositionResult(grid.label_coord, TRIVIAL, classes)
    if len(classes) < 2:
        return DecompositionResult(grid.label_coord, INDECOMPOSABLE, classes)

    class_of = {label: i for i, c in enumerate(classes) for label in c}
    blocks = _split(grid, class_of, list(range(1, grid.cols + 1)), list(range(1, grid.rows + 1)))
    _validate_blocks(grid, classes, blocks)
    logger.debug(f"[DECOMPOSE] label coordinate {grid.label_coord}: {len(classes)} classes, {len(blocks)} blocks")
    return DecompositionResult(grid.label_coord, DECOMPOSABLE, classes, tuple(blocks))


def decompose_check(t: TupleFamily, label_coord: int = 3) -> DecompositionResult:
    """
    Runs the merge test with one coordinate as the label.

    Args:
        t: 2-comparable triple family
        label_coord: 1, 2 or 3

    Returns:
        DecompositionResult; blocks are present only when decomposable

    Raises:
        CertificateError: Classes survive merging but the grid has no block cut
    """
    return decompose_grid(to_grid(t, label_coord))


def decompose_all(t: TupleFamily) -> DecompositionSummary:
    """
    Runs the merge test once per label coordinate.

    Args:
        t: 2-comparable triple family

    Returns:
        DecompositionSummary over coordinates 1, 2 and 3

    Raises:
        CertificateError: For some coordinate several classes survive merging
            but no row or column cut separates them (see the nonproduct_9 fixture)
    """
    results = tuple(decompose_check(t, coord) for coord in (1, 2, 3))
    logger.info(f"[DECOMPOSE] {len(t)} triples: {', '.join(r.status for r in results)}")
    return DecompositionSummary(results)


def render_blocks(grid: GridLabelling, result: DecompositionResult) -> str:
    """Label grid on the left, block letters on the right, top row first."""
    labels = render_ascii(grid).splitlines()
    mark: Dict[Tuple[int, int], str] = {}
    for i, block in enumerate(result.blocks):
        for x in block.xs:
            for y in block.ys:
                mark[(x, y)] = _BLOCK_MARKS[i % len(_BLOCK_MARKS)]
    overlay = [
        "".join(mark.get((x, y), "?") for x in range(1, grid.cols + 1))
        for y in range(grid.rows, 0, -1)
    ]
    return "\n".join(f"{left} | {right}" for left, right in zip(labels, overlay))
