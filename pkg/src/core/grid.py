"""
GRID Module: The planar picture of a triple family.

A triple is drawn as a point of a two dimensional grid labelled by its
remaining coordinate. The two non-label coordinates, in their natural order,
become the column (x) and row (y) of the cell.

Rendering convention: columns run left to right by ascending x, rows run top
to bottom by descending y, empty cells print as ".".
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.core.errors import CellCollisionError, InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily, TupleR

Cell = Tuple[int, int]


# ========================================================================
# DOMAIN TYPES
# ========================================================================


def free_axes(label_coord: int) -> Tuple[int, int]:
    """0-based indices of the two coordinates that are not the label."""
    if label_coord not in (1, 2, 3):
        raise InvalidInputError(f"label coordinate must be 1, 2 or 3, got {label_coord}")
    axes = [i for i in range(3) if i != label_coord - 1]
    return axes[0], axes[1]


@dataclass(frozen=True)
class GridLabelling:
    """Partial labelling of a cols x rows grid by labels in [label_bound]."""

    rows: int
    cols: int
    label_bound: int
    label_coord: int
    cells: Dict[Cell, int] = field(default_factory=dict)

    def __post_init__(self):
        free_axes(self.label_coord)
        for (x, y), label in self.cells.items():
            if not (1 <= x <= self.cols and 1 <= y <= self.rows):
                raise InvalidInputError(f"cell {(x, y)} lies outside a {self.cols}x{self.rows} grid")
            if not 1 <= label <= self.label_bound:
                raise InvalidInputError(f"label {label} lies outside [1, {self.label_bound}]")

    def labels(self) -> List[int]:
        return sorted(set(self.cells.values()))

    def label_set(self, c: int) -> FrozenSet[Cell]:
        return frozenset(cell for cell, label in self.cells.items() if label == c)

    def row(self, y: int) -> Dict[int, int]:
        """Labelled cells of row y as x -> label."""
        return {x: label for (x, yy), label in self.cells.items() if yy == y}

    def column(self, x: int) -> Dict[int, int]:
        """Labelled cells of column x as y -> label."""
        return {y: label for (xx, y), label in self.cells.items() if xx == x}

    def to_dict(self) -> Dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "label_bound": self.label_bound,
            "label_coord": self.label_coord,
            "cells": [[x, y, label] for (x, y), label in sorted(self.cells.items())],
        }


@dataclass(frozen=True)
class LabelGeometry:
    """Label set S(c), its completion P(c) and the upper/lower completions."""

    label: int
    label_set: FrozenSet[Cell]
    completion: FrozenSet[Cell]
    upper_completion: FrozenSet[Cell]
    lower_completion: FrozenSet[Cell]


@dataclass(frozen=True)
class ConditionResult:
    name: str
    holds: bool
    witness: Tuple[Cell, ...] = ()


@dataclass(frozen=True)
class GridConditionsReport:
    c1: ConditionResult
    c2: ConditionResult
    c3: ConditionResult
    c3_prime: ConditionResult
    c4: ConditionResult

    def as_dict(self) -> Dict[str, ConditionResult]:
        return {r.name: r for r in (self.c1, self.c2, self.c3, self.c3_prime, self.c4)}

    def to_dict(self) -> Dict:
        return {
            name: {"holds": r.holds, "witness": [list(c) for c in r.witness]}
            for name, r in self.as_dict().items()
        }


# ========================================================================
# CONVERSIONS
# ========================================================================


def to_grid(family: TupleFamily, label_coord: int = 3) -> GridLabelling:
    """
    Draws a triple family as a labelled grid.

    Args:
        family: Family of triples
        label_coord: Coordinate (1, 2 or 3) used as the label

    Returns:
        GridLabelling with one labelled cell per triple

    Raises:
        CellCollisionError: Two triples share their non-label coordinates
    """
    if family.arity != 3:
        raise InvalidInputError(f"grids need triples, family has arity {family.arity}")
    ax, ay = free_axes(label_coord)
    dims = family.box.dims
    cells: Dict[Cell, int] = {}
    owner: Dict[Cell, TupleR] = {}
    for t in family.tuples:
        cell = (t[ax], t[ay])
        if cell in cells:
            raise CellCollisionError(owner[cell], t, cell)
        cells[cell] = t[label_coord - 1]
        owner[cell] = t
    return GridLabelling(
        rows=dims[ay],
        cols=dims[ax],
        label_bound=dims[label_coord - 1],
        label_coord=label_coord,
        cells=cells,
    )


def from_grid(grid: GridLabelling, s: int = 2) -> TupleFamily:
    """Inverse of `to_grid`: rebuilds the triples, sorted lexicographically."""
    ax, ay = free_axes(grid.label_coord)
    lc = grid.label_coord - 1
    dims = [0, 0, 0]
    dims[ax], dims[ay], dims[lc] = grid.cols, grid.rows, grid.label_bound
    tuples = []
    for (x, y), label in grid.cells.items():
        t = [0, 0, 0]
        t[ax], t[ay], t[lc] = x, y, label
        tuples.append(tuple(t))
    return TupleFamily(Box(tuple(dims)), s, Mode.COMPARABLE, tuple(sorted(tuples)))


def render_ascii(grid: GridLabelling) -> str:
    """Renders the grid; labels above 9 switch to space separated tokens."""
    sep = "" if grid.label_bound <= 9 else " "
    width = max(1, len(str(grid.label_bound))) if sep else 1
    lines = []
    for y in range(grid.rows, 0, -1):
        tokens = [str(grid.cells.get((x, y), ".")).rjust(width) for x in range(1, grid.cols + 1)]
        lines.append(sep.join(tokens))
    return "\n".join(lines)


def parse_ascii(text: str, label_coord: int = 3, label_bound: Optional[int] = None) -> GridLabelling:
    """
    Parses a grid drawn with `render_ascii`.

    Args:
        text: Grid rows, top row first
        label_coord: Coordinate that the labels stand for
        label_bound: Size of the label axis (defaults to the largest label)

    Returns:
        GridLabelling
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise InvalidInputError("empty grid text")
    rows = [line.split() if any(ch.isspace() for ch in line) else list(line) for line in lines]
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise InvalidInputError(f"ragged grid rows with widths {sorted(widths)}")
    cols = widths.pop()
    height = len(rows)
    cells: Dict[Cell, int] = {}
    for i, tokens in enumerate(rows):
        y = height - i
        for x, token in enumerate(tokens, start=1):
            if token == ".":
                continue
            if not token.isdigit():
                raise InvalidInputError(f"unexpected grid token '{token}'")
            cells[(x, y)] = int(token)
    bound = label_bound if label_bound is not None else max(cells.values(), default=1)
    return GridLabelling(rows=height, cols=cols, label_bound=bound, label_coord=label_coord, cells=cells)


# ========================================================================
# LABEL GEOMETRY
# ========================================================================


def label_geometry(grid: GridLabelling, c: int) -> LabelGeometry:
    """
    Computes S(c), P(c) = rows(S) x cols(S), and the upper and lower completions.

    A cell of P(c) outside S(c) is in the upper completion when some c lies
    below it in its column and some c lies to its right in its row; it is in
    the lower completion when some c lies above it and some c to its left.

    Raises:
        InvalidInputError: c does not occur in the grid
    """
    label_set = grid.label_set(c)
    if not label_set:
        raise InvalidInputError(f"label {c} does not occur in the grid")
    xs = {x for x, _ in label_set}
    ys = {y for _, y in label_set}
    completion = frozenset(itertools.product(xs, ys))
    upper, lower = set(), set()
    for x, y in completion - label_set:
        in_column = [yy for xx, yy in label_set if xx == x]
        in_row = [xx for xx, yy in label_set if yy == y]
        if any(yy < y for yy in in_column) and any(xx > x for xx in in_row):
            upper.add((x, y))
        if any(yy > y for yy in in_column) and any(xx < x for xx in in_row):
            lower.add((x, y))
    return LabelGeometry(c, label_set, completion, frozenset(upper), frozenset(lower))


# ========================================================================
# GRID CONDITIONS
# ========================================================================


def _rows_and_columns_increase(grid: GridLabelling) -> ConditionResult:
    items = sorted(grid.cells.items())
    for (p, lp), (q, lq) in itertools.combinations(items, 2):
        same_row = p[1] == q[1]
        same_col = p[0] == q[0]
        if same_row and not (lp < lq if p[0] < q[0] else lq < lp):
            return ConditionResult("C1", False, (p, q))
        if same_col and not (lp < lq if p[1] < q[1] else lq < lp):
            return ConditionResult("C1", False, (p, q))
    return ConditionResult("C1", True)


def _label_sets_increase(grid: GridLabelling) -> ConditionResult:
    for c in grid.labels():
        for p, q in itertools.combinations(sorted(grid.label_set(c)), 2):
            if not ((p[0] < q[0] and p[1] < q[1]) or (q[0] < p[0] and q[1] < p[1])):
                return ConditionResult("C2", False, (p, q))
    return ConditionResult("C2", True)


def _no_row_column_label_share(grid: GridLabelling) -> ConditionResult:
    for (x, y) in sorted(grid.cells):
        row_labels = {label: xx for xx, label in grid.row(y).items() if xx != x}
        for yy, label in sorted(grid.column(x).items()):
            if yy != y and label in row_labels:
                return ConditionResult("C3", False, ((x, y), (row_labels[label], y), (x, yy)))
    return ConditionResult("C3", True)


def _no_cyclic_triangle(grid: GridLabelling) -> ConditionResult:
    # P=(a,b,c) and Q=(a',b',c') with a'>a, b'>b, c'<c, closed by a third
    # cell whose label lies strictly between and which sits either right of Q
    # and below P, or left of P and above Q.
    points = sorted((x, y, label) for (x, y), label in grid.cells.items())
    for p, q in itertools.permutations(points, 2):
        if not (q[0] > p[0] and q[1] > p[1] and q[2] < p[2]):
            continue
        for w in points:
            if not q[2] < w[2] < p[2]:
                continue
            if (w[0] > q[0] and w[1] < p[1]) or (w[0] < p[0] and w[1] > q[1]):
                return ConditionResult("C3'", False, (p[:2], q[:2], w[:2]))
    return ConditionResult("C3'", True)


def _completions_disjoint(grid: GridLabelling) -> ConditionResult:
    geometry = {c: label_geometry(grid, c) for c in grid.labels()}
    for c, d in itertools.product(geometry, repeat=2):
        common = geometry[c].upper_completion & geometry[d].lower_completion
        if common:
            return ConditionResult("C4", False, (min(common),))
    return ConditionResult("C4", True)


def grid_conditions(grid: GridLabelling) -> GridConditionsReport:
    """
    Evaluates the five grid conditions.

    C1: labels strictly increase along rows and up columns.
    C2: each label set is 2-increasing as a set of points.
    C3: no point in the row of a labelled cell shares a label with a point in its column.
    C3': no three cells form a cyclic triangle of the 2-less relation.
    C4: upper completions never meet lower completions.

    C1 and C2 together say the triples are 2-comparable; adding C3' says
    they can be ordered as a 2-increasing sequence.

    Returns:
        GridConditionsReport with a witness tuple of cells for each failure
    """
    return GridConditionsReport(
        c1=_rows_and_columns_increase(grid),
        c2=_label_sets_increase(grid),
        c3=_no_row_column_label_share(grid),
        c3_prime=_no_cyclic_triangle(grid),
        c4=_completions_disjoint(grid),
    )
