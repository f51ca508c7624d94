"""
TUPLES Module: Boxes, tuple families and the s-less relation.

This module contains the domain types every other package builds on:
- Box: the ambient grid [n1] x ... x [nr]
- TupleFamily: an ordered collection of r-tuples with parameter s
- Predicates: less_s, comparable_pair, validate, acyclic
- Canonical JSON conversion

Coordinates are 1-based throughout.
"""

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from loguru import logger

from src.config import MAX_STORED_FAILURES
from src.core.errors import InvalidInputError

TupleR = Tuple[int, ...]


# ========================================================================
# DOMAIN TYPES
# ========================================================================


class Mode(str, Enum):
    """How a family is meant to be read."""

    INCREASING = "increasing"
    COMPARABLE = "comparable"


class FailureKind(str, Enum):
    """Kinds of validation failure."""

    PAIR_INCOMPARABLE = "pair-incomparable"
    ORDER_VIOLATION = "order-violation"
    CYCLE = "cycle"
    DUPLICATE = "duplicate"


@dataclass(frozen=True)
class Box:
    """The ambient box [n1] x [n2] x ... x [nr]."""

    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if len(dims) < 1:
            raise InvalidInputError("a box needs at least one axis")
        if any(n < 1 for n in dims):
            raise InvalidInputError(f"box dimensions must be positive, got {dims}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def cube(cls, n: int, r: int) -> "Box":
        """Returns [n]^r."""
        return cls((n,) * r)

    @classmethod
    def parse(cls, text: str) -> "Box":
        """Parses a comma separated list such as '4,4,4'."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as e:
            raise InvalidInputError(f"cannot parse box '{text}': {e}") from e

    @property
    def arity(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def contains(self, t: Sequence[int]) -> bool:
        return len(t) == self.arity and all(1 <= c <= n for c, n in zip(t, self.dims))

    def fits_inside(self, other: "Box") -> bool:
        """True when every tuple of this box is also a tuple of `other`."""
        return self.arity == other.arity and all(a <= b for a, b in zip(self.dims, other.dims))

    def tuples(self) -> Iterator[TupleR]:
        """All tuples of the box in lexicographic order."""
        return itertools.product(*(range(1, n + 1) for n in self.dims))

    def __str__(self) -> str:
        return "x".join(f"[{n}]" for n in self.dims)


@dataclass(frozen=True)
class TupleFamily:
    """
    An ordered collection of r-tuples inside a box.

    Order matters only when mode is INCREASING. Duplicates are accepted on
    construction so that `validate` can report them.
    """

    box: Box
    s: int
    mode: Mode
    tuples: Tuple[TupleR, ...]

    def __post_init__(self):
        tuples = tuple(tuple(int(c) for c in t) for t in self.tuples)
        object.__setattr__(self, "tuples", tuples)
        object.__setattr__(self, "mode", Mode(self.mode))
        r = self.box.arity
        if not 1 <= self.s <= r:
            raise InvalidInputError(f"s must lie in [1, {r}], got {self.s}")
        for t in tuples:
            if len(t) != r:
                raise InvalidInputError(f"tuple {t} has arity {len(t)}, box has arity {r}")
            if not self.box.contains(t):
                raise InvalidInputError(f"tuple {t} lies outside the box {self.box}")

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> Iterator[TupleR]:
        return iter(self.tuples)

    @property
    def arity(self) -> int:
        return self.box.arity

    def as_array(self) -> np.ndarray:
        """Tuples as an (m, r) integer array."""
        return np.array(self.tuples, dtype=np.int64).reshape(len(self.tuples), self.arity)

    def with_tuples(self, tuples: Iterable[Sequence[int]]) -> "TupleFamily":
        return TupleFamily(self.box, self.s, self.mode, tuple(tuple(t) for t in tuples))

    def with_mode(self, mode: Mode) -> "TupleFamily":
        return TupleFamily(self.box, self.s, mode, self.tuples)

    def reversed(self) -> "TupleFamily":
        return self.with_tuples(reversed(self.tuples))

    def to_dict(self) -> Dict:
        """Canonical JSON-ready dictionary."""
        return {
            "dims": list(self.box.dims),
            "s": self.s,
            "mode": self.mode.value,
            "tuples": [list(t) for t in self.tuples],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "TupleFamily":
        try:
            return cls(
                box=Box(tuple(data["dims"])),
                s=int(data["s"]),
                mode=Mode(data["mode"]),
                tuples=tuple(tuple(t) for t in data["tuples"]),
            )
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"malformed tuple family document: {e}") from e


@dataclass(frozen=True)
class Failure:
    kind: FailureKind
    indices: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {"kind": self.kind.value, "indices": list(self.indices)}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of `validate`. Stored failures are capped; the count is exact."""

    valid: bool
    failures: Tuple[Failure, ...] = field(default_factory=tuple)
    failure_count: int = 0

    def kinds(self) -> set:
        return {f.kind for f in self.failures}

    def to_dict(self) -> Dict:
        return {
            "valid": self.valid,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
        }


# ========================================================================
# PAIR PREDICATES
# ========================================================================


def _check_pair(a: Sequence[int], b: Sequence[int], s: int):
    if len(a) != len(b):
        raise InvalidInputError(f"arity mismatch: {tuple(a)} vs {tuple(b)}")
    if not 1 <= s <= len(a):
        raise InvalidInputError(f"s must lie in [1, {len(a)}], got {s}")


def less_s(a: Sequence[int], b: Sequence[int], s: int) -> bool:
    """
    Tests whether a is s-less than b.

    Args:
        a: First tuple
        b: Second tuple
        s: Number of coordinates that must strictly increase

    Returns:
        True iff a_i < b_i for at least s coordinates
    """
    _check_pair(a, b, s)
    return sum(1 for x, y in zip(a, b) if x < y) >= s


def comparable_pair(a: Sequence[int], b: Sequence[int], s: int) -> bool:
    """True iff one of the two tuples is s-less than the other."""
    return less_s(a, b, s) or less_s(b, a, s)


def weakly_comparable(a: Sequence[int], b: Sequence[int]) -> bool:
    """Coordinatewise comparability (a <= b or b <= a in every coordinate)."""
    if len(a) != len(b):
        raise InvalidInputError(f"arity mismatch: {tuple(a)} vs {tuple(b)}")
    return all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b))


def less_matrix(array: np.ndarray, s: int) -> np.ndarray:
    """
    Pairwise s-less matrix.

    Args:
        array: (m, r) integer array of tuples
        s: Comparability parameter

    Returns:
        Boolean (m, m) matrix L with L[i, j] = (row i is s-less than row j)
    """
    if array.size == 0:
        return np.zeros((len(array), len(array)), dtype=bool)
    counts = (array[:, None, :] < array[None, :, :]).sum(axis=2)
    return counts >= s


# ========================================================================
# FAMILY VALIDATION
# ========================================================================


def _digraph(tuples: Sequence[TupleR], s: int) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(tuples)))
    if tuples:
        matrix = less_matrix(np.array(tuples, dtype=np.int64), s)
        graph.add_edges_from(zip(*np.nonzero(matrix)))
    return graph


def find_cycle(tuples: Iterable[Sequence[int]], s: int) -> Optional[List[TupleR]]:
    """
    Finds a directed cycle of the s-less digraph.

    Args:
        tuples: Distinct tuples of equal arity
        s: Comparability parameter

    Returns:
        The tuples along a cycle, or None when the digraph is acyclic
    """
    items = sorted({tuple(t) for t in tuples})
    if len({len(t) for t in items}) > 1:
        raise InvalidInputError("all tuples must share one arity")
    try:
        edges = nx.find_cycle(_digraph(items, s))
    except nx.NetworkXNoCycle:
        return None
    return [items[u] for u, _ in edges]


def acyclic(tuples: Iterable[Sequence[int]], s: int) -> bool:
    """True iff the digraph with an edge a -> b whenever a is s-less than b has no cycle."""
    return find_cycle(tuples, s) is None


def topological_order(tuples: Iterable[Sequence[int]], s: int) -> List[TupleR]:
    """
    Orders an acyclic tuple set along its s-less digraph.

    For an s-comparable set the result is an s-increasing sequence.
    """
    items = sorted({tuple(t) for t in tuples})
    graph = _digraph(items, s)
    if not nx.is_directed_acyclic_graph(graph):
        raise InvalidInputError("tuple set contains a directed cycle and cannot be ordered")
    return [items[i] for i in nx.lexicographical_topological_sort(graph)]


def validate(family: TupleFamily) -> ValidationReport:
    """
    Checks a family against its advertised mode.

    Args:
        family: Family to check

    Returns:
        ValidationReport whose boolean is exact and whose stored witnesses
        are capped at MAX_STORED_FAILURES
    """
    failures: List[Failure] = []
    count = 0

    def record(kind: FailureKind, indices: Tuple[int, ...]):
        nonlocal count
        count += 1
        if len(failures) < MAX_STORED_FAILURES:
            failures.append(Failure(kind, indices))

    first_seen: Dict[TupleR, int] = {}
    duplicate_pairs = set()
    for j, t in enumerate(family.tuples):
        if t in first_seen:
            duplicate_pairs.add((first_seen[t], j))
            record(FailureKind.DUPLICATE, (first_seen[t], j))
        else:
            first_seen[t] = j

    m = len(family)
    if m > 1:
        matrix = less_matrix(family.as_array(), family.s)
        upper = np.triu(np.ones((m, m), dtype=bool), k=1)
        if family.mode is Mode.INCREASING:
            bad = upper & ~matrix
            kind = FailureKind.ORDER_VIOLATION
        else:
            bad = upper & ~matrix & ~matrix.T
            kind = FailureKind.PAIR_INCOMPARABLE
        order_failures = False
        for i, j in zip(*np.nonzero(bad)):
            if (int(i), int(j)) not in duplicate_pairs:
                order_failures = True
                record(kind, (int(i), int(j)))

        # A cycle means no reordering can repair the sequence; only meaningful
        # when s-less is antisymmetric.
        if family.mode is Mode.INCREASING and order_failures and 2 * family.s > family.arity:
            cycle = find_cycle(first_seen.keys(), family.s)
            if cycle is not None:
                record(FailureKind.CYCLE, tuple(first_seen[t] for t in cycle))

    if count:
        logger.debug(f"[CORE] validation found {count} failure(s) in a family of {m}")
    return ValidationReport(valid=count == 0, failures=tuple(failures), failure_count=count)


def pigeonhole_bound(box: Box, s: int) -> int:
    """
    Upper bound on any s-comparable family in the box.

    Two tuples agreeing on r - s + 1 coordinates cannot be s-comparable, so
    the bound is the smallest product of r - s + 1 box dimensions.
    """
    k = box.arity - s + 1
    return min(math.prod(combo) for combo in itertools.combinations(box.dims, k))
