"""
PATTERNS Module: Label patterns along simple paths of labelled bipartite graphs.

A pattern is a word over abstract letters such as "aba". A path follows it
when equal letters sit on equally labelled edges and distinct letters on
distinctly labelled edges.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from src.core.bipartite import LabelledBipartite
from src.core.errors import InvalidInputError

MAX_PATTERN_LENGTH = 6
CASE_PATTERNS = ("aa", "aba", "abcab")


@dataclass(frozen=True)
class PatternCertificate:
    pattern: str
    free: bool
    path: Optional[Tuple] = None
    labels: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.free

    def to_dict(self) -> Dict:
        return {
            "pattern": self.pattern,
            "free": self.free,
            "path": None if self.path is None else [list(node) for node in self.path],
            "labels": None if self.labels is None else list(self.labels),
        }


@dataclass
class CaseCheckResult:
    """Outcome of the exhaustive small-case check."""

    instances: int = 0
    counterexamples: List[LabelledBipartite] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _check_pattern(pattern: str):
    if not 1 <= len(pattern) <= MAX_PATTERN_LENGTH:
        raise InvalidInputError(f"pattern length must lie in [1, {MAX_PATTERN_LENGTH}], got '{pattern}'")


def _search(graph: nx.Graph, pattern: str) -> Optional[Tuple[List, List[int]]]:
    path: List = []
    labels: List[int] = []
    assigned: Dict[str, int] = {}

    def extend(node) -> bool:
        if len(labels) == len(pattern):
            return True
        letter = pattern[len(labels)]
        for nxt in sorted(graph.adj[node]):
            if nxt in path:
                continue
            label = graph.edges[node, nxt]["label"]
            fresh = letter not in assigned
            if fresh:
                if label in assigned.values():
                    continue
                assigned[letter] = label
            elif assigned[letter] != label:
                continue
            path.append(nxt)
            labels.append(label)
            if extend(nxt):
                return True
            path.pop()
            labels.pop()
            if fresh:
                del assigned[letter]
        return False

    for start in sorted(graph.nodes):
        path.append(start)
        if extend(start):
            return path, labels
        path.pop()
    return None


def pattern_free(g: LabelledBipartite, pattern: str) -> PatternCertificate:
    """
    Looks for a simple path whose edge labels follow the pattern.

    Args:
        g: Labelled bipartite graph
        pattern: Word of at most six letters, e.g. "abcab"

    Returns:
        PatternCertificate; `path` and `labels` hold the first path found
    """
    _check_pattern(pattern)
    found = _search(g.to_networkx(), pattern)
    if found is None:
        return PatternCertificate(pattern, True)
    path, labels = found
    return PatternCertificate(pattern, False, tuple(path), tuple(labels))


def _restricted_growth(length: int, blocks: int) -> Iterator[Tuple[int, ...]]:
    """Label sequences 1.. that use exactly `blocks` labels, each first seen in order."""

    def grow(prefix: List[int], top: int):
        if len(prefix) == length:
            if top == blocks:
                yield tuple(prefix)
            return
        for label in range(1, min(top + 1, blocks) + 1):
            prefix.append(label)
            yield from grow(prefix, max(top, label))
            prefix.pop()

    yield from grow([], 0)


def five_edge_case_check(max_total: int = 9, edge_count: int = 5, patterns: Sequence[str] = CASE_PATTERNS) -> CaseCheckResult:
    """
    Exhaustive check that small labelled bipartite graphs contain a pattern.

    Enumerates every graph with `edge_count` distinct edges on sides [p] and
    [q] (p <= q, every vertex used) and every labelling using exactly L
    labels, with p + q + L <= max_total, and records the instances that
    follow none of the patterns.
    """
    result = CaseCheckResult()
    for p in range(1, max_total):
        for q in range(p, max_total - p):
            cells = list(itertools.product(range(1, p + 1), range(1, q + 1)))
            for edges in itertools.combinations(cells, edge_count):
                if {u for u, _ in edges} != set(range(1, p + 1)) or {v for _, v in edges} != set(range(1, q + 1)):
                    continue
                for blocks in range(1, max_total - p - q + 1):
                    for labelling in _restricted_growth(edge_count, blocks):
                        g = LabelledBipartite(p, q, dict(zip(edges, labelling)))
                        graph = g.to_networkx()
                        result.instances += 1
                        if all(_search(graph, pattern) is None for pattern in patterns):
                            result.counterexamples.append(g)
    logger.info(f"[HYPER] case check: {result.instances} instances, {len(result.counterexamples)} without a pattern")
    return result
