"""
Repeating-label cycles in labelled bipartite graphs.

A simple cycle of length 2k repeats when its label word has the form
c1 c2 ... ck c1 c2 ... ck. Families of 2-comparable triples never produce one.
"""

from typing import List, Optional, Tuple

import networkx as nx

from src.core.bipartite import LabelledBipartite
from src.core.errors import InvalidInputError


def _label_word(graph: nx.Graph, cycle: List) -> List[int]:
    return [graph.edges[cycle[i], cycle[(i + 1) % len(cycle)]]["label"] for i in range(len(cycle))]


def _is_repeating(word: List[int]) -> bool:
    half = len(word) // 2
    return len(word) % 2 == 0 and word[:half] == word[half:]


def find_repeating_cycle(g: LabelledBipartite, max_cycle_len: int) -> Optional[Tuple[List, List[int]]]:
    """
    Searches simple cycles up to a length bound for a twice repeated label word.

    Args:
        g: Labelled bipartite graph
        max_cycle_len: Even bound on the cycle length, at least 4

    Returns:
        (cycle nodes, label word) of the first repeating cycle, or None
    """
    if max_cycle_len < 4 or max_cycle_len % 2:
        raise InvalidInputError(f"cycle length bound must be an even integer >= 4, got {max_cycle_len}")
    graph = g.to_networkx()
    for cycle in nx.simple_cycles(graph, length_bound=max_cycle_len):
        word = _label_word(graph, cycle)
        # Rotations of a repeating word repeat too, so any starting point works.
        if _is_repeating(word):
            return cycle, word
    return None


def repeating_cycle_free(g: LabelledBipartite, max_cycle_len: int) -> bool:
    """True iff no simple cycle of length <= max_cycle_len has a repeating label word."""
    return find_repeating_cycle(g, max_cycle_len) is None
