"""
Labelled bipartite graphs: sides U and V, one label per edge.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

import networkx as nx

from src.core.errors import InvalidInputError
from src.core.grid import to_grid
from src.core.tuples import TupleFamily

Edge = Tuple[int, int]


@dataclass(frozen=True)
class LabelledBipartite:
    """Bipartite graph on U = [u_size], V = [v_size] with labelled edges."""

    u_size: int
    v_size: int
    edges: Dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u <= self.u_size and 1 <= v <= self.v_size):
                raise InvalidInputError(f"edge {(u, v)} lies outside {self.u_size}x{self.v_size}")

    @classmethod
    def from_triples(cls, u_size: int, v_size: int, triples: Iterable[Tuple[int, int, int]]) -> "LabelledBipartite":
        """Builds the graph from (u, v, label) triples; a second label on one edge is rejected."""
        edges: Dict[Edge, int] = {}
        for u, v, label in triples:
            if (u, v) in edges and edges[(u, v)] != label:
                raise InvalidInputError(f"edge {(u, v)} carries labels {edges[(u, v)]} and {label}")
            edges[(u, v)] = label
        return cls(u_size, v_size, edges)

    def labels(self) -> set:
        return set(self.edges.values())

    def to_networkx(self) -> nx.Graph:
        """Undirected graph on nodes ('u', i) and ('v', j); edge attribute 'label'."""
        graph = nx.Graph()
        graph.add_nodes_from(("u", i) for i in range(1, self.u_size + 1))
        graph.add_nodes_from(("v", j) for j in range(1, self.v_size + 1))
        for (u, v), label in sorted(self.edges.items()):
            graph.add_edge(("u", u), ("v", v), label=label)
        return graph

    def to_dict(self) -> Dict:
        return {
            "u_size": self.u_size,
            "v_size": self.v_size,
            "edges": [[u, v, label] for (u, v), label in sorted(self.edges.items())],
        }


def family_bipartite(family: TupleFamily, label_coord: int = 3) -> LabelledBipartite:
    """The two non-label coordinates become the sides, the label coordinate labels the edge."""
    grid = to_grid(family, label_coord)
    return LabelledBipartite(grid.cols, grid.rows, dict(grid.cells))
