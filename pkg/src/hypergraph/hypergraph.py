"""
HYPERGRAPH Module: Tripartite 3-uniform hypergraphs from triple families.

Each triple (x, y, z) is an edge on the vertices ('x', x), ('y', y) and
('z', z). A 2-comparable family gives a linear hypergraph, whose 2-shadow has
exactly one triangle per edge and which is (10,6)-free; a 2-increasing
family is even (9,5)-free.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from src.config import UV_FREE_MAX_NODES
from src.core.bipartite import LabelledBipartite
from src.core.errors import BudgetExhaustedError, InvalidInputError
from src.core.tuples import TupleFamily

Triple = Tuple[int, int, int]
Vertex = Tuple[str, int]
PARTS = ("x", "y", "z")


@dataclass(frozen=True)
class TripartiteHypergraph:
    """Edges (x, y, z) with x in [nX], y in [nY], z in [nZ]."""

    part_sizes: Tuple[int, int, int]
    edges: Tuple[Triple, ...] = ()

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.part_sizes)
        edges = tuple(tuple(int(c) for c in e) for e in self.edges)
        if len(sizes) != 3 or any(n < 1 for n in sizes):
            raise InvalidInputError(f"part sizes must be three positive integers, got {sizes}")
        for e in edges:
            if len(e) != 3 or not all(1 <= c <= n for c, n in zip(e, sizes)):
                raise InvalidInputError(f"edge {e} lies outside parts {sizes}")
        if len(set(edges)) != len(edges):
            raise InvalidInputError("hypergraph edges must be distinct")
        object.__setattr__(self, "part_sizes", sizes)
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.edges)

    @staticmethod
    def vertices(edge: Triple) -> Tuple[Vertex, Vertex, Vertex]:
        return tuple((part, c) for part, c in zip(PARTS, edge))

    def overlapping_pair(self) -> Optional[Tuple[Triple, Triple]]:
        """First pair of edges sharing two vertices, or None."""
        for e, f in itertools.combinations(self.edges, 2):
            if sum(a == b for a, b in zip(e, f)) >= 2:
                return e, f
        return None

    @property
    def is_linear(self) -> bool:
        return self.overlapping_pair() is None

    def to_dict(self) -> Dict:
        return {"part_sizes": list(self.part_sizes), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: Dict) -> "TripartiteHypergraph":
        try:
            return cls(tuple(data["part_sizes"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"malformed hypergraph document: {e}") from e


@dataclass(frozen=True)
class ShadowCount:
    edge_count: int
    triangle_count: int


@dataclass(frozen=True)
class FreenessCertificate:
    """
    Verdict of is_uv_free.

    `witness` lists the first v edges (in lexicographic index order) spanned
    by at most u vertices, when there is one.
    """

    u: int
    v: int
    free: bool
    witness: Optional[Tuple[Triple, ...]]
    nodes_explored: int

    def __bool__(self) -> bool:
        return self.free

    def to_dict(self) -> Dict:
        return {
            "u": self.u,
            "v": self.v,
            "free": self.free,
            "witness": None if self.witness is None else [list(e) for e in self.witness],
            "nodes_explored": self.nodes_explored,
        }


def to_hypergraph(t: TupleFamily) -> TripartiteHypergraph:
    """One edge per distinct triple of the family, in family order."""
    if t.arity != 3:
        raise InvalidInputError(f"hypergraphs need triples, got arity {t.arity}")
    edges = tuple(dict.fromkeys(t.tuples))
    h = TripartiteHypergraph(t.box.dims, edges)
    if not h.is_linear:
        logger.debug(f"[HYPER] edges {h.overlapping_pair()} share two vertices")
    return h


def from_bipartite(g: LabelledBipartite) -> TripartiteHypergraph:
    """Edge (u, v) with label w becomes the hyperedge (u, v, w)."""
    labels = g.labels()
    if labels and min(labels) < 1:
        raise InvalidInputError("labels must be positive integers to become vertices")
    top = max(labels, default=1)
    return TripartiteHypergraph((g.u_size, g.v_size, top), tuple((u, v, w) for (u, v), w in sorted(g.edges.items())))


def shadow_graph(h: TripartiteHypergraph) -> nx.Graph:
    """Graph of all vertex pairs covered by an edge."""
    graph = nx.Graph()
    for e in h.edges:
        graph.add_edges_from(itertools.combinations(h.vertices(e), 2))
    return graph


def shadow_triangles(h: TripartiteHypergraph) -> ShadowCount:
    """
    Counts triangles of the 2-shadow.

    Raises:
        InvalidInputError: if the hypergraph is not linear
    """
    pair = h.overlapping_pair()
    if pair is not None:
        raise InvalidInputError(f"shadow triangles need a linear hypergraph; {pair[0]} and {pair[1]} share two vertices")
    graph = shadow_graph(h)
    triangles = sum(nx.triangles(graph).values()) // 3
    return ShadowCount(edge_count=graph.number_of_edges(), triangle_count=triangles)


def span(edges: Sequence[Triple]) -> int:
    """Number of distinct vertices touched by the edges."""
    return len({v for e in edges for v in TripartiteHypergraph.vertices(e)})


def is_uv_free(h: TripartiteHypergraph, u: int, v: int, max_nodes: int = UV_FREE_MAX_NODES) -> FreenessCertificate:
    """
    Checks that every v edges span at least u + 1 vertices.

    Subsets are grown in index order with a running vertex count; a branch is
    dropped as soon as its span exceeds u, since adding edges never shrinks it.

    Args:
        h: Hypergraph
        u: Vertex bound
        v: Number of edges
        max_nodes: Enumeration budget

    Returns:
        FreenessCertificate

    Raises:
        BudgetExhaustedError: with the nodes explored and the current prefix
    """
    if u < 0 or v < 1:
        raise InvalidInputError(f"need u >= 0 and v >= 1, got u={u}, v={v}")
    edges = h.edges
    vertex_sets = [h.vertices(e) for e in edges]
    counts: Counter = Counter()
    chosen: List[int] = []
    nodes = 0

    def dfs(start: int) -> bool:
        nonlocal nodes
        if len(chosen) == v:
            return True
        for i in range(start, len(edges) - (v - len(chosen)) + 1):
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExhaustedError(
                    f"({u},{v})-freeness undecided after {max_nodes} nodes",
                    partial={"nodes_explored": nodes, "prefix": [edges[j] for j in chosen]},
                )
            counts.update(vertex_sets[i])
            chosen.append(i)
            if len(counts) <= u and dfs(i + 1):
                return True
            chosen.pop()
            counts.subtract(vertex_sets[i])
            for vertex in vertex_sets[i]:
                if not counts[vertex]:
                    del counts[vertex]
        return False

    found = dfs(0)
    witness = tuple(edges[i] for i in chosen) if found else None
    logger.debug(f"[HYPER] ({u},{v})-free={not found} on {len(edges)} edges, {nodes} nodes")
    return FreenessCertificate(u=u, v=v, free=not found, witness=witness, nodes_explored=nodes)
