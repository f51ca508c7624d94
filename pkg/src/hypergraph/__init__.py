"""
HYPERGRAPH Package: Linear hypergraphs, (u,v)-freeness and the Ruzsa equation.
"""

from src.core.bipartite import LabelledBipartite
from src.hypergraph.hypergraph import (
    FreenessCertificate,
    ShadowCount,
    TripartiteHypergraph,
    from_bipartite,
    is_uv_free,
    shadow_graph,
    shadow_triangles,
    span,
    to_hypergraph,
)
from src.hypergraph.patterns import CaseCheckResult, PatternCertificate, five_edge_case_check, pattern_free
from src.hypergraph.ruzsa import (
    ap3_free,
    ap3_witness,
    ruzsa_free,
    ruzsa_graph,
    ruzsa_greedy,
    ruzsa_solution,
)

__all__ = [
    "LabelledBipartite",
    "TripartiteHypergraph",
    "ShadowCount",
    "FreenessCertificate",
    "to_hypergraph",
    "from_bipartite",
    "shadow_graph",
    "shadow_triangles",
    "span",
    "is_uv_free",
    "ruzsa_solution",
    "ruzsa_free",
    "ap3_witness",
    "ap3_free",
    "ruzsa_greedy",
    "ruzsa_graph",
    "PatternCertificate",
    "CaseCheckResult",
    "pattern_free",
    "five_edge_case_check",
]
