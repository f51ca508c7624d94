"""
DECOMPOSE Package: Decomposability of grid labellings with block certificates.
"""

from src.decompose.decomposition import (
    DECOMPOSABLE,
    INDECOMPOSABLE,
    TRIVIAL,
    Block,
    DecompositionResult,
    DecompositionSummary,
    decompose_all,
    decompose_check,
    decompose_grid,
    merge_labels,
    render_blocks,
)

__all__ = [
    "DECOMPOSABLE",
    "INDECOMPOSABLE",
    "TRIVIAL",
    "Block",
    "DecompositionResult",
    "DecompositionSummary",
    "merge_labels",
    "decompose_grid",
    "decompose_check",
    "decompose_all",
    "render_blocks",
]
