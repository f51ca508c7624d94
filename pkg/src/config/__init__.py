"""
Package CONFIG: System configurations.

Contains search budgets, numeric tolerances and the manifest suffix.
"""

from src.config.settings import (
    ALPHA_BRACKET,
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_SECONDS,
    DEFAULT_SEED,
    LOG_EVERY_NODES,
    MANIFEST_SUFFIX,
    MAX_STORED_FAILURES,
    OPTIMIZE_SCAN_POINTS,
    OPTIMIZE_TOL,
    PREK_MAX_N,
    RATIONAL_SNAP_DENOMINATOR,
    RNG_ALGORITHM,
    SEARCH_MEMO_LIMIT,
    SHIFT_MAX_HALVINGS,
    FORMAT_REVISION,
    UV_FREE_MAX_NODES,
)

__all__ = [
    "FORMAT_REVISION",
    "RNG_ALGORITHM",
    "DEFAULT_SEED",
    "DEFAULT_MAX_NODES",
    "DEFAULT_MAX_SECONDS",
    "LOG_EVERY_NODES",
    "SEARCH_MEMO_LIMIT",
    "PREK_MAX_N",
    "UV_FREE_MAX_NODES",
    "MAX_STORED_FAILURES",
    "OPTIMIZE_SCAN_POINTS",
    "OPTIMIZE_TOL",
    "ALPHA_BRACKET",
    "SHIFT_MAX_HALVINGS",
    "RATIONAL_SNAP_DENOMINATOR",
    "MANIFEST_SUFFIX",
]
