"""
Extremal tuple families: s-increasing sequences, s-comparable sets,
their grid pictures, cuboid relaxations and hypergraph certificates.
"""

__version__ = "1.0.0"
__author__ = "Combinatorics Team"

from src.core import Box, Mode, TupleFamily, validate

__all__ = [
    "Box",
    "Mode",
    "TupleFamily",
    "validate",
]
