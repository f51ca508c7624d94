"""
CORE Package: Domain types and predicates.

This package contains the objects everything else builds on:
- Boxes, tuple families and the s-less relation
- Grid pictures of triple families and their conditions
- Labelled bipartite graphs and repeating-cycle checks
"""

from src.core.bipartite import LabelledBipartite, family_bipartite
from src.core.cycles import find_repeating_cycle, repeating_cycle_free
from src.core.errors import (
    BudgetExhaustedError,
    CellCollisionError,
    CertificateError,
    CombinatoricsError,
    InvalidInputError,
)
from src.core.grid import (
    ConditionResult,
    GridConditionsReport,
    GridLabelling,
    LabelGeometry,
    free_axes,
    from_grid,
    grid_conditions,
    label_geometry,
    parse_ascii,
    render_ascii,
    to_grid,
)
from src.core.tuples import (
    Box,
    Failure,
    FailureKind,
    Mode,
    TupleFamily,
    TupleR,
    ValidationReport,
    acyclic,
    comparable_pair,
    find_cycle,
    less_matrix,
    less_s,
    pigeonhole_bound,
    topological_order,
    validate,
    weakly_comparable,
)

__all__ = [
    "Box",
    "TupleR",
    "TupleFamily",
    "Mode",
    "Failure",
    "FailureKind",
    "ValidationReport",
    "less_s",
    "comparable_pair",
    "weakly_comparable",
    "less_matrix",
    "validate",
    "acyclic",
    "find_cycle",
    "topological_order",
    "pigeonhole_bound",
    "GridLabelling",
    "LabelGeometry",
    "ConditionResult",
    "GridConditionsReport",
    "free_axes",
    "to_grid",
    "from_grid",
    "render_ascii",
    "parse_ascii",
    "grid_conditions",
    "label_geometry",
    "LabelledBipartite",
    "family_bipartite",
    "find_repeating_cycle",
    "repeating_cycle_free",
    "CombinatoricsError",
    "InvalidInputError",
    "CellCollisionError",
    "BudgetExhaustedError",
    "CertificateError",
]
