"""
SEARCH Package: Exact optimum solvers, random growth and sampling.
"""

from src.search.exact import box_symmetries, easy_bound, max_comparable, max_increasing, warm_start
from src.search.growth import GrowthKind, GrowthPolicy, grow_many, minimal_rows, random_grow
from src.search.prek import prek_max, prek_violations
from src.search.report import SearchBudget, SearchReport
from src.search.sampling import comparability_parameter, comparable_sample, sampling_experiment

__all__ = [
    "SearchBudget",
    "SearchReport",
    "max_increasing",
    "max_comparable",
    "warm_start",
    "easy_bound",
    "box_symmetries",
    "prek_max",
    "prek_violations",
    "GrowthKind",
    "GrowthPolicy",
    "random_grow",
    "grow_many",
    "minimal_rows",
    "comparable_sample",
    "comparability_parameter",
    "sampling_experiment",
]
