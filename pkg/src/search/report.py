"""
Search budgets and reports.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, Optional

from src.config import DEFAULT_MAX_NODES, DEFAULT_MAX_SECONDS
from src.core.tuples import TupleFamily


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits, whichever is hit first."""

    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    def split(self, parts: int) -> "SearchBudget":
        """Per-worker share of the node budget; the clock is shared."""
        return SearchBudget(max(1, self.max_nodes // max(1, parts)), self.max_seconds)


class BudgetMeter:
    """Counts nodes against a budget."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()
        self.exhausted = False

    def tick(self) -> bool:
        """Counts one node; returns False once the budget is spent."""
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            self.exhausted = True
        # The clock is only polled every 1024 nodes.
        elif not self.nodes & 1023 and time.monotonic() - self.started > self.budget.max_seconds:
            self.exhausted = True
        return not self.exhausted

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started


@dataclass(frozen=True)
class SearchReport:
    """
    Outcome of an exact search.

    When proven_optimal is True, `optimum` is the true maximum and the
    witness attains it. Otherwise `optimum` is the size of the best witness
    found and `upper_bound` is the best proven bound.
    """

    optimum: int
    witness: TupleFamily
    proven_optimal: bool
    nodes_explored: int
    wall_time: float
    upper_bound: Optional[int] = None
    extra: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "optimum": self.optimum,
            "proven_optimal": self.proven_optimal,
            "upper_bound": self.upper_bound,
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "witness": self.witness.to_dict(),
            "extra": self.extra,
        }
