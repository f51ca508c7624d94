"""
Exception hierarchy shared by every package.
"""

from typing import Any, Optional, Tuple


class CombinatoricsError(Exception):
    """Base class for all library errors."""


class InvalidInputError(CombinatoricsError, ValueError):
    """An operation was called outside its preconditions."""


class CellCollisionError(InvalidInputError):
    """Two tuples landed on the same grid cell."""

    def __init__(self, first: Tuple[int, ...], second: Tuple[int, ...], cell: Tuple[int, int]):
        self.first = first
        self.second = second
        self.cell = cell
        super().__init__(
            f"tuples {first} and {second} share cell {cell}; family is not 2-comparable"
        )


class BudgetExhaustedError(CombinatoricsError):
    """A bounded enumeration ran out of budget before reaching a verdict."""

    def __init__(self, message: str, partial: Optional[Any] = None):
        self.partial = partial
        super().__init__(message)


class CertificateError(CombinatoricsError):
    """A self-check on a produced certificate failed."""
