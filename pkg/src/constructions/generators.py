"""
GENERATORS Module: Explicit s-increasing constructions.

- base_interleave: the digit-window construction of length m^r in [m^s]^r
- product: the lexicographic product of two families
- cyclic_boost: a triple family times its two coordinate rotations
"""

import sys
from typing import List

from src.core.errors import InvalidInputError
from src.core.tuples import Box, Mode, TupleFamily, TupleR, validate


# ========================================================================
# DIGIT WINDOWS
# ========================================================================


def digit_windows(r: int, s: int) -> List[List[int]]:
    """
    Digit positions read by each coordinate.

    Coordinate i (1-based) reads the s consecutive digits starting at
    s*(i-1) mod r, wrapping around. Every digit is read by exactly s
    coordinates. Windows are returned sorted so that the last entry is the
    most significant digit.
    """
    windows = []
    for i in range(1, r + 1):
        start = (s * (i - 1)) % r
        windows.append(sorted((start + t) % r for t in range(s)))
    return windows


def base_interleave(m: int, r: int, s: int) -> TupleFamily:
    """
    Builds the s-increasing sequence of length m^r in [m^s]^r.

    The k-th tuple (k = 0 .. m^r - 1) restricts the base-m digits of k to
    each coordinate's window and reads them as a base-m number, plus one.

    Args:
        m: Base, at least 1
        r: Arity
        s: Comparability parameter, 1 <= s <= r

    Returns:
        TupleFamily in INCREASING mode
    """
    if m < 1 or r < 1 or not 1 <= s <= r:
        raise InvalidInputError(f"need m, r >= 1 and 1 <= s <= r, got m={m}, r={r}, s={s}")
    length = m**r
    if length > sys.maxsize:
        raise InvalidInputError(f"{m}^{r} tuples exceed the platform integer range")

    windows = digit_windows(r, s)
    tuples = []
    for k in range(length):
        digits = [(k // m**j) % m for j in range(r)]
        tuples.append(
            tuple(1 + sum(digits[d] * m**rank for rank, d in enumerate(window)) for window in windows)
        )
    return TupleFamily(Box.cube(m**s, r), s, Mode.INCREASING, tuple(tuples))


# ========================================================================
# PRODUCTS
# ========================================================================


def product(a: TupleFamily, b: TupleFamily) -> TupleFamily:
    """
    Lexicographic product of two families.

    The pair (x, y) of coordinate values is sent to (x - 1) * n_y + y, where
    n_y is the matching dimension of b's box. Pairs are listed with a's index
    varying slowest.

    Args:
        a: Outer family
        b: Inner family with the same arity, s and mode

    Returns:
        TupleFamily of size |a| * |b| in the coordinatewise product box
    """
    if a.arity != b.arity or a.s != b.s or a.mode is not b.mode:
        raise InvalidInputError(
            f"product needs equal arity, s and mode; got ({a.arity}, {a.s}, {a.mode.value}) "
            f"and ({b.arity}, {b.s}, {b.mode.value})"
        )
    for name, family in (("left", a), ("right", b)):
        if not validate(family).valid:
            raise InvalidInputError(f"{name} factor is not a valid {family.mode.value} family")

    inner = b.box.dims
    dims = tuple(na * nb for na, nb in zip(a.box.dims, inner))
    tuples: List[TupleR] = [
        tuple((x - 1) * n + y for x, y, n in zip(ta, tb, inner))
        for ta in a.tuples
        for tb in b.tuples
    ]
    return TupleFamily(Box(dims), a.s, a.mode, tuple(tuples))


def rotate(family: TupleFamily, times: int = 1) -> TupleFamily:
    """Cycles coordinates (c1, ..., cr) -> (cr, c1, ..., c(r-1)), `times` times."""
    k = times % family.arity

    def shift(values):
        values = tuple(values)
        return values[-k:] + values[:-k] if k else values

    return TupleFamily(
        Box(shift(family.box.dims)), family.s, family.mode, tuple(shift(t) for t in family.tuples)
    )


def cyclic_boost(t: TupleFamily) -> TupleFamily:
    """
    Product of a triple family with its two coordinate rotations.

    A family in [n1] x [n2] x [n3] becomes one of size |t|^3 in [n1*n2*n3]^3.
    """
    if t.arity != 3:
        raise InvalidInputError(f"cyclic_boost needs triples, got arity {t.arity}")
    return product(product(t, rotate(t, 1)), rotate(t, 2))
