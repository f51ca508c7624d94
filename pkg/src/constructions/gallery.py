"""
GALLERY Module: Hardcoded example families.

Fixtures that come from grid pictures are stored as the picture itself and
decoded through `parse_ascii`, so the picture and the tuples cannot drift.
"""

from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

from src.core.errors import InvalidInputError
from src.core.grid import from_grid, parse_ascii
from src.core.tuples import Box, Mode, TupleFamily, topological_order


class GalleryId(str, Enum):
    N4_LEN8 = "n4_len8"
    F42_LEN10 = "f42_len10"
    COMP5_3CUBE = "comp5_3cube"
    FIG2A_28 = "fig2a_28"
    FIG2B_9 = "fig2b_9"
    LASTFIG_15 = "lastfig_15"
    GRID10_554 = "grid10_554"
    PERM_EXAMPLE6 = "perm_example6"
    NONPRODUCT_9 = "nonproduct_9"
    PREK_SHARP = "prek_sharp"


# Short names accepted on the command line
ALIASES = {
    "n4": GalleryId.N4_LEN8,
    "f42": GalleryId.F42_LEN10,
    "comp5": GalleryId.COMP5_3CUBE,
    "fig2a": GalleryId.FIG2A_28,
    "fig2b": GalleryId.FIG2B_9,
    "lastfig": GalleryId.LASTFIG_15,
    "grid10": GalleryId.GRID10_554,
    "perm6": GalleryId.PERM_EXAMPLE6,
    "nonproduct": GalleryId.NONPRODUCT_9,
    "prek": GalleryId.PREK_SHARP,
}


# ===== GRID PICTURES (top row first) =====
FIG2A_GRID = """
....4..89
....3..67
....289..
....167..
6789.....
..34....5
..12...5.
34....5..
12...5...
"""

# Five columns, four rows and largest label 4, so the family lives in [5]x[4]x[4]
FIG2B_GRID = """
..134
34...
.1..2
1..2.
"""

PERM_EXAMPLE6_GRID = """
..2
.2.
..1
2..
.1.
1..
"""

# ===== TUPLE LISTS =====
N4_LEN8 = (
    (1, 1, 1), (1, 2, 2), (2, 1, 3), (2, 2, 4),
    (3, 3, 1), (3, 4, 2), (4, 3, 3), (4, 4, 4),
)

F42_LEN10 = (
    (1, 1, 1, 1), (1, 1, 2, 2), (1, 2, 1, 3), (2, 1, 3, 1), (2, 2, 2, 2),
    (3, 3, 1, 1), (1, 3, 2, 3), (3, 1, 3, 2), (2, 2, 3, 3), (3, 3, 3, 3),
)

COMP5_3CUBE = ((1, 1, 1), (1, 2, 3), (2, 3, 1), (3, 1, 2), (3, 3, 3))

# Box [7]x[7]x[8]: the first coordinate reaches 7 at (7, 2, 7) and the second at (3, 7, 5)
LASTFIG_15 = (
    (1, 1, 1), (2, 2, 1), (1, 3, 2), (3, 1, 3), (3, 2, 4),
    (4, 4, 1), (5, 3, 3), (1, 5, 5), (2, 5, 6), (4, 6, 4),
    (3, 7, 5), (6, 1, 7), (7, 2, 7), (5, 4, 8), (6, 5, 8),
)

# Ten unit cubes in [5]x[5]x[4]; labels 1 and 4 occur three times, 2 and 3 twice
GRID10_554 = (
    (2, 5, 3), (5, 5, 4), (1, 4, 3), (4, 4, 4), (4, 3, 1),
    (5, 3, 2), (2, 2, 1), (3, 2, 4), (1, 1, 1), (3, 1, 2),
)

# A 2-increasing sequence in [5]^3 found by random growth. With the third coordinate as
# label no two labels share both a row and a column, so all five labels stay
# apart after merging, yet no row or column cut separates them: the grid has
# no block decomposition at all.
NONPRODUCT_9 = (
    (1, 1, 1), (2, 1, 2), (1, 2, 3), (2, 3, 3), (3, 1, 4),
    (3, 2, 5), (4, 4, 1), (5, 3, 4), (4, 5, 5),
)


def prek_sharp(n: int) -> FrozenSet[Tuple[int, int]]:
    """
    The extremal cell set of size 4n - 5 in [n]^2 (n >= 2).

    Cells with first coordinate n - 1 or n, or second coordinate 1 or 2,
    minus the corner (n, 1).
    """
    if n < 2:
        raise InvalidInputError(f"prek_sharp needs n >= 2, got {n}")
    cells = {
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if a in (n - 1, n) or b in (1, 2)
    }
    cells.discard((n, 1))
    return frozenset(cells)


def resolve_gallery_id(name: str) -> GalleryId:
    """Accepts the full id or a short alias."""
    key = name.strip().lower()
    if key in ALIASES:
        return ALIASES[key]
    try:
        return GalleryId(key)
    except ValueError as e:
        raise InvalidInputError(f"unknown gallery id '{name}'") from e


def _from_picture(text: str, mode: Mode) -> TupleFamily:
    family = from_grid(parse_ascii(text, label_coord=3))
    if mode is Mode.INCREASING:
        family = family.with_tuples(topological_order(family.tuples, family.s))
    return family.with_mode(mode)


def gallery(gid, n: Optional[int] = None):
    """
    Returns a fixture.

    Args:
        gid: GalleryId or its name
        n: Grid size, only for prek_sharp

    Returns:
        TupleFamily, or the cell set for prek_sharp
    """
    gid = resolve_gallery_id(gid) if isinstance(gid, str) else GalleryId(gid)
    if gid is GalleryId.PREK_SHARP:
        if n is None:
            raise InvalidInputError("prek_sharp needs n")
        return prek_sharp(n)

    fixtures: Dict[GalleryId, TupleFamily] = {
        GalleryId.N4_LEN8: TupleFamily(Box.cube(4, 3), 2, Mode.INCREASING, N4_LEN8),
        GalleryId.F42_LEN10: TupleFamily(Box.cube(3, 4), 2, Mode.INCREASING, F42_LEN10),
        GalleryId.COMP5_3CUBE: TupleFamily(Box.cube(3, 3), 2, Mode.COMPARABLE, COMP5_3CUBE),
        GalleryId.LASTFIG_15: TupleFamily(Box((7, 7, 8)), 2, Mode.INCREASING, LASTFIG_15),
        GalleryId.GRID10_554: TupleFamily(Box((5, 5, 4)), 2, Mode.COMPARABLE, GRID10_554),
        GalleryId.NONPRODUCT_9: TupleFamily(Box.cube(5, 3), 2, Mode.INCREASING, NONPRODUCT_9),
    }
    if gid in fixtures:
        return fixtures[gid]
    if gid is GalleryId.FIG2A_28:
        return _from_picture(FIG2A_GRID, Mode.COMPARABLE)
    if gid is GalleryId.FIG2B_9:
        return _from_picture(FIG2B_GRID, Mode.COMPARABLE)
    return _from_picture(PERM_EXAMPLE6_GRID, Mode.INCREASING)


def family_fixtures() -> Dict[GalleryId, TupleFamily]:
    """Every fixture that is a tuple family."""
    return {gid: gallery(gid) for gid in GalleryId if gid is not GalleryId.PREK_SHARP}

