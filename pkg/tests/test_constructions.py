import itertools

import numpy as np
import pytest

from src.constructions import (
    GalleryId,
    affine_code,
    affine_comparability,
    base_interleave,
    cyclic_boost,
    digit_windows,
    family_fixtures,
    gallery,
    max_agreement,
    prek_sharp,
    product,
    resolve_gallery_id,
    rotate,
)
from src.constructions.gallery import FIG2A_GRID, FIG2B_GRID
from src.core import Box, InvalidInputError, Mode, TupleFamily, render_ascii, to_grid, validate
from src.search import GrowthKind, GrowthPolicy, prek_violations, random_grow

# ===== base interleave =====


def test_base_interleave_two_cubed():
    family = base_interleave(2, 3, 2)
    assert len(family) == 8
    assert family.box == Box.cube(4, 3)
    assert family.mode is Mode.INCREASING
    assert validate(family).valid


def test_base_interleave_matches_printed_display():
    family = base_interleave(3, 3, 2)
    assert len(family) == 27
    assert family.tuples[3] == (4, 1, 2)


def test_base_interleave_base_one():
    family = base_interleave(1, 4, 3)
    assert family.tuples == ((1, 1, 1, 1),)


def test_every_digit_is_read_s_times():
    for r in range(1, 7):
        for s in range(1, r + 1):
            counts = np.bincount([d for window in digit_windows(r, s) for d in window], minlength=r)
            assert (counts == s).all()


@pytest.mark.parametrize("m,r", list(itertools.product(range(1, 5), range(1, 6))))
def test_base_interleave_always_validates(m, r):
    for s in range(1, r + 1):
        family = base_interleave(m, r, s)
        assert len(family) == m**r
        assert len(set(family.tuples)) == m**r
        assert validate(family).valid


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(10))
def test_random_rotated_interleaves_validate(chunk):
    rng = np.random.default_rng(200 + chunk)
    for _ in range(100):
        m = int(rng.integers(1, 5))
        r = int(rng.integers(1, 6 if m <= 3 else 5))
        s = int(rng.integers(1, r + 1))
        family = rotate(base_interleave(m, r, s), int(rng.integers(r)))
        assert len(set(family.tuples)) == m**r
        assert validate(family).valid, (m, r, s)


def test_base_interleave_rejects_bad_parameters():
    with pytest.raises(InvalidInputError):
        base_interleave(2, 3, 4)
    with pytest.raises(InvalidInputError):
        base_interleave(0, 3, 2)


# ===== products =====


def test_product_of_n4_with_itself(n4):
    family = product(n4, n4)
    assert len(family) == 64
    assert family.box == Box.cube(16, 3)
    assert validate(family).valid


def test_product_with_singleton_is_identity(n4):
    singleton = TupleFamily(Box.cube(1, 3), 2, Mode.INCREASING, ((1, 1, 1),))
    assert product(n4, singleton).tuples == n4.tuples


def test_product_of_comparable_families(comp5):
    family = product(comp5, comp5)
    assert len(family) == 25
    assert family.box == Box.cube(9, 3)
    assert family.mode is Mode.COMPARABLE
    assert validate(family).valid


def test_product_rejects_mixed_modes(n4, comp5):
    with pytest.raises(InvalidInputError):
        product(n4, comp5)


def test_product_rejects_invalid_factor(n4):
    with pytest.raises(InvalidInputError):
        product(n4.reversed(), n4)


@pytest.mark.parametrize("chunk", range(10))
def test_product_of_random_comparable_families(chunk, comparable_family_factory):
    rng = np.random.default_rng(chunk)
    for _ in range(100):
        a = comparable_family_factory(rng, int(rng.integers(2, 4)))
        b = comparable_family_factory(rng, int(rng.integers(2, 4)))
        family = product(a, b)
        assert len(family) == len(a) * len(b)
        assert validate(family).valid


def _random_increasing_factor(rng):
    if rng.random() < 0.3:
        return base_interleave(int(rng.integers(1, 4)), 3, 2)
    kinds = list(GrowthKind)
    policy = GrowthPolicy(kinds[int(rng.integers(len(kinds)))], int(rng.integers(2**32)))
    return random_grow(Box.cube(int(rng.integers(2, 5)), 3), 2, policy)


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(10))
def test_product_of_random_increasing_families(chunk):
    rng = np.random.default_rng(100 + chunk)
    for _ in range(100):
        a, b = _random_increasing_factor(rng), _random_increasing_factor(rng)
        family = product(a, b)
        assert len(set(family.tuples)) == len(a) * len(b)
        assert validate(family).valid


# ===== rotations and the cyclic boost =====


def test_rotate_moves_last_coordinate_first():
    family = TupleFamily(Box((2, 3, 4)), 2, Mode.COMPARABLE, ((1, 2, 3),))
    rotated = rotate(family)
    assert rotated.box.dims == (4, 2, 3)
    assert rotated.tuples == ((3, 1, 2),)
    assert rotate(family, 3) == family


def test_cyclic_boost_sizes():
    t = TupleFamily(Box((2, 3, 4)), 2, Mode.INCREASING, ((1, 1, 1), (1, 2, 2), (2, 1, 3), (2, 2, 4)))
    assert validate(t).valid
    boosted = cyclic_boost(t)
    assert boosted.box == Box.cube(24, 3)
    assert len(boosted) == 64
    assert validate(boosted).valid


def test_cyclic_boost_of_singleton():
    t = TupleFamily(Box.cube(1, 3), 2, Mode.INCREASING, ((1, 1, 1),))
    assert cyclic_boost(t).tuples == ((1, 1, 1),)


def test_cyclic_boost_of_fig2b_beats_three_halves():
    t = gallery(GalleryId.FIG2B_9)
    assert len(t) == 9
    assert t.box.size == 80
    assert len(t) > 80**0.5
    boosted = cyclic_boost(t)
    assert boosted.box == Box.cube(80, 3)
    assert len(boosted) == 729
    assert len(boosted) > 80**1.5
    assert validate(boosted).valid


# ===== affine functions =====


# Every prime power q and dimension k with q^k <= 16
AFFINE_CASES = [
    (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1), (4, 2),
    (5, 1), (7, 1), (11, 1), (13, 1),
    pytest.param(8, 1, marks=pytest.mark.slow),
    pytest.param(9, 1, marks=pytest.mark.slow),
    pytest.param(16, 1, marks=pytest.mark.slow),
]


@pytest.mark.parametrize("q,k", AFFINE_CASES)
def test_affine_agreement_bound(q, k):
    family = affine_code(q, k)
    assert len(family) == q ** (k + 1)
    assert family.arity == q**k
    assert max_agreement(family) <= q ** (k - 1)
    assert family.s == affine_comparability(q, k)
    assert validate(family).valid


def test_affine_small_cases():
    family = affine_code(2, 2)
    assert len(family) == 8 and family.arity == 4
    assert family.s == 1
    assert affine_code(3, 2).s == 3
    assert affine_code(3, 1).box == Box.cube(3, 3)


def test_affine_rejects_non_prime_power():
    with pytest.raises(InvalidInputError):
        affine_code(6, 1)


# ===== gallery =====


def test_every_fixture_validates():
    fixtures = family_fixtures()
    assert set(fixtures) == set(GalleryId) - {GalleryId.PREK_SHARP}
    for gid, family in fixtures.items():
        assert validate(family).valid, gid


def test_fixture_sizes_and_boxes():
    assert len(gallery("n4_len8")) == 8
    fig2a = gallery("fig2a_28")
    assert len(fig2a) == 28 and fig2a.box == Box.cube(9, 3)
    assert len(fig2a) > 9**1.5
    lastfig = gallery("lastfig_15")
    assert len(lastfig) == 15 and lastfig.box == Box((7, 7, 8))
    assert gallery("grid10_554").box == Box((5, 5, 4))
    assert gallery("fig2b_9").box == Box((5, 4, 4))
    nonproduct = gallery("nonproduct_9")
    assert len(nonproduct) == 9 and nonproduct.box == Box.cube(5, 3)


def test_fixtures_are_stable():
    assert gallery("fig2a").to_dict() == gallery(GalleryId.FIG2A_28).to_dict()


@pytest.mark.parametrize("gid,picture", [(GalleryId.FIG2A_28, FIG2A_GRID), (GalleryId.FIG2B_9, FIG2B_GRID)])
def test_picture_fixtures_render_back(gid, picture):
    assert render_ascii(to_grid(gallery(gid))) == picture.strip()


@pytest.mark.parametrize("n", range(2, 7))
def test_prek_sharp_sets(n):
    cells = gallery("prek_sharp", n=n)
    assert len(cells) == 4 * n - 5
    assert cells == prek_sharp(n)
    if n >= 3:
        assert prek_violations(cells) == []


def test_resolve_gallery_id():
    assert resolve_gallery_id("lastfig") is GalleryId.LASTFIG_15
    assert resolve_gallery_id(" N4_LEN8 ") is GalleryId.N4_LEN8
    with pytest.raises(InvalidInputError):
        resolve_gallery_id("nope")
    with pytest.raises(InvalidInputError):
        gallery("prek")
