import itertools

import numpy as np
import pytest

from src.constructions import GalleryId, gallery
from src.core import Box, CertificateError, Mode, TupleFamily, to_grid, validate
from src.decompose import (
    DECOMPOSABLE,
    INDECOMPOSABLE,
    TRIVIAL,
    decompose_all,
    decompose_check,
    merge_labels,
    render_blocks,
)
from src.search import GrowthKind, GrowthPolicy, random_grow
from src.utils import load_json, save_json


@pytest.mark.parametrize("label_coord", [2, 3])
def test_n4_splits_into_four_blocks(n4, label_coord):
    result = decompose_check(n4, label_coord)
    assert result.decomposable
    assert result.classes == ((1,), (2,), (3,), (4,))
    assert len(result.blocks) == 4
    assert sorted(label for b in result.blocks for label in b.labels) == [1, 2, 3, 4]


def test_n4_blocks_meet_the_bound_with_equality(n4):
    result = decompose_check(n4, 3)
    total = sum(np.sqrt(len(b.xs) * len(b.ys) * len(b.labels)) for b in result.blocks)
    assert total == pytest.approx(np.sqrt(4 * 4 * 4))


def test_n4_block_overlay(n4):
    result = decompose_check(n4, 3)
    assert render_blocks(to_grid(n4, 3), result) == "..24 | BDBD\n..13 | ACAC\n24.. | BDBD\n13.. | ACAC"


@pytest.mark.parametrize("label_coord", [1, 2, 3])
def test_lastfig_is_indecomposable(lastfig, label_coord):
    result = decompose_check(lastfig, label_coord)
    assert result.status == INDECOMPOSABLE
    assert len(result.classes) == 1
    assert not result.blocks


def test_lastfig_summary(lastfig):
    summary = decompose_all(lastfig)
    assert summary.verdict == INDECOMPOSABLE
    assert [r.label_coord for r in summary.results] == [1, 2, 3]
    assert summary.to_dict()["verdict"] == INDECOMPOSABLE


def test_diagonal_pair():
    family = TupleFamily(Box.cube(2, 3), 2, Mode.INCREASING, ((1, 1, 1), (2, 2, 2)))
    result = decompose_check(family, 3)
    assert result.status == DECOMPOSABLE
    assert result.classes == ((1,), (2,))
    assert [(b.xs, b.ys, b.labels) for b in result.blocks] == [((1,), (1, 2), (1,)), ((2,), (1, 2), (2,))]
    assert decompose_all(family).verdict == DECOMPOSABLE


def test_single_triple_is_trivial():
    family = TupleFamily(Box.cube(1, 3), 2, Mode.INCREASING, ((1, 1, 1),))
    assert decompose_check(family).status == TRIVIAL
    assert decompose_all(family).verdict == TRIVIAL


def test_result_dict(n4):
    data = decompose_check(n4, 3).to_dict()
    assert data["decomposable"] is True
    assert data["blocks"][0] == {"xs": [1, 3], "ys": [1, 3], "labels": [1]}


@pytest.mark.parametrize("seed", range(30))
def test_merged_classes_never_share_a_row_and_a_column(seed, comparable_family_factory):
    rng = np.random.default_rng(seed)
    family = comparable_family_factory(rng, int(rng.integers(3, 6)))
    for label_coord in (1, 2, 3):
        grid = to_grid(family, label_coord)
        classes = merge_labels(grid)
        assert sorted(label for c in classes for label in c) == grid.labels()
        rows = [set(grid.row(y).values()) for y in range(1, grid.rows + 1)]
        columns = [set(grid.column(x).values()) for x in range(1, grid.cols + 1)]
        for a, b in itertools.combinations(classes, 2):
            in_row = any(line & set(a) and line & set(b) for line in rows)
            in_column = any(line & set(a) and line & set(b) for line in columns)
            assert not (in_row and in_column)


# ===== grids that merging cannot certify =====


def test_nonproduct_labels_stay_apart_but_have_no_block_cut():
    family = gallery(GalleryId.NONPRODUCT_9)
    assert merge_labels(to_grid(family, 3)) == ((1,), (2,), (3,), (4,), (5,))
    with pytest.raises(CertificateError):
        decompose_check(family, 3)
    with pytest.raises(CertificateError):
        decompose_all(family)


def test_nonproduct_fixture_is_a_growth_outcome():
    grown = random_grow(Box.cube(5, 3), 2, GrowthPolicy(GrowthKind.UNIFORM_MINIMAL, 102))
    assert set(grown.tuples) == set(gallery("nonproduct").tuples)


@pytest.mark.parametrize("kind", list(GrowthKind))
def test_grown_families_are_certified_or_kept(kind, tmp_path):
    kept = {}
    for seed in range(150):
        family = random_grow(Box.cube(5, 3), 2, GrowthPolicy(kind, seed))
        try:
            verdict = decompose_all(family).verdict
        except CertificateError:
            verdict = None
        if verdict != DECOMPOSABLE:
            path = tmp_path / f"{kind.value}_{seed}.json"
            assert save_json(family.to_dict(), path)
            kept[seed] = path

    for path in kept.values():
        assert validate(TupleFamily.from_dict(load_json(path))).valid
    if kind is GrowthKind.UNIFORM_MINIMAL:
        assert 102 in kept
