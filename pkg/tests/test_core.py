import itertools

import numpy as np
import pytest

from src.core import (
    Box,
    CellCollisionError,
    FailureKind,
    GridLabelling,
    InvalidInputError,
    LabelledBipartite,
    Mode,
    TupleFamily,
    acyclic,
    comparable_pair,
    family_bipartite,
    find_cycle,
    find_repeating_cycle,
    from_grid,
    grid_conditions,
    label_geometry,
    less_s,
    parse_ascii,
    pigeonhole_bound,
    render_ascii,
    repeating_cycle_free,
    to_grid,
    topological_order,
    validate,
    weakly_comparable,
)

CONDORCET = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]


# ===== s-less relation =====


def test_less_s_examples():
    assert less_s((3, 3, 9), (5, 6, 1), 2)
    assert not less_s((1, 2, 3), (1, 2, 4), 2)
    assert not less_s((2, 2, 2), (2, 2, 2), 1)


def test_less_s_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        less_s((1, 2), (1, 2, 3), 2)
    with pytest.raises(InvalidInputError):
        less_s((1, 2, 3), (1, 2, 4), 4)


def test_comparable_pair_examples():
    assert comparable_pair((1, 1, 1), (1, 2, 2), 2)
    assert not comparable_pair((1, 1, 1), (1, 1, 2), 2)
    assert comparable_pair((1, 2, 3), (2, 3, 1), 2)


@pytest.mark.parametrize("seed", range(5))
def test_less_s_is_antisymmetric_above_half(seed):
    rng = np.random.default_rng(seed)
    for _ in range(200):
        r = int(rng.integers(2, 7))
        s = int(rng.integers(r // 2 + 1, r + 1))
        a, b = rng.integers(1, 4, size=(2, r))
        assert not (less_s(a, b, s) and less_s(b, a, s))


def test_weakly_comparable():
    assert weakly_comparable((1, 1), (2, 2))
    assert weakly_comparable((1, 2), (1, 3))
    assert not weakly_comparable((1, 2), (2, 1))


# ===== validation =====


def test_validate_n4_increasing(n4):
    report = validate(n4)
    assert report.valid
    assert report.failure_count == 0


def test_validate_f42_increasing():
    from src.constructions import gallery

    family = gallery("f42_len10")
    assert family.arity == 4
    assert len(family) == 10
    assert validate(family).valid


def test_validate_reversed_sequence_reports_order_violations(n4):
    report = validate(n4.reversed())
    assert not report.valid
    assert FailureKind.ORDER_VIOLATION in report.kinds()


def test_validate_reports_duplicates():
    family = TupleFamily(Box.cube(2, 3), 2, Mode.COMPARABLE, ((1, 1, 1), (2, 2, 2), (1, 1, 1)))
    report = validate(family)
    assert not report.valid
    assert report.kinds() == {FailureKind.DUPLICATE}


@pytest.mark.parametrize("order", list(itertools.permutations(CONDORCET)))
def test_no_ordering_of_condorcet_triple_is_increasing(order):
    family = TupleFamily(Box.cube(3, 3), 2, Mode.INCREASING, order)
    report = validate(family)
    assert not report.valid
    assert FailureKind.CYCLE in report.kinds()
    assert validate(family.with_mode(Mode.COMPARABLE)).valid


def test_stored_failures_are_capped():
    tuples = tuple(itertools.product(range(1, 5), repeat=3))
    report = validate(TupleFamily(Box.cube(4, 3), 2, Mode.INCREASING, tuples))
    assert len(report.failures) == 100
    assert report.failure_count > 100


def test_family_rejects_tuples_outside_box():
    with pytest.raises(InvalidInputError):
        TupleFamily(Box.cube(2, 3), 2, Mode.COMPARABLE, ((1, 1, 3),))
    with pytest.raises(InvalidInputError):
        TupleFamily(Box.cube(2, 3), 4, Mode.COMPARABLE, ())


def test_family_dict_round_trip(n4):
    assert TupleFamily.from_dict(n4.to_dict()) == n4
    assert n4.to_dict()["tuples"][1] == [1, 2, 2]


# ===== cycles and ordering =====


def test_acyclic_examples(n4):
    assert not acyclic(CONDORCET, 2)
    assert acyclic([(2, 1, 3)], 2)
    assert acyclic(n4.tuples, 2)


def test_find_cycle_returns_the_condorcet_triple():
    cycle = find_cycle(CONDORCET, 2)
    assert sorted(cycle) == sorted(CONDORCET)
    assert all(less_s(cycle[i], cycle[(i + 1) % 3], 2) for i in range(3))


def test_topological_order_repairs_a_shuffled_sequence(n4):
    rng = np.random.default_rng(7)
    shuffled = [n4.tuples[i] for i in rng.permutation(len(n4))]
    ordered = topological_order(shuffled, 2)
    assert validate(n4.with_tuples(ordered)).valid


def test_topological_order_rejects_cycles(comp5):
    with pytest.raises(InvalidInputError):
        topological_order(comp5.tuples, 2)


def test_pigeonhole_bound():
    assert pigeonhole_bound(Box.cube(4, 3), 2) == 16
    assert pigeonhole_bound(Box((2, 3, 4)), 2) == 6
    assert pigeonhole_bound(Box.cube(3, 4), 2) == 27


# ===== grids =====


def test_n4_grid_picture(n4):
    assert render_ascii(to_grid(n4, 3)) == "..24\n..13\n24..\n13.."


def test_single_triple_grid():
    grid = to_grid(TupleFamily(Box.cube(1, 3), 2, Mode.COMPARABLE, ((1, 1, 1),)))
    assert (grid.rows, grid.cols) == (1, 1)
    assert grid.cells == {(1, 1): 1}


def test_to_grid_rejects_shared_cell():
    family = TupleFamily(Box.cube(2, 3), 2, Mode.COMPARABLE, ((1, 1, 1), (1, 1, 2)))
    with pytest.raises(CellCollisionError) as info:
        to_grid(family, 3)
    assert info.value.cell == (1, 1)


@pytest.mark.parametrize("label_coord", [1, 2, 3])
def test_grid_round_trip(fig2a, n4, label_coord):
    for family in (fig2a, n4):
        rebuilt = from_grid(to_grid(family, label_coord))
        assert set(rebuilt.tuples) == set(family.tuples)
        assert rebuilt.box == family.box


def test_parse_ascii_inverts_rendering(fig2a):
    grid = to_grid(fig2a)
    assert parse_ascii(render_ascii(grid), label_bound=grid.label_bound) == grid


def test_wide_labels_render_with_spaces():
    grid = GridLabelling(rows=1, cols=2, label_bound=12, label_coord=3, cells={(1, 1): 3, (2, 1): 12})
    text = render_ascii(grid)
    assert text == " 3 12"
    assert parse_ascii(text, label_bound=12).cells == grid.cells


def test_parse_ascii_rejects_ragged_rows():
    with pytest.raises(InvalidInputError):
        parse_ascii("12\n1")


# ===== grid conditions =====


def test_conditions_hold_for_n4(n4):
    report = grid_conditions(to_grid(n4))
    assert all(r.holds for r in report.as_dict().values())


def test_fig2a_is_comparable_but_not_transitive(fig2a):
    report = grid_conditions(to_grid(fig2a))
    assert report.c1.holds and report.c2.holds
    assert not report.c3_prime.holds
    assert len(report.c3_prime.witness) == 3


def test_decreasing_row_breaks_c1():
    grid = GridLabelling(rows=1, cols=2, label_bound=2, label_coord=3, cells={(1, 1): 2, (2, 1): 1})
    report = grid_conditions(grid)
    assert not report.c1.holds
    assert report.c1.witness == ((1, 1), (2, 1))


def test_repeated_label_off_diagonal_breaks_c2():
    grid = GridLabelling(rows=2, cols=2, label_bound=1, label_coord=3, cells={(1, 2): 1, (2, 1): 1})
    assert not grid_conditions(grid).c2.holds


@pytest.mark.parametrize("chunk", range(10))
def test_conditions_match_family_properties(chunk, comparable_family_factory):
    for seed in range(100 * chunk, 100 * (chunk + 1)):
        rng = np.random.default_rng(seed)
        family = comparable_family_factory(rng)
        orderable = acyclic(family.tuples, 2)
        for label_coord in (1, 2, 3):
            report = grid_conditions(to_grid(family, label_coord))
            assert report.c1.holds and report.c2.holds, seed
            assert report.c3.holds, seed
            assert report.c3_prime.holds == orderable, seed


@pytest.mark.parametrize("chunk", range(10))
def test_c1_and_c2_detect_incomparable_pairs(chunk):
    cells = [(x, y) for x in range(1, 5) for y in range(1, 5)]
    for seed in range(100 * chunk, 100 * (chunk + 1)):
        rng = np.random.default_rng(1000 + seed)
        picked = rng.choice(len(cells), size=int(rng.integers(2, 9)), replace=False)
        tuples = tuple(cells[i] + (int(rng.integers(1, 5)),) for i in picked)
        family = TupleFamily(Box.cube(4, 3), 2, Mode.COMPARABLE, tuples)
        report = grid_conditions(to_grid(family))
        assert (report.c1.holds and report.c2.holds) == validate(family).valid, seed


# ===== label geometry =====


def _single_label_grid(cells, rows, cols):
    return GridLabelling(rows=rows, cols=cols, label_bound=1, label_coord=3, cells={c: 1 for c in cells})


def test_label_geometry_staircase():
    grid = _single_label_grid([(2, 1), (3, 2), (5, 3)], rows=3, cols=5)
    geometry = label_geometry(grid, 1)
    assert geometry.upper_completion == {(2, 2), (2, 3), (3, 3)}
    assert geometry.lower_completion == {(3, 1), (5, 1), (5, 2)}
    assert geometry.completion == geometry.upper_completion | geometry.lower_completion | geometry.label_set


def test_label_geometry_diagonal_pair():
    geometry = label_geometry(_single_label_grid([(1, 1), (2, 2)], rows=2, cols=2), 1)
    assert geometry.upper_completion == {(1, 2)}
    assert geometry.lower_completion == {(2, 1)}


def test_label_geometry_singleton():
    geometry = label_geometry(_single_label_grid([(2, 2)], rows=3, cols=3), 1)
    assert not geometry.upper_completion and not geometry.lower_completion
    assert geometry.completion == geometry.label_set


def test_label_geometry_unknown_label(n4):
    with pytest.raises(InvalidInputError):
        label_geometry(to_grid(n4), 9)


# ===== repeating cycles =====


def test_n4_bipartite_graph_has_no_repeating_cycle(n4):
    assert repeating_cycle_free(family_bipartite(n4, 3), 8)


def test_alternating_four_cycle_repeats():
    g = LabelledBipartite(2, 2, {(1, 1): 1, (1, 2): 2, (2, 2): 1, (2, 1): 2})
    assert not repeating_cycle_free(g, 4)
    cycle, word = find_repeating_cycle(g, 4)
    assert len(cycle) == 4
    assert word[:2] == word[2:]


def test_edgeless_graph_is_free():
    assert repeating_cycle_free(LabelledBipartite(3, 3), 6)


def test_odd_cycle_bound_rejected(n4):
    with pytest.raises(InvalidInputError):
        repeating_cycle_free(family_bipartite(n4), 5)


def test_bipartite_rejects_two_labels_on_one_edge():
    with pytest.raises(InvalidInputError):
        LabelledBipartite.from_triples(2, 2, [(1, 1, 1), (1, 1, 2)])
