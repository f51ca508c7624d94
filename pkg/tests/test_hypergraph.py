import itertools

import numpy as np
import pytest

from src.constructions import GalleryId, base_interleave, gallery
from src.core import Box, BudgetExhaustedError, InvalidInputError, LabelledBipartite, Mode, TupleFamily
from src.hypergraph import (
    TripartiteHypergraph,
    ap3_free,
    ap3_witness,
    five_edge_case_check,
    from_bipartite,
    is_uv_free,
    pattern_free,
    ruzsa_free,
    ruzsa_graph,
    ruzsa_greedy,
    ruzsa_solution,
    shadow_triangles,
    span,
    to_hypergraph,
)

INCREASING_FIXTURES = [GalleryId.N4_LEN8, GalleryId.LASTFIG_15, GalleryId.PERM_EXAMPLE6]
COMPARABLE_FIXTURES = [GalleryId.COMP5_3CUBE, GalleryId.FIG2A_28, GalleryId.FIG2B_9, GalleryId.GRID10_554]

# Four edges on the six vertices x1, x2, y1, y2, z1, z2
SQUARE = ((1, 1, 1), (2, 2, 1), (1, 2, 2), (2, 1, 2))


# ===== hypergraph view of triple families =====


def test_n4_hypergraph(n4):
    h = to_hypergraph(n4)
    assert len(h) == 8
    assert h.is_linear
    assert h.part_sizes == (4, 4, 4)


def test_overlapping_triples_are_not_linear():
    family = TupleFamily(Box.cube(2, 3), 2, Mode.COMPARABLE, ((1, 1, 1), (1, 1, 2)))
    h = to_hypergraph(family)
    assert not h.is_linear
    assert h.overlapping_pair() == ((1, 1, 1), (1, 1, 2))
    with pytest.raises(InvalidInputError):
        shadow_triangles(h)


@pytest.mark.parametrize("gid", INCREASING_FIXTURES)
def test_increasing_fixtures_are_nine_five_free(gid):
    family = gallery(gid)
    assert family.mode is Mode.INCREASING
    h = to_hypergraph(family)
    assert h.is_linear
    assert is_uv_free(h, 9, 5).free


@pytest.mark.parametrize("gid", COMPARABLE_FIXTURES + INCREASING_FIXTURES)
def test_comparable_fixtures_are_ten_six_free(gid):
    certificate = is_uv_free(to_hypergraph(gallery(gid)), 10, 6)
    assert certificate.free
    assert certificate.witness is None


@pytest.mark.parametrize("gid", COMPARABLE_FIXTURES + INCREASING_FIXTURES)
def test_shadow_has_one_triangle_per_triple(gid):
    family = gallery(gid)
    count = shadow_triangles(to_hypergraph(family))
    assert count.triangle_count == len(family)
    assert count.edge_count == 3 * len(family)


def test_single_edge_shadow():
    count = shadow_triangles(TripartiteHypergraph((1, 1, 1), ((1, 1, 1),)))
    assert (count.edge_count, count.triangle_count) == (3, 1)


def test_hypergraph_rejects_bad_edges():
    with pytest.raises(InvalidInputError):
        TripartiteHypergraph((2, 2, 2), ((1, 1, 3),))
    with pytest.raises(InvalidInputError):
        TripartiteHypergraph((2, 2, 2), ((1, 1, 1), (1, 1, 1)))


def test_hypergraph_dict_round_trip(n4):
    h = to_hypergraph(n4)
    assert TripartiteHypergraph.from_dict(h.to_dict()) == h


# ===== (u, v)-freeness =====


def test_single_edge_is_not_three_one_free():
    h = TripartiteHypergraph((1, 1, 1), ((1, 1, 1),))
    certificate = is_uv_free(h, 3, 1)
    assert not certificate
    assert certificate.witness == ((1, 1, 1),)
    assert is_uv_free(h, 2, 1).free


def test_square_spans_six_vertices():
    h = TripartiteHypergraph((2, 2, 2), SQUARE)
    assert h.is_linear
    assert span(SQUARE) == 6
    certificate = is_uv_free(h, 6, 4)
    assert not certificate.free
    assert certificate.witness == SQUARE
    assert is_uv_free(h, 5, 4).free


def test_more_edges_than_available_is_free(n4):
    assert is_uv_free(to_hypergraph(n4), 30, 9).free


def test_uv_free_budget(n4):
    with pytest.raises(BudgetExhaustedError) as info:
        is_uv_free(to_hypergraph(n4), 9, 5, max_nodes=1)
    assert info.value.partial["nodes_explored"] == 2


def test_uv_free_rejects_bad_parameters(n4):
    with pytest.raises(InvalidInputError):
        is_uv_free(to_hypergraph(n4), 9, 0)


@pytest.mark.parametrize("seed", range(20))
def test_uv_freeness_is_monotone_in_u(seed):
    rng = np.random.default_rng(seed)
    cells = list(itertools.product(range(1, 4), repeat=3))
    picked = rng.choice(len(cells), size=int(rng.integers(3, 9)), replace=False)
    h = TripartiteHypergraph((3, 3, 3), tuple(cells[i] for i in sorted(picked)))
    v = int(rng.integers(2, 5))
    verdicts = [is_uv_free(h, u, v).free for u in range(3, 3 * v + 1)]
    # once a u fails, every larger u fails too
    assert verdicts == sorted(verdicts, reverse=True)


def test_interleave_hypergraph_is_nine_five_free():
    assert is_uv_free(to_hypergraph(base_interleave(2, 3, 2)), 9, 5).free


# ===== labelled bipartite graphs =====


def test_from_bipartite_turns_labels_into_a_part():
    g = LabelledBipartite(2, 3, {(1, 2): 4, (2, 1): 1})
    h = from_bipartite(g)
    assert h.part_sizes == (2, 3, 4)
    assert h.edges == ((1, 2, 4), (2, 1, 1))


def test_from_bipartite_rejects_zero_label():
    with pytest.raises(InvalidInputError):
        from_bipartite(LabelledBipartite(1, 1, {(1, 1): 0}))


# ===== the Ruzsa equation =====


def test_small_sets():
    assert ruzsa_free({7})
    assert ruzsa_free({1, 2})
    assert ruzsa_solution({1, 2, 3}) == (1, 2, 3, 1)
    x, y, z, w = ruzsa_solution({1, 2, 3})
    assert 2 * x + 2 * y == z + 3 * w


def _all_solutions(a):
    return [
        (x, y, z, w)
        for x, y, z, w in itertools.product(sorted(a), repeat=4)
        if 2 * x + 2 * y == z + 3 * w and not x == y == z == w
    ]


def test_smallest_solution_wins_ties():
    solutions = _all_solutions({1, 2, 3})
    assert (1, 3, 2, 2) in solutions
    assert ruzsa_solution({1, 2, 3}) == min(solutions)


@pytest.mark.parametrize("seed", range(20))
def test_solution_matches_exhaustive_search(seed):
    rng = np.random.default_rng(seed)
    a = set(int(v) for v in rng.choice(np.arange(1, 25), size=int(rng.integers(1, 7)), replace=False))
    solutions = _all_solutions(a)
    assert ruzsa_solution(a) == (min(solutions) if solutions else None)
    assert ruzsa_free(a) == (not solutions)


def test_greedy_sets():
    assert ruzsa_greedy(1) == (1,)
    assert ruzsa_greedy(2) == (1, 2)
    chosen = ruzsa_greedy(60)
    assert ruzsa_free(chosen)
    assert ruzsa_greedy(60) == chosen
    with pytest.raises(InvalidInputError):
        ruzsa_greedy(0)


def test_ap3_witness():
    assert ap3_witness({1, 4, 7, 9}) == (1, 4, 7)
    assert ap3_free({1, 2, 4, 5})


@pytest.mark.parametrize("n", [10, 25, 40, 80])
def test_solution_free_sets_have_no_progressions(n):
    # (x, z, y, y) solves the equation whenever x, y, z is a progression
    assert ap3_free(ruzsa_greedy(n))


def test_ruzsa_graph_single_edge():
    g = ruzsa_graph({3}, 2)
    assert g.edges == {(2, 1): 1}
    assert ruzsa_graph(set(), 5).edges == {}


def test_ruzsa_graph_rejects_large_sums():
    with pytest.raises(InvalidInputError):
        ruzsa_graph({9}, 4)


def test_ruzsa_graph_is_linear():
    a = ruzsa_greedy(40)
    h = from_bipartite(ruzsa_graph(a, 20))
    assert h.is_linear


def test_greedy_graph_avoids_all_patterns():
    g = ruzsa_graph(ruzsa_greedy(50), 50)
    assert g.edges
    for pattern in ("aa", "aba", "abcab"):
        assert pattern_free(g, pattern).free, pattern


def test_progression_gives_an_aba_path():
    g = ruzsa_graph({4, 5, 6}, 6)
    certificate = pattern_free(g, "aba")
    assert not certificate.free
    a, b, c = certificate.labels
    assert a == c and a != b
    assert len(certificate.path) == 4
    assert len(set(certificate.path)) == 4


def test_equal_labels_on_incident_edges():
    g = LabelledBipartite(1, 2, {(1, 1): 5, (1, 2): 5})
    certificate = pattern_free(g, "aa")
    assert not certificate.free
    assert certificate.labels == (5, 5)
    assert pattern_free(g, "ab").free


def test_pattern_length_is_bounded():
    g = LabelledBipartite(1, 1, {(1, 1): 1})
    with pytest.raises(InvalidInputError):
        pattern_free(g, "abcdefg")
    with pytest.raises(InvalidInputError):
        pattern_free(g, "")


def test_case_check_on_small_instances():
    result = five_edge_case_check(max_total=7)
    assert result.instances > 0
    assert result.holds


@pytest.mark.slow
def test_case_check_up_to_nine():
    result = five_edge_case_check()
    assert result.holds
