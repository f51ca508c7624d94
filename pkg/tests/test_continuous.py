import math
from fractions import Fraction

import numpy as np
import pytest

from src.constructions import GalleryId, gallery
from src.continuous import (
    Cuboid,
    CuboidFamily,
    Filler,
    Interval,
    StepFunction,
    bisect_alpha,
    cross_profile,
    cuboids_comparable,
    discretize,
    eight_half_cubes,
    family_score,
    fill_block,
    five_cuboid_family,
    improve_shift,
    norm,
    optimize_x,
    refine,
    score,
    score_curve,
    solve_alpha,
    stretch,
    two_cuboid_family,
    unit_cube,
)
from src.continuous.discretize import axis_scales
from src.continuous.optimize import golden_section_max
from src.core import Box, InvalidInputError, Mode, TupleFamily, validate

X_STAR = (7 + math.sqrt(5)) / 22
BEST_HALF_SCORE = math.sqrt(13 / 22 + 5 * math.sqrt(5) / 22)


# ===== cuboids and scores =====


def test_interval_bounds():
    with pytest.raises(InvalidInputError):
        Interval(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(InvalidInputError):
        Interval(0, Fraction(3, 2))
    assert Interval.from_list([1, 3, 2, 3]) == Interval(Fraction(1, 3), Fraction(2, 3))


def test_overlapping_cuboids_rejected():
    half = Interval(0, Fraction(1, 2))
    whole = Interval(0, 1)
    with pytest.raises(InvalidInputError):
        CuboidFamily((Cuboid(half, half, whole), Cuboid(whole, half, half)))


def test_two_cuboids_score_one_at_half():
    assert score(two_cuboid_family(), 0.5) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.75, 1.0])
def test_unit_cube_scores_one(alpha):
    assert score(unit_cube(), alpha) == 1.0
    assert norm(unit_cube(), alpha) == 1.0


def test_five_cuboids_at_optimum():
    family = five_cuboid_family(X_STAR)
    assert len(family) == 5
    assert score(family, 0.5) == pytest.approx(BEST_HALF_SCORE, abs=1e-9)
    assert cuboids_comparable(family)


@pytest.mark.parametrize("x", ["1/10", "1/4", "1/3", "2/5", "9/20"])
@pytest.mark.parametrize("alpha", [0.4, 0.5, 0.6, 1.0])
def test_closed_form_matches_cuboids(x, alpha):
    x = Fraction(x)
    assert family_score(float(x), alpha) == pytest.approx(score(five_cuboid_family(x), alpha), rel=1e-12)


def test_equal_cuts_give_five_over_root_27():
    assert family_score(1 / 3, 0.5) == pytest.approx(5 / math.sqrt(27), rel=1e-12)


def test_score_rejects_bad_alpha():
    with pytest.raises(InvalidInputError):
        score(unit_cube(), 0)
    with pytest.raises(InvalidInputError):
        family_score(0.6, 0.5)


def test_comparability_of_builders():
    assert cuboids_comparable(two_cuboid_family())
    assert cuboids_comparable(two_cuboid_family(), Mode.INCREASING)
    assert not cuboids_comparable(eight_half_cubes())
    assert cuboids_comparable(CuboidFamily.from_tuples(gallery("n4")), Mode.INCREASING)


def test_refine_squares_the_score():
    b = two_cuboid_family()
    refined = refine(b, b)
    assert len(refined) == 4
    for alpha in (0.4, 0.5, 0.7):
        assert score(refined, alpha) == pytest.approx(score(b, alpha) ** 2, rel=1e-12)
    assert cuboids_comparable(refined)


def test_stretch_needs_full_cuts(comp5):
    with pytest.raises(InvalidInputError):
        stretch(comp5, ((0, Fraction(1, 2), 1),) * 3)


def test_cuboid_list_round_trip():
    family = five_cuboid_family(Fraction(2, 5))
    assert CuboidFamily.from_list(family.to_list()) == family


# ===== one-parameter optimization =====


def test_golden_section_finds_parabola_peak():
    c, d = golden_section_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0, tol=1e-9)
    assert c <= 0.3 + 1e-9 and d >= 0.3 - 1e-9
    assert d - c <= 1e-9


def test_optimize_x_at_half():
    result = optimize_x(0.5)
    assert result.x_star == pytest.approx(X_STAR, abs=1e-6)
    assert result.value == pytest.approx(BEST_HALF_SCORE, abs=1e-9)


def test_optimize_x_at_one_peaks_on_the_boundary():
    result = optimize_x(1.0)
    assert result.value == pytest.approx(0.25, abs=1e-6)
    assert result.x_star > 0.499


def test_optimize_x_rejects_alpha_out_of_range():
    with pytest.raises(InvalidInputError):
        optimize_x(1.5)


def test_score_curve_columns():
    curve = score_curve(0.5, points=50)
    assert list(curve.columns) == ["x", "value"]
    assert len(curve) == 50
    assert curve["x"].between(0, 0.5, inclusive="neither").all()


def test_solve_alpha_bracket():
    alpha = solve_alpha(1e-5)
    assert 0.5154 <= alpha <= 0.5155


def test_bisection_trace_is_monotone():
    search = bisect_alpha(1e-4)
    trace = search.trace
    assert list(trace.columns) == ["step", "alpha", "x_star", "value", "holds"]
    ordered = trace.sort_values("alpha")
    assert (ordered["value"].diff().dropna() <= 1e-12).all()
    assert search.exponent == pytest.approx(3 * search.alpha)
    assert trace.loc[trace["holds"], "value"].min() >= 1.0


def test_bisection_rejects_tiny_tolerance():
    with pytest.raises(InvalidInputError):
        bisect_alpha(1e-15)


# ===== profiles and shifts =====


def test_profile_of_grid10_layers(grid10):
    profile = cross_profile(CuboidFamily.from_tuples(grid10), 3, 0.5)
    assert profile.breakpoints == tuple(Fraction(i, 4) for i in range(5))
    assert profile.values == pytest.approx((1.2, 0.8, 0.8, 1.2), rel=1e-12)
    assert not profile.is_constant()
    assert profile(0.1) == pytest.approx(1.2)


def test_step_function_rejects_breakpoints():
    f = StepFunction((Fraction(0), Fraction(1, 2), Fraction(1)), (1.0, 2.0))
    assert f(0.75) == 2.0
    with pytest.raises(InvalidInputError):
        f(Fraction(1, 2))


def test_improve_shift_raises_grid10_score(grid10):
    b = CuboidFamily.from_tuples(grid10)
    outcome = improve_shift(b, 3, 0.5)
    assert outcome.improved
    assert outcome.score_before == pytest.approx(1.0)
    assert outcome.score_after > outcome.score_before
    assert outcome.delta == Fraction(1, 8)
    assert len(outcome.family) == len(b)
    assert cuboids_comparable(outcome.family)


def test_unit_cube_is_balanced():
    outcome = improve_shift(unit_cube(), 1, 0.5)
    assert outcome.status == "balanced"
    assert outcome.family is None


def test_optimal_five_cuboids_are_nearly_balanced():
    b = five_cuboid_family(X_STAR)
    outcome = improve_shift(b, 1, 0.5)
    assert outcome.score_after - outcome.score_before < 1e-9


def test_improve_shift_rejects_bad_axis():
    with pytest.raises(InvalidInputError):
        improve_shift(unit_cube(), 4, 0.5)


def _random_stretch(rng, family):
    cuts = []
    for n in family.box.dims:
        inner = sorted(rng.choice(np.arange(1, 60), size=n - 1, replace=False))
        cuts.append([Fraction(0)] + [Fraction(int(c), 60) for c in inner] + [Fraction(1)])
    return stretch(family, cuts)


@pytest.mark.parametrize("seed", range(100))
def test_improve_shift_never_lowers_the_score(seed):
    rng = np.random.default_rng(seed)
    source = gallery([GalleryId.GRID10_554, GalleryId.N4_LEN8, GalleryId.COMP5_3CUBE][seed % 3])
    b = _random_stretch(rng, source)
    alpha = float(rng.choice([0.5, 0.6, 0.75]))
    axis = int(rng.integers(1, 4))
    outcome = improve_shift(b, axis, alpha)
    assert outcome.score_after >= outcome.score_before
    if outcome.improved:
        assert outcome.score_after > outcome.score_before
        assert cuboids_comparable(outcome.family) == cuboids_comparable(b)


# ===== discretization =====


def test_discretize_five_cuboids_gives_fig2a():
    result = discretize(five_cuboid_family(Fraction(4, 9)))
    assert result.scale == (9, 9, 9)
    assert result.block_counts == (8, 4, 4, 4, 8)
    assert len(result.family) == 28
    assert set(result.family.tuples) == set(gallery("fig2a_28").tuples)
    assert validate(result.family).valid


def test_discretize_unit_cube():
    result = discretize(unit_cube(), scale=(2, 2, 2))
    assert len(result.family) == 2
    assert validate(result.family).valid


def test_discretize_two_cuboids_default_scale():
    b = two_cuboid_family()
    assert axis_scales(b) == (2, 2, 1)
    result = discretize(b)
    assert result.block_counts == (1, 1)
    assert validate(result.family).valid


def test_discretize_rejects_scale_that_leaves_fractions():
    with pytest.raises(InvalidInputError):
        discretize(five_cuboid_family(Fraction(4, 9)), scale=(3, 3, 3))


def test_discretize_rejects_incomparable_cuboids():
    with pytest.raises(InvalidInputError):
        discretize(eight_half_cubes())


@pytest.mark.parametrize("dims", [(4, 4, 4), (4, 1, 4), (9, 9, 2), (1, 1, 1), (3, 5, 2)])
@pytest.mark.parametrize("filler", list(Filler))
def test_block_fillers_stay_inside_and_comparable(dims, filler):
    triples = fill_block(dims, filler)
    assert triples
    assert all(1 <= c <= n for t in triples for c, n in zip(t, dims))
    family = TupleFamily(Box(dims), 2, Mode.COMPARABLE, tuple(triples))
    assert validate(family).valid


def test_discretize_preserves_validity_of_random_stretches():
    rng = np.random.default_rng(5)
    for _ in range(3):
        b = _random_stretch(rng, gallery("grid10"))
        result = discretize(b)
        assert validate(result.family).valid
        assert len(result.family) >= len(b)
