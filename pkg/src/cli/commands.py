"""
Command-line interface.

Every subcommand prints its result to stdout, writes machine-readable output
with --out and leaves a run manifest next to that output.

Exit status: 0 success, 1 a check failed, 2 usage or input error,
3 a search or enumeration ran out of budget.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from loguru import logger

from src.cli.manifest import RunManifest
from src.config import (
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_SECONDS,
    DEFAULT_SEED,
    OPTIMIZE_SCAN_POINTS,
    RATIONAL_SNAP_DENOMINATOR,
)
from src.constructions import (
    affine_code,
    base_interleave,
    cyclic_boost,
    gallery,
    product,
    resolve_gallery_id,
)
from src.constructions.gallery import GalleryId
from src.continuous import (
    CuboidFamily,
    Filler,
    bisect_alpha,
    cross_profile,
    discretize,
    eight_half_cubes,
    five_cuboid_family,
    improve_shift,
    optimize_x,
    score,
    score_curve,
    two_cuboid_family,
    unit_cube,
)
from src.core import (
    Box,
    BudgetExhaustedError,
    CombinatoricsError,
    InvalidInputError,
    Mode,
    TupleFamily,
    from_grid,
    grid_conditions,
    parse_ascii,
    render_ascii,
    to_grid,
    validate,
)
from src.decompose import decompose_all, decompose_check, render_blocks
from src.hypergraph import (
    five_edge_case_check,
    is_uv_free,
    pattern_free,
    ruzsa_free,
    ruzsa_graph,
    ruzsa_greedy,
    ruzsa_solution,
    shadow_triangles,
    to_hypergraph,
)
from src.search import (
    GrowthKind,
    GrowthPolicy,
    SearchBudget,
    grow_many,
    max_comparable,
    max_increasing,
    prek_max,
    random_grow,
    sampling_experiment,
)
from src.utils.helpers import configure_logging, load_json, save_json, save_table

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


# ========================================================================
# ARGUMENT HELPERS
# ========================================================================


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got '{text}'") from e


def _box(text: str) -> Box:
    try:
        return Box.parse(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _load_family(args: argparse.Namespace, name: str = "input", gallery_name: str = "gallery") -> TupleFamily:
    path = getattr(args, name, None)
    gid = getattr(args, gallery_name, None)
    if path:
        return TupleFamily.from_dict(load_json(path))
    if gid:
        family = gallery(gid)
        if not isinstance(family, TupleFamily):
            raise InvalidInputError(f"gallery entry '{gid}' is not a tuple family")
        return family
    raise InvalidInputError(f"give --{name} FILE or --{gallery_name} ID")


def _family_or_gallery(text: str) -> TupleFamily:
    """A JSON file path or a gallery id."""
    if Path(text).is_file():
        return TupleFamily.from_dict(load_json(text))
    return gallery(text)


def _load_cuboids(args: argparse.Namespace) -> CuboidFamily:
    if args.cuboids:
        return CuboidFamily.from_list(load_json(args.cuboids))
    named = args.family
    if named == "five":
        if args.x == "opt":
            return five_cuboid_family(Fraction(optimize_x(args.alpha).x_star).limit_denominator(RATIONAL_SNAP_DENOMINATOR))
        return five_cuboid_family(Fraction(args.x))
    if named == "grid10":
        return CuboidFamily.from_tuples(gallery(GalleryId.GRID10_554))
    builders: Dict[str, Callable[[], CuboidFamily]] = {
        "unit": unit_cube,
        "two": two_cuboid_family,
        "eight": eight_half_cubes,
    }
    return builders[named]()


def _print_family(family: TupleFamily):
    print(f"box: {family.box}  s={family.s}  mode={family.mode.value}  size={len(family)}")
    for t in family.tuples:
        print(" ".join(str(c) for c in t))


def _write(args: argparse.Namespace, payload) -> None:
    if args.out and not save_json(payload, args.out):
        raise OSError(f"could not write {args.out}")


# ========================================================================
# CORE AND CONSTRUCTIONS
# ========================================================================


def cmd_validate(args: argparse.Namespace) -> int:
    family = _load_family(args)
    if args.mode:
        family = family.with_mode(Mode(args.mode))
    if args.s:
        family = TupleFamily(family.box, args.s, family.mode, family.tuples)
    report = validate(family)
    print(f"{'valid' if report.valid else 'invalid'}: {len(family)} tuples, s={family.s}, mode={family.mode.value}")
    for failure in report.failures[: args.show]:
        print(f"  {failure.kind.value}: {list(failure.indices)}")
    if report.failure_count > args.show:
        print(f"  ... {report.failure_count} failures in total")
    _write(args, report.to_dict())
    return EXIT_OK if report.valid else EXIT_CHECK_FAILED


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "base-interleave":
        family = base_interleave(args.m, args.r, args.s)
    elif args.kind == "product":
        family = product(_family_or_gallery(args.left), _family_or_gallery(args.right))
    elif args.kind == "boost":
        family = cyclic_boost(_load_family(args))
    elif args.kind == "affine":
        family = affine_code(args.q, args.k)
    else:
        result = discretize(_load_cuboids(args), Filler(args.filler), args.scale)
        print(f"blocks: {list(result.block_counts)}")
        family = result.family
    report = validate(family)
    print(f"{args.kind}: {len(family)} tuples in {family.box}, {'valid' if report.valid else 'INVALID'}")
    if args.show_tuples:
        _print_family(family)
    _write(args, family.to_dict())
    return EXIT_OK if report.valid else EXIT_CHECK_FAILED


def cmd_gallery(args: argparse.Namespace) -> int:
    gid = resolve_gallery_id(args.id)
    if gid is GalleryId.PREK_SHARP:
        cells = sorted(gallery(gid, n=args.n))
        print(f"prek_sharp({args.n}): {len(cells)} cells")
        for cell in cells:
            print(f"{cell[0]} {cell[1]}")
        _write(args, {"n": args.n, "cells": [list(c) for c in cells]})
        return EXIT_OK
    family = gallery(gid)
    if args.render == "grid":
        print(render_ascii(to_grid(family, args.label_coord)))
    elif args.render == "json":
        print(json.dumps(family.to_dict()))
    else:
        _print_family(family)
    _write(args, family.to_dict())
    return EXIT_OK


def cmd_grid(args: argparse.Namespace) -> int:
    if args.from_ascii:
        grid = parse_ascii(Path(args.from_ascii).read_text(encoding="utf-8"), args.label_coord)
        family = from_grid(grid)
        _print_family(family)
        _write(args, family.to_dict())
    else:
        grid = to_grid(_load_family(args), args.label_coord)
        print(render_ascii(grid))
        _write(args, grid.to_dict())
    if args.plot:
        from src.visualization import plot_grid_heatmap

        plot_grid_heatmap(grid, args.plot)
    return EXIT_OK


def cmd_conditions(args: argparse.Namespace) -> int:
    report = grid_conditions(to_grid(_load_family(args), args.label_coord))
    for name, result in report.as_dict().items():
        witness = "" if result.holds else f"  witness: {list(result.witness)}"
        print(f"{name}: {'holds' if result.holds else 'fails'}{witness}")
    _write(args, report.to_dict())
    return EXIT_OK


# ========================================================================
# SEARCH
# ========================================================================


def cmd_search(args: argparse.Namespace) -> int:
    budget = SearchBudget(args.max_nodes, args.max_seconds)
    if args.mode == "prek":
        report = prek_max(args.n, budget)
    elif args.mode == "increasing":
        report = max_increasing(args.dims, args.s, budget, args.threads)
    else:
        report = max_comparable(args.dims, args.s, budget, args.threads)
    status = "optimal" if report.proven_optimal else f"lower bound (upper bound {report.upper_bound})"
    print(f"{report.optimum}")
    print(f"{status}, {report.nodes_explored} nodes, {report.wall_time:.2f}s")
    _print_family(report.witness)
    _write(args, report.to_dict())
    return EXIT_OK if report.proven_optimal else EXIT_BUDGET


def cmd_grow(args: argparse.Namespace) -> int:
    kind = GrowthKind(args.policy)
    if args.runs > 1:
        runs = grow_many(args.dims, args.s, kind, range(args.seed, args.seed + args.runs))
        print(runs["length"].describe().to_string())
        if args.out and not save_table(runs, args.out):
            raise OSError(f"could not write {args.out}")
        if args.plot:
            from src.visualization import plot_length_histogram

            plot_length_histogram(runs, args.plot)
        return EXIT_OK
    family = random_grow(args.dims, args.s, GrowthPolicy(kind, args.seed))
    print(f"{len(family)}")
    _print_family(family)
    _write(args, family.to_dict())
    return EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    runs = sampling_experiment(args.n, args.r, args.beta, args.sample_size, range(args.seed, args.seed + args.runs))
    summary = runs.groupby(["r", "s"])["retained"].mean().reset_index()
    print(summary.to_string(index=False))
    if args.out and not save_table(runs, args.out):
        raise OSError(f"could not write {args.out}")
    if args.plot:
        from src.visualization import plot_length_histogram

        plot_length_histogram(runs, args.plot, column="retained")
    return EXIT_OK


# ========================================================================
# CONTINUOUS
# ========================================================================


def cmd_alpha(args: argparse.Namespace) -> int:
    search = bisect_alpha(args.tol)
    print(f"{search.alpha:.10f}")
    print(f"exponent 3*alpha = {search.exponent:.6f}, {len(search.trace)} evaluations")
    if args.out and not save_table(search.trace, args.out):
        raise OSError(f"could not write {args.out}")
    if args.plot:
        from src.visualization import plot_alpha_trace

        plot_alpha_trace(search.trace, args.plot)
    return EXIT_OK


def cmd_optimize_x(args: argparse.Namespace) -> int:
    result = optimize_x(args.alpha)
    print(f"x* = {result.x_star:.12f}")
    print(f"score = {result.value:.12f}")
    curve = score_curve(args.alpha, args.points)
    if args.out and not save_table(curve, args.out):
        raise OSError(f"could not write {args.out}")
    if args.plot:
        from src.visualization import plot_score_curve

        plot_score_curve(curve, result, args.plot)
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    cuboids = _load_cuboids(args)
    profile = cross_profile(cuboids, args.axis, args.alpha)
    print(f"score = {score(cuboids, args.alpha):.12f}")
    for lo, hi, value in profile.pieces():
        print(f"({lo}, {hi}): {value:.12f}")
    print("constant" if profile.is_constant() else "not constant")
    _write(args, profile.to_dict())
    return EXIT_OK


def cmd_improve(args: argparse.Namespace) -> int:
    outcome = improve_shift(_load_cuboids(args), args.axis, args.alpha)
    print(outcome.status)
    print(f"score {outcome.score_before:.12f} -> {outcome.score_after:.12f}")
    if outcome.diagnostics:
        print(outcome.diagnostics)
    if outcome.family is not None:
        _write(args, outcome.family.to_list())
    return EXIT_OK


# ========================================================================
# DECOMPOSITION AND HYPERGRAPHS
# ========================================================================


def cmd_decompose(args: argparse.Namespace) -> int:
    family = _load_family(args)
    summary = None if args.label_coord else decompose_all(family)
    results = list(summary.results) if summary else [decompose_check(family, args.label_coord)]
    for result in results:
        print(f"label coordinate {result.label_coord}: {result.status}, classes {[list(c) for c in result.classes]}")
        if result.decomposable and args.render:
            print(render_blocks(to_grid(family, result.label_coord), result))
    if summary is None:
        _write(args, results[0].to_dict())
        return EXIT_OK
    print(f"verdict: {summary.verdict}")
    _write(args, summary.to_dict())
    return EXIT_OK


def cmd_hyper(args: argparse.Namespace) -> int:
    h = to_hypergraph(_load_family(args))
    if args.action == "build":
        print(f"{len(h)} edges, parts {h.part_sizes}, {'linear' if h.is_linear else 'not linear'}")
        _write(args, h.to_dict())
        return EXIT_OK
    if args.action == "triangles":
        count = shadow_triangles(h)
        print(f"shadow edges {count.edge_count}, triangles {count.triangle_count}")
        _write(args, {"edge_count": count.edge_count, "triangle_count": count.triangle_count})
        return EXIT_OK
    certificate = is_uv_free(h, args.u, args.v)
    print(f"({args.u},{args.v})-free: {certificate.free}")
    if certificate.witness:
        print(f"witness: {[list(e) for e in certificate.witness]}")
    _write(args, certificate.to_dict())
    return EXIT_OK if certificate.free else EXIT_CHECK_FAILED


def cmd_ruzsa(args: argparse.Namespace) -> int:
    if args.action == "greedy":
        chosen = ruzsa_greedy(args.n)
        print(" ".join(map(str, chosen)))
        _write(args, {"n": args.n, "set": list(chosen)})
        return EXIT_OK
    if args.action == "cases":
        result = five_edge_case_check()
        print(f"{result.instances} instances, {len(result.counterexamples)} without a pattern")
        _write(args, {"instances": result.instances, "counterexamples": [g.to_dict() for g in result.counterexamples]})
        return EXIT_OK if result.holds else EXIT_CHECK_FAILED
    values = args.set if args.set is not None else list(ruzsa_greedy(args.n))
    if args.action == "check":
        solution = ruzsa_solution(values)
        print(f"solution-free: {solution is None}")
        if solution:
            print(f"solution (x, y, z, w) = {solution}")
        _write(args, {"set": values, "free": solution is None, "solution": solution})
        return EXIT_OK if solution is None else EXIT_CHECK_FAILED
    g = ruzsa_graph(values, args.n)
    if args.action == "graph":
        print(f"{len(g.edges)} edges on [{args.n}] x [{args.n}], free of solutions: {ruzsa_free(values)}")
        _write(args, g.to_dict())
        return EXIT_OK
    certificates = [pattern_free(g, pattern) for pattern in args.patterns]
    for cert in certificates:
        print(f"{cert.pattern}: {'free' if cert.free else 'found'}" + ("" if cert.free else f" {list(cert.labels)}"))
    _write(args, [c.to_dict() for c in certificates])
    return EXIT_OK if all(c.free for c in certificates) else EXIT_CHECK_FAILED


# ========================================================================
# PARSER
# ========================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write machine-readable output here")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of every random choice")
    common.add_argument("--threads", type=int, default=1, help="worker processes for exact searches")
    common.add_argument("--plot", help="write a chart here, where the command has one")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    family_args = argparse.ArgumentParser(add_help=False)
    family_args.add_argument("--input", help="tuple family JSON file")
    family_args.add_argument("--gallery", help="gallery fixture id")

    cuboid_args = argparse.ArgumentParser(add_help=False)
    cuboid_args.add_argument("--cuboids", help="cuboid family JSON file")
    cuboid_args.add_argument("--family", choices=["unit", "two", "eight", "five", "grid10"], default="five")
    cuboid_args.add_argument("--x", default="opt", help="cut of the five-cuboid family, a fraction or 'opt'")
    cuboid_args.add_argument("--alpha", type=float, default=0.5)

    parser = argparse.ArgumentParser(prog="main.py", description="Extremal s-comparable families toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common, family_args], help="check a family against its mode")
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--s", type=int)
    p.add_argument("--show", type=int, default=10, help="failures to print")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("search", parents=[common], help="exact maximum by branch and bound")
    p.add_argument("--dims", type=_box, default=Box.cube(3, 3))
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--mode", choices=["increasing", "comparable", "prek"], default="increasing")
    p.add_argument("--n", type=int, default=3, help="grid side for prek")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--max-seconds", type=float, default=DEFAULT_MAX_SECONDS)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("construct", parents=[common, family_args, cuboid_args], help="explicit constructions")
    p.add_argument("kind", choices=["base-interleave", "product", "boost", "affine", "discretize"])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--left", help="family file or gallery id")
    p.add_argument("--right", help="family file or gallery id")
    p.add_argument("--filler", choices=[f.value for f in Filler], default=Filler.AUTO.value)
    p.add_argument("--scale", type=_int_list)
    p.add_argument("--show-tuples", action="store_true")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("gallery", parents=[common], help="print a stored example")
    p.add_argument("id")
    p.add_argument("--render", choices=["tuples", "grid", "json"], default="tuples")
    p.add_argument("--label-coord", type=int, default=3)
    p.add_argument("--n", type=int, default=4, help="grid side for prek_sharp")
    p.set_defaults(handler=cmd_gallery)

    p = sub.add_parser("grid", parents=[common, family_args], help="draw a family as a labelled grid")
    p.add_argument("--label-coord", type=int, default=3)
    p.add_argument("--from-ascii", help="read an ASCII grid and print its triples")
    p.set_defaults(handler=cmd_grid)

    p = sub.add_parser("conditions", parents=[common, family_args], help="grid conditions C1 to C4")
    p.add_argument("--label-coord", type=int, default=3)
    p.set_defaults(handler=cmd_conditions)

    p = sub.add_parser("alpha", parents=[common], help="bisect for the best exponent")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(handler=cmd_alpha)

    p = sub.add_parser("optimize-x", parents=[common], help="best cut of the five-cuboid family")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--points", type=int, default=OPTIMIZE_SCAN_POINTS)
    p.set_defaults(handler=cmd_optimize_x)

    p = sub.add_parser("profile", parents=[common, cuboid_args], help="cross-section profile")
    p.add_argument("--axis", type=int, choices=[1, 2, 3], default=1)
    p.set_defaults(handler=cmd_profile)

    p = sub.add_parser("improve", parents=[common, cuboid_args], help="score-raising axis shift")
    p.add_argument("--axis", type=int, choices=[1, 2, 3], default=1)
    p.set_defaults(handler=cmd_improve)

    p = sub.add_parser("decompose", parents=[common, family_args], help="decomposability test")
    p.add_argument("--label-coord", type=int, choices=[1, 2, 3])
    p.add_argument("--render", action="store_true", help="print block overlays")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("hyper", parents=[common, family_args], help="hypergraph view of a triple family")
    p.add_argument("action", choices=["build", "free", "triangles"])
    p.add_argument("--u", type=int, default=10)
    p.add_argument("--v", type=int, default=6)
    p.set_defaults(handler=cmd_hyper)

    p = sub.add_parser("ruzsa", parents=[common], help="solution-free sets and their graphs")
    p.add_argument("action", choices=["check", "greedy", "graph", "patterns", "cases"])
    p.add_argument("--set", type=_int_list)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--patterns", nargs="+", default=["aa", "aba", "abcab"])
    p.set_defaults(handler=cmd_ruzsa)

    p = sub.add_parser("grow", parents=[common], help="random maximal increasing sequences")
    p.add_argument("--dims", type=_box, default=Box.cube(4, 3))
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--policy", choices=[k.value for k in GrowthKind], default=GrowthKind.UNIFORM_MINIMAL.value)
    p.add_argument("--runs", type=int, default=1)
    p.set_defaults(handler=cmd_grow)

    p = sub.add_parser("sample", parents=[common], help="random comparable families by deletion")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=_int_list, default=[16, 32, 64])
    p.add_argument("--beta", type=Fraction, default=Fraction(1, 8))
    p.add_argument("--sample-size", type=int, default=200)
    p.add_argument("--runs", type=int, default=20)
    p.set_defaults(handler=cmd_sample)

    return parser


_INPUT_ATTRIBUTES = ("input", "cuboids", "left", "right", "from_ascii")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses arguments, dispatches and records the run.

    Returns:
        Exit status
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    configure_logging(args.verbose)
    manifest = RunManifest.start(args.command, argv, args.seed)
    try:
        status = args.handler(args)
    except BudgetExhaustedError as e:
        print(f"[CLI] Error: {e}", file=sys.stderr)
        status = EXIT_BUDGET
    except InvalidInputError as e:
        print(f"[CLI] Error: {e}", file=sys.stderr)
        status = EXIT_USAGE
    except CombinatoricsError as e:
        print(f"[CLI] Error: {e}", file=sys.stderr)
        status = EXIT_CHECK_FAILED
    except (OSError, json.JSONDecodeError) as e:
        print(f"[CLI] Error: {e}", file=sys.stderr)
        status = EXIT_USAGE

    if args.out and Path(args.out).is_file():
        inputs = [getattr(args, name, None) for name in _INPUT_ATTRIBUTES]
        outputs = [args.out] + ([args.plot] if args.plot else [])
        manifest.finish(status, inputs, outputs).write(args.out)
        logger.info(f"[CLI] manifest written next to {args.out}")
    return status
