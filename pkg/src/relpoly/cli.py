"""Command-line interface.

Subcommands: exact, closed-form, mc, laplace, approx, cutsets, kgrip,
generate, compare. Outputs are byte-reproducible for identical arguments:
curves go to CSV ("p,value" with 17 significant digits) with a JSON
metadata sidecar, coefficient vectors and plans go to JSON. Exit codes:
0 success, 1 computation/domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import approx, cutset, exact, kgrip, montecarlo
from .curve import Curve, probability_grid
from .errors import CapacityError, EdgeListFormatError
from .graph import (
    Graph,
    complete_graph,
    complete_pendant_graph,
    cycle_graph,
    generate_ba,
    generate_er,
    generate_lattice,
    generate_rgg,
    load_edge_list,
    path_graph,
    save_edge_list,
    star_graph,
    star_pendant_graph,
)

_FAMILY_BUILDERS = {
    "complete": complete_graph,
    "complete-pendant": complete_pendant_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
    "star-pendant": star_pendant_graph,
}


class UsageError(Exception):
    pass


def _parse_gen_spec(spec: str, seed: int) -> Graph:
    """Inline generator specs: er:N,PL  rgg:N,R  ba:N,M  lattice:D1xD2[xD3]."""
    try:
        name, _, args = spec.partition(":")
        if name == "er":
            n_s, p_s = args.split(",")
            return generate_er(int(n_s), float(p_s), seed)
        if name == "rgg":
            n_s, r_s = args.split(",")
            return generate_rgg(int(n_s), float(r_s), seed)
        if name == "ba":
            n_s, m_s = args.split(",")
            return generate_ba(int(n_s), int(m_s), seed)
        if name == "lattice":
            dims = [int(d) for d in args.split("x")]
            return generate_lattice(dims)
    except ValueError as err:
        raise UsageError(f"bad generator spec {spec!r}: {err}") from None
    raise UsageError(f"unknown generator {name!r}; use er, rgg, ba, or lattice")


def _load_graph(args) -> tuple:
    """Resolve --input / --gen / --family into (graph, label)."""
    sources = [s for s in ("input", "gen", "family") if getattr(args, s, None)]
    if len(sources) != 1:
        raise UsageError("exactly one of --input, --gen, or --family is required")
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            return load_edge_list(fh.read()), args.input
    if getattr(args, "gen", None):
        return _parse_gen_spec(args.gen, getattr(args, "gen_seed", 0)), args.gen
    if args.n is None:
        raise UsageError("--family requires --n")
    builder = _FAMILY_BUILDERS.get(args.family)
    if builder is None:
        raise UsageError(f"unknown family {args.family!r}")
    return builder(args.n), f"{args.family}:{args.n}"


def _grid_from(args):
    if getattr(args, "ps", None):
        pts = tuple(float(x) for x in args.ps.split(","))
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise UsageError("--ps must be strictly increasing")
        if any(p < 0 or p > 1 for p in pts):
            raise UsageError("--ps values must lie in [0, 1]")
        return pts
    return probability_grid(args.grid)


def _write(path, text):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_curve(curve: Curve, args, label):
    meta = dict(curve.metadata)
    meta.setdefault("graph", label)
    meta.setdefault("seed", getattr(args, "seed", None))
    meta.setdefault("runs", getattr(args, "runs", None))
    out = Curve(curve.grid, curve.values, meta)
    _write(args.out, out.to_csv())
    if args.out:
        with open(args.out + ".meta.json", "w", encoding="utf-8", newline="") as fh:
            fh.write(out.metadata_json())


def _workers(args):
    return montecarlo.resolve_workers(getattr(args, "workers", None) or os.cpu_count())


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_generate(args):
    graph = _parse_gen_spec(args.gen, args.gen_seed)
    _write(args.out, save_edge_list(graph))
    return 0


def _cmd_exact(args):
    graph, label = _load_graph(args)
    grid = _grid_from(args)
    if args.kind == "node":
        coeffs = exact.enumerate_node_coefficients(graph, cap=args.cap)
        values = tuple(exact.node_reliability_s_form(coeffs, p) for p in grid)
    else:
        coeffs = exact.enumerate_link_coefficients(graph, cap=args.cap)
        values = tuple(exact.link_reliability(coeffs, p) for p in grid)
    if args.coeffs_out:
        _write(args.coeffs_out, coeffs.to_json())
    curve = Curve(grid, values, {"method": "exact", "kind": args.kind})
    _emit_curve(curve, args, label)
    return 0


def _cmd_closed_form(args):
    grid = _grid_from(args)
    values = tuple(exact.closed_form_eval(args.family, args.n, p) for p in grid)
    curve = Curve(grid, values, {"method": "closed-form", "kind": "node"})
    _emit_curve(curve, args, f"{args.family}:{args.n}")
    return 0


def _cmd_mc(args):
    graph, label = _load_graph(args)
    grid = _grid_from(args)
    if args.kind == "node":
        est = montecarlo.estimate_node_cut_fractions(graph, args.runs, args.seed, _workers(args))
        curve = montecarlo.node_reliability_curve(est, grid)
    else:
        est = montecarlo.estimate_link_cut_fractions(graph, args.runs, args.seed, _workers(args))
        curve = montecarlo.link_reliability_curve(est, grid)
    _emit_curve(curve, args, label)
    return 0


def _cmd_laplace(args):
    graph, label = _load_graph(args)
    grid = _grid_from(args)
    if args.source == "exact":
        source = exact.enumerate_node_coefficients(graph, cap=args.cap)
    else:
        source = montecarlo.estimate_node_cut_fractions(graph, args.runs, args.seed, _workers(args))
    curve = montecarlo.laplace_curve(source, grid, basis=args.basis)
    _emit_curve(curve, args, label)
    return 0


def _cmd_approx(args):
    if args.method == "stochastic":
        graph, label = _load_graph(args)
        grid = _grid_from(args)
        if args.kind == "node":
            curve = approx.stochastic_node_curve(graph, grid, label)
        else:
            curve = approx.stochastic_link_curve(graph, grid, label)
        _emit_curve(curve, args, label)
        return 0
    if args.method == "bounds":
        graph, label = _load_graph(args)
        grid = _grid_from(args)
        fn = approx.arithmetic_upper_bound if args.bound == "arith" else approx.geometric_upper_bound
        values = tuple(fn(graph, p) for p in grid)
        curve = Curve(grid, values, {"method": f"bound-{args.bound}", "kind": "node"})
        _emit_curve(curve, args, label)
        return 0
    if args.method == "er":
        if args.n is None or args.pl is None:
            raise UsageError("approx er needs --n and --pl")
        model = approx.ErModel(args.n, args.pl)
        grid = _grid_from(args)
        values = tuple(approx.er_node_reliability(model, p) for p in grid)
        curve = Curve(grid, values, {"method": "er-formula", "kind": "node"})
        _emit_curve(curve, args, f"er:{args.n},{args.pl}")
        return 0
    if args.method == "rgg":
        if args.n is None or args.r is None:
            raise UsageError("approx rgg needs --n and --r")
        model = approx.RggModel(args.n, args.r)
        grid = _grid_from(args)
        # the formula needs at least one expected survivor; skip grid points below that
        kept = tuple(p for p in grid if args.n * p >= 1.0)
        if len(kept) < len(grid):
            print(
                f"note: dropped {len(grid) - len(kept)} grid points with N*p < 1",
                file=sys.stderr,
            )
        if len(kept) < 2:
            raise ValueError("grid has fewer than two points with N*p >= 1")
        values = tuple(approx.rgg_node_reliability(model, p) for p in kept)
        curve = Curve(kept, values, {"method": "rgg-formula", "kind": "node"})
        _emit_curve(curve, args, f"rgg:{args.n},{args.r}")
        return 0
    if args.method == "er-intersection":
        if None in (args.n, args.pl, args.n2, args.pl2):
            raise UsageError("approx er-intersection needs --n, --pl, --n2, and --pl2")
        res = approx.er_intersection(approx.ErModel(args.n, args.pl), approx.ErModel(args.n2, args.pl2))
        payload = {"p": res.p, "value": res.value, "inside": res.inside}
        if res.note:
            payload["note"] = res.note
        _write(args.out, json.dumps(payload, sort_keys=True) + "\n")
        return 0
    if args.method == "er-width":
        if args.n is None or args.pl is None:
            raise UsageError("approx er-width needs --n and --pl")
        width = approx.er_transition_width(approx.ErModel(args.n, args.pl), args.lo, args.hi)
        _write(args.out, json.dumps({"width": width}, sort_keys=True) + "\n")
        return 0
    raise UsageError(f"unknown approx method {args.method!r}")


def _cmd_cutsets(args):
    graph, label = _load_graph(args)
    if args.kind == "node":
        dim = graph.num_nodes
        if args.source == "exact":
            coeffs = exact.enumerate_node_coefficients(graph, cap=args.cap)
            source = cutset.exact_node_curve_source(coeffs)
        else:
            est = montecarlo.estimate_node_cut_fractions(graph, args.runs, args.seed, _workers(args))
            source = cutset.estimate_curve_source(est)
    else:
        dim = graph.num_links
        if args.source == "exact":
            coeffs = exact.enumerate_link_coefficients(graph, cap=args.cap)
            source = cutset.exact_link_curve_source(coeffs)
        else:
            est = montecarlo.estimate_link_cut_fractions(graph, args.runs, args.seed, _workers(args))
            source = cutset.estimate_curve_source(est)
    probes = None
    if args.probes:
        probes = [Fraction(tok) if "/" in tok else float(tok) for tok in args.probes.split(",")]
    system = cutset.build_probe_system(dim, source, probes)
    result = cutset.recover_cut_counts(system, rounding=not args.no_round)
    _write(args.out, result.to_json())
    return 0


def _cmd_kgrip(args):
    graph, label = _load_graph(args)
    if args.strategy == "lowest":
        new_graph, plan = kgrip.greedy_lowest_degree_addition(graph, args.k)
    elif args.strategy == "highest":
        new_graph, plan = kgrip.highest_degree_addition(graph, args.k)
    else:
        new_graph, plan = kgrip.random_pairing_addition(graph, args.k, args.seed)
    before = kgrip.objective(graph, args.p)
    after = kgrip.objective(new_graph, args.p)
    payload = json.loads(plan.to_json())
    payload["p"] = args.p
    payload["objective_before"] = before
    payload["objective_after"] = after
    _write(args.out, json.dumps(payload, sort_keys=True) + "\n")
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8", newline="") as fh:
            fh.write(save_edge_list(new_graph))
    return 0


def _cmd_compare(args):
    curves = []
    for path in args.files:
        with open(path, "r", encoding="utf-8") as fh:
            curves.append((path, Curve.from_csv(fh.read())))
    if len(curves) < 2:
        raise UsageError("compare needs at least two curve files")
    base_grid = curves[0][1].grid
    for path, c in curves[1:]:
        if c.grid != base_grid:
            raise ValueError(f"grid mismatch between {args.files[0]} and {path}")
    if args.power is not None:
        if args.power == "p":
            exponents = None  # grid coordinate
        else:
            try:
                exponents = float(args.power)
            except ValueError:
                raise UsageError('--power takes a number or the letter "p"') from None
        transformed = [curves[0]]
        for path, c in curves[1:]:
            if exponents is None:
                vals = tuple(v**g for v, g in zip(c.values, c.grid))
            else:
                vals = tuple(v**exponents for v in c.values)
            transformed.append((path, Curve(c.grid, vals)))
        curves = transformed
    lines = ["a,b,sup_gap,mean_abs_gap"]
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            pa, ca = curves[i]
            pb, cb = curves[j]
            lines.append(
                f"{pa},{pb},{ca.sup_gap(cb):.17g},{ca.mean_abs_gap(cb):.17g}"
            )
    _write(args.out, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_graph_source(sub, family_needs_n=True):
    sub.add_argument("--input", help="edge-list file to load")
    sub.add_argument("--gen", help="generator spec: er:N,PL | rgg:N,R | ba:N,M | lattice:D1xD2[xD3]")
    sub.add_argument("--gen-seed", type=int, default=0, help="seed for --gen (default 0)")
    sub.add_argument("--family", choices=sorted(_FAMILY_BUILDERS), help="named graph family")
    if family_needs_n:
        sub.add_argument("--n", type=int, help="size for --family (and the model size for approx er/rgg)")


def _add_grid(sub):
    sub.add_argument("--grid", type=int, default=101, help="equispaced grid size over [0,1] (default 101)")
    sub.add_argument("--ps", help="explicit comma-separated grid, overrides --grid")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relpoly",
        description="Node and link reliability polynomials: exact, Monte Carlo, approximations, cut sets, augmentation.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("generate", help="write a generated graph as an edge list")
    s.add_argument("--gen", required=True)
    s.add_argument("--gen-seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_generate)

    s = subs.add_parser("exact", help="enumerate coefficients and evaluate the exact curve")
    _add_graph_source(s)
    _add_grid(s)
    s.add_argument("--kind", choices=("node", "link"), default="node")
    s.add_argument("--cap", type=int, default=exact.DEFAULT_ENUMERATION_CAP)
    s.add_argument("--coeffs-out", help="also write the coefficient vectors as JSON")
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_exact)

    s = subs.add_parser("closed-form", help="evaluate a family's closed-form curve")
    s.add_argument("--family", choices=sorted(_FAMILY_BUILDERS), required=True)
    s.add_argument("--n", type=int, required=True)
    _add_grid(s)
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_closed_form)

    s = subs.add_parser("mc", help="Monte Carlo curve from random removal orders")
    _add_graph_source(s)
    _add_grid(s)
    s.add_argument("--kind", choices=("node", "link"), default="node")
    s.add_argument("--runs", type=int, default=100000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, help="worker processes (RELPOLY_THREADS caps this)")
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_mc)

    s = subs.add_parser("laplace", help="concentration-point curve from exact or MC fractions")
    _add_graph_source(s)
    _add_grid(s)
    s.add_argument("--source", choices=("exact", "mc"), default="exact")
    s.add_argument("--basis", choices=("s", "c"), default="c")
    s.add_argument("--runs", type=int, default=100000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cap", type=int, default=exact.DEFAULT_ENUMERATION_CAP)
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_laplace)

    s = subs.add_parser("approx", help="degree-based approximations and ensemble formulas")
    s.add_argument(
        "method",
        choices=("stochastic", "bounds", "er", "rgg", "er-intersection", "er-width"),
    )
    _add_graph_source(s)
    _add_grid(s)
    s.add_argument("--kind", choices=("node", "link"), default="node")
    s.add_argument("--bound", choices=("arith", "geom"), default="arith")
    s.add_argument("--pl", type=float, help="link probability for er methods")
    s.add_argument("--r", type=float, help="radius for rgg")
    s.add_argument("--n2", type=int, help="second model size for er-intersection")
    s.add_argument("--pl2", type=float, help="second link probability for er-intersection")
    s.add_argument("--lo", type=float, default=0.01, help="low level for er-width")
    s.add_argument("--hi", type=float, default=0.99, help="high level for er-width")
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_approx)

    s = subs.add_parser("cutsets", help="recover cut-set counts from a curve source")
    _add_graph_source(s)
    s.add_argument("--kind", choices=("node", "link"), default="node")
    s.add_argument("--source", choices=("exact", "mc"), default="exact")
    s.add_argument("--runs", type=int, default=100000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cap", type=int, default=exact.DEFAULT_ENUMERATION_CAP)
    s.add_argument("--probes", help="comma-separated probe list (fractions like 1/7 allowed)")
    s.add_argument("--no-round", action="store_true", help="report raw solved values")
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_cutsets)

    s = subs.add_parser("kgrip", help="add k links by a named strategy and report the objective")
    _add_graph_source(s)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--strategy", choices=("lowest", "highest", "random"), default="lowest")
    s.add_argument("--seed", type=int, default=0, help="seed for --strategy random")
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--graph-out", help="write the augmented graph as an edge list")
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_kgrip)

    s = subs.add_parser("compare", help="pairwise gaps between curve CSV files")
    s.add_argument("files", nargs="+")
    s.add_argument(
        "--power",
        help='apply x -> x^POWER to every curve after the first; the literal "p" uses the grid coordinate',
    )
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.fn(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except (ValueError, CapacityError, EdgeListFormatError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
