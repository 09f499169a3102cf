"""Command-line interface.

Subcommands: gen (sample G(n, p) as an edge list), cliques (enumerate
maximal cliques), color (constructive colouring), exact (exact clique
chromatic number), bounds (regime classification and finite-n constants),
sweep (run a config-driven experiment grid), report (per-graph JSON bundle).

Exit codes: 0 on success, 2 on bad parameters or unparsable input, 3 when a
computation exhausts its node or time budget.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import constructors, lab, solver
from .cliques import (
    DEFAULT_MAX_CLIQUES,
    edge_triangle_stats,
    enumerate_maximal_cliques,
    k1_cliques_per_edge,
)
from .errors import BudgetExceededError, CliqueOverflowError, ParameterError
from .graph import Graph, GnpParams, parse_edge_list, sample_gnp, serialize_edge_list
from .theory import classify_regime, theory_constants


def _read_graph(path: str) -> Graph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return parse_edge_list(data)


def _write_bytes(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as handle:
            handle.write(data)


def _density(g: Graph) -> float:
    pairs = g.n * (g.n - 1) / 2
    return g.m / pairs if pairs else 0.0


def _cmd_gen(args: argparse.Namespace) -> int:
    params = GnpParams(n=args.n, p=args.p, x=args.x, seed=args.seed)
    g = sample_gnp(params)
    _write_bytes(args.out, serialize_edge_list(g))
    return 0


def _cmd_cliques(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    limit = args.max_count if args.max_count is not None else DEFAULT_MAX_CLIQUES
    cliques = enumerate_maximal_cliques(g, max_count=limit)
    stats = k1_cliques_per_edge(g, args.k) if args.k is not None else edge_triangle_stats(g)
    if args.stats:
        payload: dict[str, object] = {
            "n": g.n,
            "m": g.m,
            "count": cliques.count,
            "max_size": cliques.max_size,
            "isolated": list(cliques.isolated),
            "max_triangles_per_edge": stats.max_triangles,
            "edges_without_triangle": stats.edges_without_triangle,
            "triangle_total": stats.triangle_total,
        }
        if args.k is not None:
            payload["k"] = stats.k
            payload["max_k1_cliques_per_edge"] = stats.max_k1
        print(json.dumps(payload, indent=2))
    else:
        line = (f"count={cliques.count} max_size={cliques.max_size} "
                f"isolated={len(cliques.isolated)} max_triangles_per_edge={stats.max_triangles}")
        if args.k is not None:
            line += f" max_k1_cliques_per_edge={stats.max_k1}"
        print(line)
    if args.list:
        for clique in cliques.cliques:
            print(" ".join(str(v) for v in clique))
    return 0


def _make_colouring(g: Graph, args: argparse.Namespace):
    p_hint = args.p if args.p is not None else _density(g)
    if not 0.0 < p_hint <= 1.0:
        p_hint = None
    if args.method == "domset":
        return constructors.greedy_domset_colouring(g, order_seed=args.seed)
    if args.method == "trifree":
        params = constructors.TriFreeParams(p=p_hint, staged_schedule=args.paper_faithful)
        return constructors.trifree_decomposition_colouring(g, params)
    if args.method == "dense":
        params = None
        if g.n >= 3 and p_hint is not None and p_hint < 1.0:
            params = constructors.dense_schedule(g.n, p_hint)
        return constructors.dense_two_phase_colouring(g, params)
    return constructors.portfolio_colouring(g, p_hint=p_hint, seed=args.seed)


def _colouring_lines(assignment: tuple[int, ...]) -> str:
    return "".join(f"v {v} {c}\n" for v, c in enumerate(assignment))


def _cmd_color(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    colouring = _make_colouring(g, args)
    report = solver.validate(g, colouring)
    lines = _colouring_lines(colouring.assignment)
    if args.out is not None:
        _write_bytes(args.out, lines.encode("ascii"))
    else:
        sys.stdout.write(lines)
    print(json.dumps({
        "palette": colouring.palette,
        "method": colouring.method,
        "valid": report.valid,
    }))
    return 0 if report.valid else 1


def _cmd_exact(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    colouring = solver.exact_clique_chromatic(g, budget_ms=args.budget_ms)
    payload: dict[str, object] = {
        "n": g.n,
        "chi_c": colouring.palette,
        "colouring": list(colouring.assignment),
        "valid": solver.validate(g, colouring).valid,
    }
    if args.chi:
        chi = solver.exact_chromatic(g, budget_ms=args.budget_ms)
        payload["chi"] = chi.palette
        payload["chi_colouring"] = list(chi.assignment)
    if args.mcf:
        mcf = solver.exact_mcf(g, budget_ms=args.budget_ms)
        payload["mcf"] = {
            "size": mcf.size,
            "vertices": list(mcf.vertices),
            "chi_lower": mcf.chi_lower,
        }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    regime = classify_regime(args.n, p=args.p, x=args.x, delta=args.delta)
    payload: dict[str, object] = {"regime": dataclasses.asdict(regime)}
    try:
        payload["constants"] = dataclasses.asdict(theory_constants(args.n, regime.p, k=args.k))
    except ParameterError as exc:
        payload["constants"] = {"reason": str(exc)}
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    with open(args.config, encoding="ascii") as handle:
        config = lab.parse_config(handle.read())
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    rows = lab.run_sweep(config)
    bad = sum(1 for row in rows if row.status != "ok")
    print(f"wrote {config.out_path} rows={len(rows)} non_ok={bad}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    report = lab.per_graph_report(
        g, p_hint=args.p_hint, budget_ms=args.budget_ms, exact_guard=args.exact_guard
    )
    print(json.dumps(report, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquecolour",
        description="Clique colouring of binomial random graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="sample G(n, p) and emit an edge list")
    gen.add_argument("--n", type=int, required=True)
    group = gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=float, help="edge probability")
    group.add_argument("--x", type=float, help="exponent with p = n**(x-1)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(handler=_cmd_gen)

    cliques = sub.add_parser("cliques", help="enumerate maximal cliques of an edge list")
    cliques.add_argument("--in", dest="input", required=True, help="edge list file or - for stdin")
    cliques.add_argument("--k", type=int, default=None,
                         help="also count (k+1)-cliques through each edge")
    cliques.add_argument("--stats", action="store_true", help="print a JSON summary")
    cliques.add_argument("--max-count", type=int, default=None,
                         help="abort after this many cliques")
    cliques.add_argument("--list", action="store_true", help="print each clique")
    cliques.set_defaults(handler=_cmd_cliques)

    color = sub.add_parser("color", help="constructive clique colouring")
    color.add_argument("--in", dest="input", required=True)
    color.add_argument("--method", choices=("domset", "trifree", "dense", "portfolio"),
                       default="portfolio")
    color.add_argument("--seed", type=int, default=None, help="vertex-order shuffle seed")
    color.add_argument("--p", type=float, default=None,
                       help="edge probability hint (default: observed density)")
    color.add_argument("--paper-faithful", action="store_true",
                       help="use the staged class-size schedule for the triangle-free scheme")
    color.add_argument("--out", help="write the colouring file here instead of stdout")
    color.set_defaults(handler=_cmd_color)

    exact = sub.add_parser("exact", help="exact clique chromatic number as JSON")
    exact.add_argument("--in", dest="input", required=True)
    exact.add_argument("--mcf", action="store_true",
                       help="also compute the largest maximal-clique-free set")
    exact.add_argument("--chi", action="store_true",
                       help="also compute the ordinary chromatic number")
    exact.add_argument("--budget-ms", type=int, default=None)
    exact.set_defaults(handler=_cmd_exact)

    bounds = sub.add_parser("bounds", help="regime classification and finite-n constants")
    bounds.add_argument("--n", type=int, required=True)
    group = bounds.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=float)
    group.add_argument("--x", type=float)
    bounds.add_argument("--k", type=int, default=3, help="clique size for the mcf bounds")
    bounds.add_argument("--delta", type=float, default=0.02, help="breakpoint band half-width")
    bounds.set_defaults(handler=_cmd_bounds)

    sweep = sub.add_parser("sweep", help="run an experiment grid from a config file")
    sweep.add_argument("--config", required=True)
    sweep.add_argument("--seed", type=int, default=None, help="override the config's master seed")
    sweep.set_defaults(handler=_cmd_sweep)

    report = sub.add_parser("report", help="per-graph JSON report")
    report.add_argument("--in", dest="input", required=True)
    report.add_argument("--p-hint", type=float, default=None)
    report.add_argument("--budget-ms", type=int, default=10_000)
    report.add_argument("--exact-guard", type=int, default=solver.EXACT_GUARD)
    report.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, CliqueOverflowError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
