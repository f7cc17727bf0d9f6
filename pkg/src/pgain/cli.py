"""Command-line front end.

Subcommands: ``compute`` (per-node scores), ``sweep`` (GPG correlations vs
normalized decay), ``convergence`` (truncation-error trace), ``generate``
(synthetic edge lists), ``spectral`` (lambda1 estimate). Outputs are CSV by
default (17-significant-digit floats, so identical runs are byte-identical);
``--format json`` switches to JSON. Summaries go to stderr.

Exit codes: 0 all requested computations converged, 1 I/O error,
2 bad parameters or input, 3 a computation failed to converge.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from pgain import analysis, baselines, generate
from pgain.errors import PgainError
from pgain.gain import (
    GainParams,
    exponential_potential_gain,
    gain_with_trace,
    geometric_potential_gain,
)
from pgain.graph import Graph, parse_edge_list
from pgain.spectral import eigenvector_centrality, power_iteration
from pgain.vectors import CentralityVector

METRICS = ("deg", "ec", "pr", "katz", "gpg", "epg")

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARAMS = 2
EXIT_NOT_CONVERGED = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PgainError as exc:
        print(f"pgain: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except OSError as exc:
        print(f"pgain: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgain",
        description="Walk-based potential-gain centralities on edge-list graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="write per-node scores")
    compute.add_argument("input", help="edge-list file")
    compute.add_argument(
        "--metric", choices=METRICS + ("all",), required=True,
        help="metric to compute ('all' writes one file per metric)",
    )
    _add_delta_args(compute)
    compute.add_argument("--alpha", type=float, default=0.85,
                         help="PageRank damping factor")
    compute.add_argument("--tol", type=float, default=1e-12)
    compute.add_argument("--max-k", type=int, default=None,
                         help="walk-length / iteration cap")
    compute.add_argument("--out", default=".",
                         help="output directory (files named <metric>.csv)")
    compute.add_argument("--format", choices=("csv", "json"), default="csv")
    compute.set_defaults(handler=_cmd_compute)

    sweep = sub.add_parser("sweep", help="GPG rank correlations across delta_star")
    sweep.add_argument("input")
    sweep.add_argument("--grid", default=None,
                       help="comma-separated delta_star values (default 0.1..0.9)")
    sweep.add_argument("--alpha", type=float, default=0.85)
    sweep.add_argument("--tol", type=float, default=1e-12)
    sweep.add_argument("--out", default=None, help="output file (default stdout)")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.set_defaults(handler=_cmd_sweep)

    conv = sub.add_parser("convergence", help="truncation-error trace")
    conv.add_argument("input")
    conv.add_argument("--metric", choices=("gpg", "epg"), required=True)
    _add_delta_args(conv)
    conv.add_argument("--tol", type=float, default=1e-12)
    conv.add_argument("--max-k", type=int, default=None)
    conv.add_argument("--out", default=None, help="output file (default stdout)")
    conv.add_argument("--format", choices=("csv", "json"), default="csv")
    conv.set_defaults(handler=_cmd_convergence)

    gen = sub.add_parser("generate", help="write a synthetic edge list")
    gen.add_argument("kind", choices=("complete", "ring", "star", "grid", "er", "ba"))
    gen.add_argument("params", nargs="*",
                     help="complete/ring/star N; grid R C; er N P; ba N M0")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None, help="output file (default stdout)")
    gen.set_defaults(handler=_cmd_generate)

    spectral = sub.add_parser("spectral", help="estimate lambda1")
    spectral.add_argument("input")
    spectral.add_argument("--tol", type=float, default=1e-10)
    spectral.add_argument("--max-iter", type=int, default=10_000)
    spectral.set_defaults(handler=_cmd_spectral)
    return parser


def _add_delta_args(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--delta", type=float, default=None,
                       help="absolute geometric decay (must be < 1/lambda1)")
    group.add_argument("--delta-star", type=float, default=None,
                       help="decay normalized by lambda1, in (0, 1)")


def _load_graph(path: str) -> Graph:
    return parse_edge_list(path)


def _summary(graph: Graph, lam: float, vector: CentralityVector,
             wall: float) -> None:
    print(
        f"pgain: metric={vector.metric} n={graph.node_count} m={graph.edge_count}"
        f" lambda1={lam:.12g} iterations={vector.iterations_used}"
        f" wall_s={wall:.6f} converged={vector.converged}",
        file=sys.stderr,
    )


def _cmd_compute(args) -> int:
    graph = _load_graph(args.input)
    if graph.node_count == 0:
        print("pgain: error: empty graph", file=sys.stderr)
        return EXIT_PARAMS
    lam = power_iteration(graph).lambda1
    wanted = METRICS if args.metric == "all" else (args.metric,)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    all_converged = True
    for metric in wanted:
        start = time.perf_counter()
        vector = _compute_metric(graph, metric, args, lam)
        wall = time.perf_counter() - start
        _summary(graph, lam, vector, wall)
        all_converged &= vector.converged
        path = out_dir / f"{metric}.{args.format}"
        _write_scores(path, graph, vector, args.format)
    return EXIT_OK if all_converged else EXIT_NOT_CONVERGED


def _compute_metric(graph, metric, args, lam) -> CentralityVector:
    max_iter = args.max_k if args.max_k is not None else 10_000
    if metric == "deg":
        return baselines.degree_centrality(graph)
    if metric == "ec":
        return eigenvector_centrality(graph, tol=args.tol, max_iter=max_iter)
    if metric == "pr":
        return baselines.pagerank(graph, alpha=args.alpha, tolerance=args.tol,
                                  max_iter=max_iter)
    if metric == "katz":
        delta = args.delta
        if delta is None:
            star = args.delta_star if args.delta_star is not None else 0.5
            delta = star / lam
        return baselines.katz_centrality(graph, delta=delta, tolerance=args.tol,
                                         max_iter=max_iter, lambda1=lam)
    params = GainParams(delta=args.delta, delta_star=args.delta_star,
                        max_walk_length=args.max_k, tolerance=args.tol)
    if metric == "gpg":
        return geometric_potential_gain(graph, params, lambda1=lam)
    if metric == "epg":
        return exponential_potential_gain(graph, params)
    raise PgainError(f"unknown metric {metric!r}")


def _write_scores(path: Path, graph: Graph, vector: CentralityVector,
                  fmt: str) -> None:
    if fmt == "csv":
        lines = ["node,score"]
        lines += [
            f"{label},{score:.17g}"
            for label, score in zip(graph.labels, vector.scores)
        ]
        path.write_text("\n".join(lines) + "\n")
    else:
        payload = {
            "metric": vector.metric,
            "params": _jsonable(vector.params),
            "iterations": vector.iterations_used,
            "converged": vector.converged,
            "scores": {
                label: float(score)
                for label, score in zip(graph.labels, vector.scores)
            },
        }
        path.write_text(json.dumps(payload, indent=2) + "\n")


def _cmd_sweep(args) -> int:
    graph = _load_graph(args.input)
    grid = None
    if args.grid is not None:
        grid = [float(tok) for tok in args.grid.split(",") if tok.strip()]
    warnings: list[str] = []
    result = analysis.delta_sweep(
        graph, grid=grid, alpha=args.alpha, tolerance=args.tol,
        warn=warnings.append,
    )
    for message in warnings:
        print(f"pgain: warning: undefined correlation ({message})",
              file=sys.stderr)
    if args.format == "csv":
        _emit(args.out, result.to_csv())
    else:
        rows = []
        for i, star in enumerate(result.delta_star_grid):
            row = {"delta_star": float(star)}
            for column in analysis.SWEEP_COLUMNS:
                value = result.rho[column][i]
                row[f"rho_{column}"] = None if np.isnan(value) else float(value)
            rows.append(row)
        payload = {"alpha": result.alpha, "lambda1": result.lambda1, "rows": rows}
        _emit(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_convergence(args) -> int:
    graph = _load_graph(args.input)
    kind = "geometric" if args.metric == "gpg" else "exponential"
    params = GainParams(delta=args.delta, delta_star=args.delta_star,
                        max_walk_length=args.max_k, tolerance=args.tol)
    vector, trace = gain_with_trace(graph, params, kind=kind)
    if args.format == "csv":
        _emit(args.out, trace.to_csv())
    else:
        payload = {
            "metric": trace.metric,
            "params": _jsonable(trace.params),
            "reference": trace.reference,
            "points": [[k, eps] for k, eps in trace.errors],
        }
        _emit(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK if vector.converged else EXIT_NOT_CONVERGED


def _cmd_generate(args) -> int:
    kind = args.kind
    params = args.params
    try:
        if kind == "complete":
            (n,) = map(int, params)
            edges = generate.complete_edges(n)
        elif kind == "ring":
            (n,) = map(int, params)
            edges = generate.ring_edges(n)
        elif kind == "star":
            (leaves,) = map(int, params)
            edges = generate.star_edges(leaves)
        elif kind == "grid":
            rows, cols = map(int, params)
            edges = generate.grid_edges(rows, cols)
        elif kind == "er":
            n, p = int(params[0]), float(params[1])
            edges = generate.erdos_renyi_edges(n, p, seed=args.seed)
        else:
            n, m0 = map(int, params)
            edges = generate.barabasi_albert_edges(n, m0, seed=args.seed)
    except (TypeError, ValueError, IndexError):
        print(f"pgain: error: bad parameters for {kind!r}: {params}",
              file=sys.stderr)
        return EXIT_PARAMS
    _emit(args.out, generate.edges_to_text(edges))
    return EXIT_OK


def _cmd_spectral(args) -> int:
    graph = _load_graph(args.input)
    estimate = power_iteration(graph, tol=args.tol, max_iter=args.max_iter)
    print(
        f"lambda1={estimate.lambda1:.17g} residual={estimate.residual:.6g}"
        f" iterations={estimate.iterations} converged={estimate.converged}"
    )
    print(
        f"pgain: n={graph.node_count} m={graph.edge_count}", file=sys.stderr
    )
    return EXIT_OK if estimate.converged else EXIT_NOT_CONVERGED


def _emit(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _jsonable(params: dict) -> dict:
    return {
        key: (None if value is None else
              value if isinstance(value, (bool, int, str)) else float(value))
        for key, value in params.items()
    }


if __name__ == "__main__":
    raise SystemExit(main())
