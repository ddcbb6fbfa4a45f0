"""Command-line interface.

Exit codes: 0 on success, 1 on input errors, 2 when routing fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .algorithms import MEMORYLESS_ROUTERS, ROUTERS, make_router, route_a, theta_step
from .builder import build
from .engine import h_neighbourhood, local_view, run, views_equal
from .errors import OrderedThetaError
from .formats import (
    FormatError,
    read_graph,
    read_points,
    read_trace,
    write_graph,
    write_points,
    write_trace,
)
from .instances import make_fig3, make_lr, random_points
from .render import render_svg
from .stats import compute_stats

EXIT_OK, EXIT_INPUT, EXIT_ROUTING = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _cmd_gen(args) -> int:
    pts = random_points(args.n, args.seed, retry_limit=args.retry_limit, ks=(args.k,))
    write_points(args.out, pts, args.k)
    print(f"wrote {len(pts)} points to {args.out}")
    return EXIT_OK


def _cmd_build(args) -> int:
    file_k, pts = read_points(args.points)
    k = args.k if args.k is not None else file_k
    graph = build(pts, k)
    write_graph(args.out, graph)
    print(f"built ordered theta_{k} graph: n={graph.n} m={graph.m} -> {args.out}")
    return EXIT_OK


def _cmd_route(args) -> int:
    graph = read_graph(args.graph)
    trace = run(graph, make_router(args.algo), args.s, args.t, args.budget)
    if args.trace:
        write_trace(args.trace, trace)
    path = " -> ".join(str(v) for v in trace.vertices())
    print(f"{args.algo}: {trace.result.value} after {trace.hop_count} hops "
          f"({trace.candidate_verifications} candidate verifications)")
    print(f"path: {path}")
    return EXIT_OK if trace.arrived else EXIT_ROUTING


def _cmd_lr(args) -> int:
    pair = make_lr(args.h, args.k)
    write_points(args.out_l, pair.left, args.k)
    write_points(args.out_r, pair.right, args.k)
    print(f"h={args.h} k={args.k} epsilon={pair.epsilon!r}: {args.out_l}, {args.out_r}")
    return EXIT_OK


def _describe(trace) -> str:
    if trace.arrived:
        return f"arrived in {trace.hop_count} hops"
    if trace.stuck_at is not None:
        return f"stuck at vertex {trace.stuck_at} after {trace.hop_count} hops"
    return f"{trace.result.value} after {trace.hop_count} hops"


def _cmd_demo_impossibility(args) -> int:
    pair = make_lr(args.h, args.k)
    left, right = pair.graphs()
    s, t = pair.source, pair.target
    budget = 10 * (2 * args.h + 3)
    same = views_equal(h_neighbourhood(left, s, args.h), h_neighbourhood(right, s, args.h))
    print(f"L/R with h={args.h}, k={args.k}, epsilon={pair.epsilon!r}; s=v{s}, t=v{t}")
    print(f"{args.h}-neighbourhoods of v{s} identical: {same}")
    failed = []
    for side, graph in (("L", left), ("R", right)):
        trace = run(graph, make_router(args.algo), s, t, budget)
        print(f"{side}: {args.algo} {_describe(trace)}")
        if not trace.arrived:
            failed.append(side)
        print(f"{side}: a {_describe(route_a(graph, s, t))}")
    if failed:
        print(f"{args.algo} fails on {' and '.join(failed)}")
        return EXIT_OK
    print(f"{args.algo} arrived on both graphs")
    return EXIT_ROUTING


def _cmd_demo_stuck(args) -> int:
    graph = build(make_fig3(), 4)
    nxt = theta_step(local_view(graph, 1, 3))
    if nxt is None:
        print("theta: stuck at vertex 1")
    else:
        print(f"theta: moved to vertex {nxt}")
    trace = route_a(graph, 1, 3)
    print(f"a: {_describe(trace)}")
    return EXIT_OK if trace.arrived and nxt is None else EXIT_ROUTING


def _cmd_stats(args) -> int:
    report = compute_stats(read_graph(args.graph), pairs=args.pairs, seed=args.seed)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def _cmd_render(args) -> int:
    graph = read_graph(args.graph)
    trace = read_trace(args.trace) if args.trace else None
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(graph, trace))
    print(f"wrote {args.out}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ordered-theta", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="sample random points in general position")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=4, help="cone count written to the header and validated")
    p.add_argument("--retry-limit", type=int, default=100)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("build", help="build a graph from a points file")
    p.add_argument("--k", type=int, help="overrides the k in the points header")
    p.add_argument("--points", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("route", help="route one message")
    p.add_argument("--graph", required=True)
    p.add_argument("--algo", choices=sorted(ROUTERS), default="a")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--trace")
    p.set_defaults(func=_cmd_route)

    p = sub.add_parser("lr", help="write the L/R witness point sets")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out-l", required=True)
    p.add_argument("--out-r", required=True)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("demo-impossibility", help="run a memoryless router on L and R")
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--algo", choices=MEMORYLESS_ROUTERS, default="greedy")
    p.set_defaults(func=_cmd_demo_impossibility)

    p = sub.add_parser("demo-stuck", help="theta routing vs. algorithm A on three points")
    p.set_defaults(func=_cmd_demo_stuck)

    p = sub.add_parser("stats", help="graph statistics and router success counts")
    p.add_argument("--graph", required=True)
    p.add_argument("--pairs", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("render", help="draw a graph (and trace) as SVG")
    p.add_argument("--graph", required=True)
    p.add_argument("--trace")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OrderedThetaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ROUTING if args.command in ("route", "demo-impossibility") else EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
