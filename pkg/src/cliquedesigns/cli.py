"""Command-line interface: generate, graph, count, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
budget exceeded.  The dense-graph vertex budget can be overridden with the
CLIQUEDESIGNS_MAX_VERTICES environment variable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .assembly import total_design_count
from .cliques import count_maximum_cliques, enumerate_maximum_cliques, max_clique_size
from .enumeration import (
    dump_vertices,
    enumerate_derangements,
    enumerate_sudoku_derangements,
)
from .errors import DesignError, MemoryBudgetExceeded, OrderTooLarge
from .gridio import grid_to_csv, grid_to_text, latin_violation, parse_grids, sudoku_violation
from .graph import build_graph, induced_subgraph
from .sampling import DesignSampler

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _add_kind_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=("latin", "sudoku"))
    parser.add_argument("--order", "-n", type=int, help="Latin square order n")
    parser.add_argument("--p", type=int, help="Sudoku box side p (order n = p^2)")


def _resolve_order(args) -> int:
    if args.kind == "latin":
        if args.order is None:
            raise DesignError("latin requires --order")
        return args.order
    if args.p is None:
        if args.order is not None and math.isqrt(args.order) ** 2 == args.order:
            return math.isqrt(args.order)
        raise DesignError("sudoku requires --p (or --order equal to a perfect square)")
    if args.order is not None and args.order != args.p * args.p:
        raise DesignError(f"--order {args.order} is inconsistent with --p {args.p}")
    return args.p


def _vertexset(kind: str, order: int):
    if kind == "latin":
        return enumerate_derangements(order)
    return enumerate_sudoku_derangements(order)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    order = _resolve_order(args)
    sampler = DesignSampler(
        args.kind, order, subgraph_k=args.subgraph_k, seed=args.seed
    )
    chunks = []
    for _ in range(args.count):
        sample = sampler.draw()
        if args.format == "json":
            chunks.append(json.dumps(sample.to_json_dict(), sort_keys=True) + "\n")
        else:
            render = grid_to_text if args.format == "text" else grid_to_csv
            flag = "" if sample.uniform else "# non-uniform sample (subgraph path)\n"
            chunks.append(flag + render(sample.grid) + "\n")
    _write("".join(chunks), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    from .graph import export_graph

    order = _resolve_order(args)
    vs = _vertexset(args.kind, order)
    g = build_graph(vs)
    if args.subgraph_k is not None:
        _, g = induced_subgraph(g, args.subgraph_k, args.seed)
    fmt = {"dimacs": "dimacs", "edgelist": "edgelist", "dot": "dot"}[args.format]
    text = export_graph(g, fmt)
    summary = f"vertices: {g.V}\nedges: {g.edge_count}\n"
    if args.summary:
        cs = enumerate_maximum_cliques(g)
        summary += f"maximum clique size: {cs.clique_size}\ncliques: {cs.count}\n"
    if args.out:
        _write(text, args.out)
        _write(dump_vertices(g.vertexset), args.out + ".vertices")
        sys.stdout.write(summary)
    else:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    return EXIT_OK


def cmd_count(args) -> int:
    order = _resolve_order(args)
    vs = _vertexset(args.kind, order)
    g = build_graph(vs)
    size = g.n - 1
    cliques = count_maximum_cliques(g, target_size=size, workers=args.workers)
    total = total_design_count(args.kind, g.n, cliques)
    sys.stdout.write(
        f"vertices: {g.V}\n"
        f"edges: {g.edge_count}\n"
        f"clique size: {size}\n"
        f"maximum cliques: {cliques}\n"
        f"reduced designs: {cliques}\n"
        f"total designs: {total}\n"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    grids = parse_grids(text)
    if not grids:
        sys.stderr.write("no grids found\n")
        return EXIT_VERIFY
    for idx, parsed in enumerate(grids, start=1):
        kind = parsed.kind or args.kind or "latin"
        if kind == "sudoku":
            problem = sudoku_violation(parsed.grid, parsed.p or args.p)
        else:
            problem = latin_violation(parsed.grid)
        if problem is not None:
            sys.stderr.write(f"grid {idx}: INVALID {kind}: {problem}\n")
            return EXIT_VERIFY
        sys.stdout.write(f"grid {idx}: valid {kind}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquedesigns",
        description="Uniform random Latin squares and Sudoku designs via "
        "maximum cliques of derangement-disjointness graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="sample random designs")
    _add_kind_options(p_gen)
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--subgraph-k", type=int, default=None, dest="subgraph_k")
    p_gen.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_generate)

    p_graph = sub.add_parser("graph", help="build and export the disjointness graph")
    _add_kind_options(p_graph)
    p_graph.add_argument("--format", choices=("dimacs", "edgelist", "dot"), default="dimacs")
    p_graph.add_argument("--subgraph-k", type=int, default=None, dest="subgraph_k")
    p_graph.add_argument("--seed", type=int, default=None)
    p_graph.add_argument("--summary", action="store_true", help="also report maximum cliques")
    p_graph.add_argument("--out", default=None)
    p_graph.set_defaults(func=cmd_graph)

    p_count = sub.add_parser("count", help="exact clique and design counts")
    _add_kind_options(p_count)
    p_count.add_argument("--workers", type=int, default=1)
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="check grids against their invariants")
    p_verify.add_argument("path", help="grid file (text, CSV or JSON); - for stdin")
    p_verify.add_argument("--kind", choices=("latin", "sudoku"), default=None)
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OrderTooLarge, MemoryBudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except DesignError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
