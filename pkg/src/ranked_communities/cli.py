"""Command-line entry point for the benchmark tables."""
from __future__ import annotations

import argparse
import sys

from .bench import METHODS, BenchConfig, format_csv, format_table, paper_grid, run_suite
from .errors import GraphError
from .graph import read_edge_list
from .ordering import Strategy, TieMode

ORDER_CHOICES = [s.value for s in Strategy] + ["all"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="ranked-communities",
        description="Mean modularity of label propagation / multilevel clustering "
        "under centrality-based node orders on ring lattices.",
    )
    p.add_argument("--method", choices=METHODS, default="lp")
    p.add_argument("--order", choices=ORDER_CHOICES, default="all")
    p.add_argument("--n", type=int)
    p.add_argument("--nei", type=int)
    p.add_argument("--reps", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tie", choices=[t.value for t in TieMode], default=TieMode.STABLE.value)
    p.add_argument("--format", choices=["table", "csv"], default="table")
    p.add_argument("--paper-tables", action="store_true",
                   help="run both six-lattice grids (label propagation and multilevel)")
    p.add_argument("--graph", metavar="FILE", help="edge-list file used instead of a lattice")
    p.add_argument("--workers", type=int, default=1, help="processes for cell-level parallelism")
    return p


def _grid(args):
    if args.paper_tables:
        return paper_grid(args.reps, args.seed, args.tie)
    strategies = list(Strategy) if args.order == "all" else [Strategy(args.order)]
    if args.graph:
        g = read_edge_list(args.graph)
        return [BenchConfig(args.method, strategies, g.node_count, args.nei or 0,
                            args.reps, args.seed, args.tie, args.format, graph=g)]
    if args.n is None or args.nei is None:
        raise UsageError("--n and --nei are required without --paper-tables or --graph")
    return [BenchConfig(args.method, strategies, args.n, args.nei, args.reps, args.seed,
                        args.tie, args.format)]


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        grid = _grid(args)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        parser.print_help(sys.stderr)
        print(f"\nerror: {exc}", file=sys.stderr)
        return 1
    results = run_suite(grid, workers=args.workers)
    sys.stdout.write(format_csv(results) if args.format == "csv" else format_table(results))
    failed = [r for r in results if r.error]
    for r in failed:
        print(f"cell {r.method}/{r.strategy.value} n={r.n} nei={r.nei} failed: {r.error}",
              file=sys.stderr)
    return 2 if failed else 0


def main():  # pragma: no cover
    sys.exit(cli_main())
