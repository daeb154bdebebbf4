"""
Command-line front end.

    python -m src.cli gen --model tree --r 3 --k 4 --out tree.txt
    python -m src.cli analyze --in tree.txt --emit-trace trace.csv
    python -m src.cli table --r 3 --k 4
    python -m src.cli tree-avg --r 3 --k 4
    python -m src.cli sweep --n 20 --trials 100 --out records.csv
    python -m src.cli check-bound --n 16
    python -m src.cli cross-check --r 2 --k 4

Exit codes: 0 success, 1 I/O failure, 2 usage or validation error.
Numbers on stdout use 6 significant digits; CSV files keep full precision.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .api.analyze import SOLVERS, analyze
from .api.bounds import check_bound, cross_check_tree_methods
from .api.generate import MODELS, build_model_graph
from .api.sweep import (
    DEFAULT_BASE_SEED,
    DEFAULT_P_GRID,
    DEFAULT_TRIALS,
    run_sweep,
    write_summary_csv,
    write_sweep_csv,
)
from .integration.data_converters import DataConverter
from .models.generators import DEFAULT_KDEG, GraphMode
from .models.tree import TreeSpec, reachability_table, tree_average_separation
from .solvers.matrix_solver import propagation_trace
from .utils.logging_config import configure_logging


logger = logging.getLogger("separation-cli")

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2


def fmt(value) -> str:
    """Six significant digits, trailing zeros kept."""
    return f"{float(value):#.6g}"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        DataConverter.write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    generated = build_model_graph(
        args.model,
        r=args.r,
        k=args.k,
        n=args.n,
        kdeg=args.kdeg,
        p=args.p,
        mode=args.mode,
        seed=args.seed,
    )
    _emit(generated.to_edge_list(), args.out)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.stdin else Path(args.input).read_text(encoding="utf-8")
    graph = DataConverter.parse_edge_list(text)
    analysis = analyze(graph, solver=args.solver)
    summary = analysis.summary

    lines = [
        f"n {summary.n}",
        f"edges {graph.edge_count}",
        f"connected {'true' if summary.connected else 'false'}",
        f"reachable_pairs {summary.reachable_ordered_pairs}",
        f"sum {summary.distance_sum}",
        f"paper_norm {fmt(summary.mean_paper_norm)}",
        f"ordered {fmt(summary.mean_ordered_pairs)}",
        f"diameter {summary.diameter}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")

    if args.emit_matrix:
        DataConverter.write_distance_csv(analysis.distances, args.emit_matrix)
    if args.emit_trace:
        DataConverter.write_text(args.emit_trace, DataConverter.trace_to_csv(propagation_trace(graph)))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    table = reachability_table(TreeSpec(r=args.r, k=args.k))
    _emit(DataConverter.table_to_csv(table), args.out)
    return EXIT_OK


def cmd_tree_avg(args: argparse.Namespace) -> int:
    average = tree_average_separation(TreeSpec(r=args.r, k=args.k))
    print(fmt(average))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    p_grid = (
        DataConverter.parse_probability_list(args.p_grid)
        if args.p_grid is not None
        else list(DEFAULT_P_GRID)
    )
    result = run_sweep(
        n=args.n,
        kdeg=args.kdeg,
        p_grid=p_grid,
        trials=args.trials,
        base_seed=args.seed,
        mode=args.mode,
        resample_disconnected=args.resample_disconnected,
        n_jobs=args.jobs,
    )

    if args.out:
        write_sweep_csv(result, args.out)
    if args.paper_summary_out:
        write_summary_csv(result.summary, args.paper_summary_out, normalization="paper")
    if args.summary_out:
        write_summary_csv(result.summary, args.summary_out, normalization="ordered")
    else:
        sys.stdout.write(result.summary.to_csv("ordered"))
    return EXIT_OK


def cmd_check_bound(args: argparse.Namespace) -> int:
    print(check_bound(args.n).to_line())
    return EXIT_OK


def cmd_cross_check(args: argparse.Namespace) -> int:
    report = cross_check_tree_methods(TreeSpec(r=args.r, k=args.k))
    print(
        f"formula {fmt(report.formula)} "
        f"ordered {fmt(report.summary.mean_ordered_pairs)} "
        f"paper_norm {fmt(report.summary.mean_paper_norm)} "
        f"ratio {report.ratio}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="separation",
        description="Average degree of separation: trees, rings and structured graphs.",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--log-file", help="Also write logs to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a graph as an edge list")
    gen.add_argument("--model", choices=MODELS, required=True)
    gen.add_argument("--r", type=int, help="Tree branching degree")
    gen.add_argument("--k", type=int, help="Tree level count")
    gen.add_argument("--n", type=int, help="Node count (ws, structured)")
    gen.add_argument("--kdeg", type=int, default=DEFAULT_KDEG, help="Ring neighbor count")
    gen.add_argument("--p", type=float, default=0.0, help="Rewiring/addition probability")
    gen.add_argument("--mode", choices=[m.value for m in GraphMode], default=GraphMode.REWIRE.value)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="Output file (default: stdout)")
    gen.set_defaults(handler=cmd_gen)

    ana = sub.add_parser("analyze", help="Separation statistics of an edge-list file")
    source = ana.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="input", help="Edge-list file")
    source.add_argument("--stdin", action="store_true", help="Read the edge list from stdin")
    ana.add_argument("--emit-matrix", help="Write the distance matrix CSV here")
    ana.add_argument("--emit-trace", help="Write the matrix after every propagation pass here")
    ana.add_argument("--solver", choices=SOLVERS, default="matrix")
    ana.set_defaults(handler=cmd_analyze)

    table = sub.add_parser("table", help="Reachability table CSV of a complete r-ary tree")
    table.add_argument("--r", type=int, required=True)
    table.add_argument("--k", type=int, required=True)
    table.add_argument("--out", help="Output file (default: stdout)")
    table.set_defaults(handler=cmd_table)

    avg = sub.add_parser("tree-avg", help="Level-formula average separation of a tree")
    avg.add_argument("--r", type=int, required=True)
    avg.add_argument("--k", type=int, required=True)
    avg.set_defaults(handler=cmd_tree_avg)

    sweep = sub.add_parser("sweep", help="Separation vs rewiring probability")
    sweep.add_argument("--n", type=int, default=20)
    sweep.add_argument("--kdeg", type=int, default=DEFAULT_KDEG)
    sweep.add_argument("--p-grid", help="Comma-separated probabilities (default 0..0.5 step 0.05)")
    sweep.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sweep.add_argument("--seed", type=int, default=DEFAULT_BASE_SEED)
    sweep.add_argument("--mode", choices=[m.value for m in GraphMode], default=GraphMode.REWIRE.value)
    sweep.add_argument("--resample-disconnected", action="store_true",
                       help="Regenerate disconnected samples instead of flagging them")
    sweep.add_argument("--jobs", type=int, default=1, help="Worker threads for trials")
    sweep.add_argument("--out", help="Per-trial records CSV")
    sweep.add_argument("--summary-out", help="Ordered-pair summary CSV (default: stdout)")
    sweep.add_argument("--paper-summary-out", help="(N-1)^2-normalized summary CSV")
    sweep.set_defaults(handler=cmd_sweep)

    bound = sub.add_parser("check-bound", help="Structured graph diameter vs bound")
    bound.add_argument("--n", type=int, required=True)
    bound.set_defaults(handler=cmd_check_bound)

    cross = sub.add_parser("cross-check", help="Tree formula vs matrix propagation")
    cross.add_argument("--r", type=int, required=True)
    cross.add_argument("--k", type=int, required=True)
    cross.set_defaults(handler=cmd_cross_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        configure_logging(args.log_file, logging.DEBUG if args.verbose else logging.WARNING)
        logger.debug(f"Command {args.command}: {vars(args)}")
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
