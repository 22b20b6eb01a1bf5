"""Command-line front end.

Verbs: solve-mis, solve-vc, decide-vc, kernelize, gen, verify, report.
Graph inputs are DIMACS (default) or edge-list files; ``-`` reads from
standard input. Exit codes: 0 success (or YES), 1 NO from decide-vc,
2 input error, 3 internal assertion failure (including any missed
measure-decrease bound under --assert-lemmas).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError, InternalError
from .generators import NAMED_GRAPHS, gen_named, gen_random_cubic
from .graph import Graph, induced_subgraph, is_independent_set, is_vertex_cover
from .graphio import format_stats, parse_graph, write_graph
from .kernel import mvc_solve_detailed, nt_kernel, vc_decide
from .solver import SolveOptions, mis_solve

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def run(argv: list[str]) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse exits on --help (0) and bad usage (2)
        return int(e.code or 0)
    try:
        return args.handler(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misvc",
        description="Exact maximum independent set / vertex cover solver for sparse graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="graph file, or - for standard input")
        p.add_argument(
            "--format",
            choices=("dimacs", "edgelist"),
            default="dimacs",
            help="graph file format (default: dimacs)",
        )

    def add_solve_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--certificate", action="store_true", help="print a witness set")
        p.add_argument("--stats", action="store_true", help="print search statistics")
        p.add_argument(
            "--assert-lemmas",
            action="store_true",
            help="check measure-decrease bounds; any miss exits 3",
        )
        p.add_argument(
            "--threshold",
            type=int,
            default=15,
            metavar="INT",
            help="components up to this size are solved by enumeration (default 15)",
        )

    p = sub.add_parser("solve-mis", help="maximum independent set size")
    add_graph_input(p)
    add_solve_flags(p)
    p.set_defaults(handler=_cmd_solve_mis)

    p = sub.add_parser("solve-vc", help="minimum vertex cover size")
    add_graph_input(p)
    add_solve_flags(p)
    p.set_defaults(handler=_cmd_solve_vc)

    p = sub.add_parser("decide-vc", help="is there a vertex cover of size at most k")
    add_graph_input(p)
    p.add_argument("-k", type=int, required=True, help="cover size bound")
    p.add_argument("--threshold", type=int, default=15, metavar="INT")
    p.set_defaults(handler=_cmd_decide_vc)

    p = sub.add_parser("kernelize", help="LP-based kernel partition")
    add_graph_input(p)
    p.add_argument("-o", "--output", metavar="PATH", help="write the kernel graph here")
    p.set_defaults(handler=_cmd_kernelize)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument(
        "family",
        help=f"'cubic' or one of: {', '.join(NAMED_GRAPHS)}",
    )
    p.add_argument("-n", type=int, help="vertex count (cubic family)")
    p.add_argument("--seed", type=int, default=1, help="random seed (cubic family)")
    p.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")
    p.add_argument("--format", choices=("dimacs", "edgelist"), default="dimacs")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("verify", help="check a certificate file against a graph")
    add_graph_input(p)
    p.add_argument("certificate", help="file of whitespace-separated vertex ids")
    p.add_argument(
        "--cover",
        action="store_true",
        help="check a vertex cover instead of an independent set",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("report", help="run an experiment and render figures")
    p.add_argument("experiment", choices=("growth",))
    p.add_argument("-o", "--output", metavar="DIR", default="reports")
    p.add_argument("--sizes", default="40,50,60", help="comma-separated vertex counts")
    p.add_argument("--seeds-per-size", type=int, default=30)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threshold", type=int, default=15, metavar="INT")
    p.set_defaults(handler=_cmd_report)

    return parser


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text()
    return parse_graph(text, args.format)


def _solve_options(args: argparse.Namespace) -> SolveOptions:
    return SolveOptions(
        want_certificate=getattr(args, "certificate", False),
        assert_lemmas=getattr(args, "assert_lemmas", False),
        small_component_threshold=args.threshold,
    )


def _format_ids(ids) -> str:
    return " ".join(str(v) for v in sorted(ids))


def _cmd_solve_mis(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    result = mis_solve(g, _solve_options(args))
    print(f"alpha {result.alpha}")
    if args.certificate:
        print(_format_ids(result.certificate))
    if args.stats:
        print(format_stats(result), end="")
    if args.assert_lemmas and result.stats.lemma_violations:
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_solve_vc(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    opts = _solve_options(args)
    size, cover, _, result = mvc_solve_detailed(g, opts)
    print(f"vc {size}")
    if args.certificate:
        print(_format_ids(cover))
    if args.stats:
        print(format_stats(result), end="")
    if args.assert_lemmas and result.stats.lemma_violations:
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_decide_vc(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    opts = SolveOptions(small_component_threshold=args.threshold)
    result = vc_decide(g, args.k, opts)
    if result.decision:
        print("YES")
        print(_format_ids(result.cover))
        return EXIT_OK
    print("NO")
    return EXIT_NO


def _cmd_kernelize(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    kern = nt_kernel(g)
    print(f"c0 {len(kern.c0)}")
    print(f"v0 {len(kern.v0)}")
    print(f"i0 {len(kern.i0)}")
    print(f"lp_value {kern.lp_value}")
    if args.output:
        kernel_graph = induced_subgraph(g, kern.v0)
        Path(args.output).write_text(write_graph(kernel_graph, "dimacs"))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "cubic":
        if args.n is None:
            raise InputError("gen cubic requires -n")
        g = gen_random_cubic(args.n, args.seed)
    else:
        g = gen_named(args.family)
    text = write_graph(g, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    tokens = Path(args.certificate).read_text().split()
    try:
        ids = [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"malformed certificate file {args.certificate!r}") from None
    claimed = set(ids)
    if len(claimed) != len(ids):
        raise InputError("certificate repeats a vertex id")
    unknown = [v for v in claimed if v not in g]
    if unknown:
        raise InputError(f"certificate names unknown vertices: {sorted(unknown)}")
    if args.cover:
        ok = is_vertex_cover(g, claimed)
        kind = "cover"
    else:
        ok = is_independent_set(g, claimed)
        kind = "independent-set"
    if ok:
        print(f"VALID {len(claimed)}")
        return EXIT_OK
    print(f"INVALID {kind}")
    return EXIT_INPUT


def _cmd_report(args: argparse.Namespace) -> int:
    from .report import GROWTH_BOUND, run_growth_experiment

    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"bad --sizes value {args.sizes!r}") from None
    if not sizes:
        raise InputError("empty --sizes value")
    rep = run_growth_experiment(
        sizes=sizes,
        seeds_per_size=args.seeds_per_size,
        base_seed=args.seed,
        threshold=args.threshold,
        out_dir=args.output,
    )
    print(f"instances {len(rep.rows)}")
    print(f"median_growth {rep.median_growth:.6f}")
    print(f"max_growth {rep.max_growth:.6f}")
    print(f"bound {GROWTH_BOUND}")
    print(f"bound_ok {'true' if rep.bound_ok else 'false'}")
    print(f"wrote {rep.csv_path}")
    for path in rep.figure_paths:
        print(f"wrote {path}")
    return EXIT_OK if rep.bound_ok else EXIT_INTERNAL
