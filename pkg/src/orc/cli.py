"""Command-line entry point.

Subcommands mirror the library surface: ``generate`` emits graph files,
``curvature`` turns them into per-edge CSV reports, ``bound`` evaluates
the closed-form edge budget, ``witness`` prints certificate diagnostics,
``experiment`` runs the Monte-Carlo harnesses, and ``selftest`` runs a
fast subset of the verification suite.

Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import bounds, experiments
from .curvature import all_curvatures, edge_curvature
from .families import (
    TwoCommunitySpec,
    complete_community,
    dumbbell,
    prism,
    random_two_community,
    zero_curvature_config,
)
from .graphs import CommunityPartition, classify_edges, load_graph, save_graph
from .modes import EXACT, FLOAT, parse_fraction
from .witness import witness_upper_bound


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_graph(args):
    if getattr(args, "graph", None):
        with open(args.graph, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return load_graph(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _jobs_default() -> int:
    env = os.environ.get("ORC_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _add_graph_source(parser):
    parser.add_argument("--graph", metavar="PATH", help="graph file (default: stdin)")
    parser.add_argument("--stdin", action="store_true",
                        help="read the graph from stdin (the default when --graph is absent)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orc",
        description="transport curvature of graph edges, generators, bounds, "
                    "certificates, and Monte-Carlo experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a graph file for one of the studied families")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g_complete = gen_sub.add_parser("complete", help="one complete community")
    g_complete.add_argument("--n", type=int, required=True)
    g_dumbbell = gen_sub.add_parser("dumbbell", help="two complete blocks, single bridge")
    g_dumbbell.add_argument("--m", type=int, required=True)
    g_dumbbell.add_argument("--n", type=int, required=True)
    g_zero = gen_sub.add_parser("zero-config", help="two complete blocks, near-perfect matching")
    g_zero.add_argument("--n", type=int, required=True)
    g_prism = gen_sub.add_parser("prism", help="two complete blocks, full matching")
    g_prism.add_argument("--n", type=int, required=True)
    g_random = gen_sub.add_parser("random", help="two complete blocks, k random cross edges")
    g_random.add_argument("--m", type=int, required=True)
    g_random.add_argument("--n", type=int, required=True)
    g_random.add_argument("--k", type=int, required=True)
    g_random.add_argument("--seed", type=int, default=0)
    for sp in (g_complete, g_dumbbell, g_zero, g_prism, g_random):
        sp.add_argument("--out", metavar="PATH", help="output path (default stdout)")

    curv = sub.add_parser("curvature", help="per-edge curvature CSV for a graph file")
    _add_graph_source(curv)
    curv.add_argument("--alpha", type=parse_fraction, default=Fraction(1, 2),
                      metavar="P/Q", help="laziness parameter (default 1/2)")
    curv.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    curv.add_argument("--out", metavar="PATH", help="output path (default stdout)")

    bound = sub.add_parser("bound", help="edge budget guaranteeing nonpositive cross curvature")
    bound.add_argument("--m", type=int, required=True)
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--k", type=int, required=True)

    wit = sub.add_parser("witness", help="certificate diagnostics for cross edges")
    _add_graph_source(wit)
    wit.add_argument("--alpha", type=parse_fraction, default=Fraction(1, 2), metavar="P/Q")
    wit.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    wit.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"),
                     help="restrict to one edge (default: every cross edge)")
    wit.add_argument("--out", metavar="PATH")

    exp = sub.add_parser("experiment", help="Monte-Carlo harnesses")
    exp_sub = exp.add_subparsers(dest="experiment", required=True)
    dist = exp_sub.add_parser("distribution", help="per-trial nonpositive share for fixed n")
    dist.add_argument("--n", type=int, required=True)
    dist.add_argument("--k", type=_int_list, required=True, metavar="K1,K2,...")
    sweep = exp_sub.add_parser("sweep", help="mean/std of the nonpositive share over an (n, k) grid")
    sweep.add_argument("--n", type=_int_list, required=True, metavar="N1,N2,...")
    sweep.add_argument("--mult", type=_int_list, required=True, metavar="M1,M2,...")
    for sp in (dist, sweep):
        sp.add_argument("--trials", type=int, default=100)
        sp.add_argument("--alpha", type=parse_fraction, default=Fraction(1, 2), metavar="P/Q")
        sp.add_argument("--mode", choices=(EXACT, FLOAT), default=FLOAT)
        sp.add_argument("--seed", type=int, default=0, help="master seed")
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: ORC_JOBS or all cores)")
        sp.add_argument("--out", metavar="PATH")
        sp.add_argument("--svg", metavar="PATH", help="also render a plot")

    sub.add_parser("selftest", help="run a fast subset of the verification suite")
    return parser


def _cmd_generate(args) -> int:
    if args.family == "complete":
        g = complete_community(args.n)
        p = CommunityPartition.single(args.n)
    elif args.family == "dumbbell":
        g, p = dumbbell(args.m, args.n)
    elif args.family == "zero-config":
        g, p = zero_curvature_config(args.n)
    elif args.family == "prism":
        g, p = prism(args.n)
    else:
        g, p = random_two_community(
            TwoCommunitySpec(m=args.m, n=args.n, k=args.k, seed=args.seed))
    _write_output(save_graph(g, p), args.out)
    return 0


def _cmd_curvature(args) -> int:
    g, p = _read_graph(args)
    report = all_curvatures(g, p, args.alpha, mode=args.mode)
    _write_output(report.to_csv(), args.out)
    return 0


def _cmd_bound(args) -> int:
    thr = bounds.threshold(args.m, args.n)
    thr_rev = bounds.threshold(args.n, args.m)
    verdict = bounds.bound_holds(args.m, args.n, args.k)
    floor = min(thr.floor, thr_rev.floor)
    value = min(thr.value, thr_rev.value)
    sys.stdout.write(f"{value!r},{floor},{verdict}\n")
    return 0


def _cmd_witness(args) -> int:
    g, p = _read_graph(args)
    if args.edge:
        edges = [tuple(args.edge)]
    else:
        edges = list(classify_edges(g, p).inter)
    lines = []
    for edge in edges:
        report = witness_upper_bound(g, p, edge, args.alpha, mode=args.mode)
        kappa, _ = edge_curvature(g, edge, args.alpha, mode=args.mode)
        card = report.partition.cardinalities()
        sizes = " ".join(f"{name}={count}" for name, count in sorted(card.items()))
        levels = " ".join(
            f"{name}:{level}" for name, level in sorted(report.potential.items()))
        lines.append(f"edge ({edge[0]},{edge[1]})")
        lines.append(f"  classes: {sizes}")
        lines.append(f"  potential: {levels}")
        lines.append(f"  kappa_upper={report.kappa_upper}  kappa_solver={kappa}")
        lines.append(
            f"  dual_of_potential={report.dual_of_potential}"
            f"  lipschitz={report.lipschitz_ok}  dual_feasible={report.dual_feasible}")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_experiment(args) -> int:
    jobs = args.jobs if args.jobs is not None else _jobs_default()
    if args.experiment == "distribution":
        records = experiments.run_distribution(
            args.n, args.k, args.trials, alpha=args.alpha,
            master_seed=args.seed, mode=args.mode, jobs=jobs)
        _write_output(experiments.distribution_csv(records), args.out)
        if args.svg:
            experiments.save_distribution_svg(records, args.svg)
    else:
        rows = experiments.run_sweep(
            args.n, args.mult, args.trials, alpha=args.alpha,
            master_seed=args.seed, mode=args.mode, jobs=jobs)
        _write_output(experiments.sweep_csv(rows), args.out)
        if args.svg:
            experiments.save_sweep_svg(rows, args.svg)
    return 0


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest
    return run_selftest()


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "curvature": _cmd_curvature,
        "bound": _cmd_bound,
        "witness": _cmd_witness,
        "experiment": _cmd_experiment,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except BrokenPipeError:
        return 1
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        kind = type(exc).__name__
        sys.stderr.write(f"orc: {kind}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
