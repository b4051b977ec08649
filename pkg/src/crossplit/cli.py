"""Command-line interface.

Subcommands: split (estimate t_n from a CSV), curve (export T_n for
plotting), simulate (emit a generated series), table1 (replicated moments of
sqrt(n) t_n over a size grid), variance (long-run variance of the influence
series).  Exit codes: 0 success, 1 bad input, 2 sentinel split point.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .crossover import build_crossover_curve, sample_split_point
from .errors import CrossplitError
from .experiment import ExperimentConfig, run_experiment
from .generators import GeneratorKind, GeneratorSpec, generate
from .sample import load_sample_csv
from .variance import long_run_variance, split_confidence_interval

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SENTINEL = 2


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_split(args) -> int:
    sample = load_sample_csv(args.input)
    est = sample_split_point(sample)
    if not est.crossed:
        print(f"no finite split point: criterion {est.outcome.value}", file=sys.stderr)
        return EXIT_SENTINEL
    print(_fmt(est.t_n))
    if args.confidence is not None:
        inf = split_confidence_interval(
            sample,
            level=args.confidence,
            bandwidth="auto" if args.bandwidth is None else args.bandwidth,
        )
        print(f"{_fmt(inf.lower)} {_fmt(inf.upper)}")
    return EXIT_OK


def cmd_curve(args) -> int:
    sample = load_sample_csv(args.input)
    curve = build_crossover_curve(sample)
    lo, hi = curve.domain
    hi_in = math.nextafter(hi, -math.inf)
    ts = [np.clip(curve.breakpoints, lo, hi_in)]
    if args.grid > 0:
        g = np.linspace(lo, hi, args.grid)
        g[-1] = hi_in
        ts.append(g)
    est = sample_split_point(sample)
    if est.crossed:
        ts.append(np.asarray([min(est.t_n, hi_in)]))
    grid = np.unique(np.concatenate(ts))
    vals = curve(grid)
    lines = ["t,T_n"]
    lines.extend(f"{_fmt(t)},{_fmt(v)}" for t, v in zip(grid, vals))
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_simulate(args) -> int:
    spec = GeneratorSpec(
        kind=GeneratorKind(args.kind),
        n=args.n,
        seed=args.seed,
        terms=args.terms,
        innovation_variance=args.innovation_variance,
        rho=args.rho,
    )
    sample = generate(spec)
    _write_text(args.output, "\n".join(_fmt(v) for v in sample.values) + "\n")
    return EXIT_OK


def cmd_table1(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    config = ExperimentConfig(
        kind=GeneratorKind.MOVING_SUM,
        sample_sizes=sizes,
        replicates=args.replicates,
        master_seed=args.seed,
    )
    report = run_experiment(config, workers=args.workers)
    if args.output is not None:
        _write_text(args.output, report.to_csv())
    if args.json is not None:
        _write_text(args.json, report.to_json())
    print(f"{'n':>8} {'used':>6} {'sent':>5} {'mean':>16} {'variance':>16}")
    for s in report.summaries:
        print(
            f"{s.n:>8} {s.replicates_used:>6} {s.sentinels:>5} "
            f"{_fmt(s.mean_sqrt_n_tn):>16} {_fmt(s.var_sqrt_n_tn):>16}"
        )
    return EXIT_OK


def cmd_variance(args) -> int:
    sample = load_sample_csv(args.input)
    if args.t is None:
        est = sample_split_point(sample)
        if not est.crossed:
            print(f"no finite split point: criterion {est.outcome.value}", file=sys.stderr)
            return EXIT_SENTINEL
        t = est.t_n
    else:
        t = args.t
    bandwidth = "auto" if args.bandwidth is None else args.bandwidth
    print(_fmt(long_run_variance(sample, t=t, bandwidth=bandwidth)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossplit",
        description="Two-cluster split-point estimation via the cross-over criterion.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("split", help="estimate the split point from a CSV sample")
    p.add_argument("--input", required=True, help="CSV file, one value per line")
    p.add_argument("--confidence", type=float, default=None, help="CI level in (0,1)")
    p.add_argument("--bandwidth", type=int, default=None, help="Bartlett lag count")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("curve", help="export the sample criterion function as CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--grid", type=int, default=512, help="uniform grid points")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("simulate", help="emit a generated series as CSV")
    p.add_argument("--kind", required=True, choices=[k.value for k in GeneratorKind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--terms", type=int, default=3)
    p.add_argument("--innovation-variance", type=float, default=None)
    p.add_argument("--rho", type=float, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("table1", help="replicated moments of sqrt(n) t_n")
    p.add_argument("--sizes", default="100,300,1000,5000")
    p.add_argument("--replicates", type=int, default=1000)
    p.add_argument("--seed", type=int, required=True, help="master seed")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--output", default=None, help="report CSV path")
    p.add_argument("--json", default=None, help="report JSON path")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("variance", help="long-run variance of the influence series")
    p.add_argument("--input", required=True)
    p.add_argument("--t", type=float, default=None, help="evaluation point (default: t_n)")
    p.add_argument("--bandwidth", type=int, default=None)
    p.set_defaults(func=cmd_variance)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CrossplitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
