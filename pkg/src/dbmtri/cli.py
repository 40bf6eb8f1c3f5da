"""Command-line entry point.

Each subcommand runs one study and writes <name>.csv plus
<name>_summary.json into --out.  The exit code is nonzero when any of the
run's checks fail, so shell pipelines can gate on it.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .experiments import (
    approx_error_result,
    bhat_experiment,
    compare_limit_experiment,
    eigen_cov_result,
    entry_stats_experiment,
    kurtosis_experiment,
    moment_check_experiment,
    verify_combinatorics,
)
from .grids import TimeGrid
from .parallel import resolve_threads


def _add_run_flags(p: argparse.ArgumentParser, samples: int) -> None:
    p.add_argument("--samples", type=int, default=samples, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0, help="master seed; all streams derive from it")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: DBM_THREADS or CPU count)")
    p.add_argument("--sequential", action="store_true", help="force one worker; same output, useful for timing")
    p.add_argument("--out", type=Path, default=Path("."), help="directory for the CSV and JSON files")


def _add_grid_flags(p: argparse.ArgumentParser, t_max: float = 0.5, dt: float = 1e-3) -> None:
    p.add_argument("--t-max", type=float, default=t_max, help="end of the time window")
    p.add_argument("--dt", type=float, default=dt, help="grid spacing")


def _add_beta(p: argparse.ArgumentParser) -> None:
    p.add_argument("--beta", type=int, default=1, choices=(1, 2, 4), help="ensemble symmetry class")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbmtri",
        description="Simulation and verification toolkit for tridiagonalized matrix diffusions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate-entries", help="mean/variance/covariance curves of one entry pair (a_j, b_j)")
    p.add_argument("--n", type=int, required=True, help="matrix size")
    _add_beta(p)
    p.add_argument("--j", type=int, required=True, help="entry index (1-based)")
    _add_grid_flags(p)
    _add_run_flags(p, samples=500)

    p = sub.add_parser("compare-limit", help="lag covariance of a_j vs its limiting OU law")
    p.add_argument("--n", type=int, required=True)
    _add_beta(p)
    p.add_argument("--j", type=int, required=True)
    _add_grid_flags(p)
    _add_run_flags(p, samples=500)

    p = sub.add_parser("bhat-compare", help="off-diagonal b_j vs the square-root transform of its limit")
    p.add_argument("--n", type=int, required=True)
    _add_beta(p)
    p.add_argument("--j", type=int, required=True)
    _add_grid_flags(p, dt=0.1)
    _add_run_flags(p, samples=500)

    p = sub.add_parser("kurtosis", help="excess kurtosis of a_j(0) + a_j(t) across matrix sizes")
    p.add_argument("--n", type=int, nargs="+", required=True, help="matrix sizes, smallest first")
    _add_beta(p)
    p.add_argument("--j", type=int, required=True)
    _add_grid_flags(p, t_max=2.0, dt=0.5)
    _add_run_flags(p, samples=2000)

    p = sub.add_parser("eigen-cov", help="largest-eigenvalue covariance: full matrix, corners, limit model")
    p.add_argument("--n", type=int, required=True)
    _add_beta(p)
    p.add_argument("--k", type=int, nargs="+", required=True, help="corner sizes")
    _add_grid_flags(p, dt=0.1)
    _add_run_flags(p, samples=200)

    p = sub.add_parser("moment-check", help="two-time trace moments vs the exact semicircular kernel")
    p.add_argument("--n", type=int, default=300, help="trailing block size")
    p.add_argument("--k", type=int, default=4, help="largest polynomial degree")
    p.add_argument("--lag", type=float, default=0.3, help="time separation of the two frames")
    _add_run_flags(p, samples=500)

    p = sub.add_parser("approx-error", help="sup-over-time error of the series-approximate entries, by size")
    p.add_argument("--n", type=int, nargs="+", required=True, help="matrix sizes")
    p.add_argument("--k", type=int, default=3, help="entries 1..k are approximated")
    _add_grid_flags(p, dt=0.1)
    _add_run_flags(p, samples=100)

    p = sub.add_parser("verify-combinatorics", help="exact pairing/permutation/polynomial identity suite")
    p.add_argument("--out", type=Path, default=Path("."))
    p.add_argument("--seed", type=int, default=0)

    return parser


def _grid(args) -> TimeGrid:
    return TimeGrid.from_interval(args.t_max, args.dt)


def _run(args):
    threads = resolve_threads(getattr(args, "threads", None), getattr(args, "sequential", False))
    if args.command == "simulate-entries":
        return entry_stats_experiment(args.n, args.beta, args.j, _grid(args), args.samples, args.seed, threads)
    if args.command == "compare-limit":
        return compare_limit_experiment(args.n, args.beta, args.j, _grid(args), args.samples, args.seed, threads)
    if args.command == "bhat-compare":
        return bhat_experiment(args.n, args.beta, args.j, _grid(args), args.samples, args.seed, threads)
    if args.command == "kurtosis":
        return kurtosis_experiment(args.n, args.j, _grid(args), args.samples, args.seed, beta=args.beta)
    if args.command == "eigen-cov":
        return eigen_cov_result(args.n, args.k, _grid(args), args.samples, args.seed, beta=args.beta)
    if args.command == "moment-check":
        return moment_check_experiment(args.n, args.k, args.lag, args.samples, args.seed, threads)
    if args.command == "approx-error":
        return approx_error_result(args.n, args.k, _grid(args), args.samples, args.seed)
    if args.command == "verify-combinatorics":
        return verify_combinatorics()
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    from .report import write_csv, write_summary

    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    result = _run(args)
    wall = time.perf_counter() - start
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    seed = getattr(args, "seed", 0)
    if result.curves:
        write_csv(outdir / f"{result.name}.csv", result.curves, result.config, seed)
    write_summary(outdir / f"{result.name}_summary.json", result, seed, wall)
    for c in result.checks:
        print(f"[{'pass' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    status = "ok" if result.ok else "CHECKS FAILED"
    print(f"{result.name}: {status} ({wall:.1f}s, outputs in {outdir})")
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
