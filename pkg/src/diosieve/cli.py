"""Command-line interface.

Subcommands:
  sieve         build and summarize a prime table
  count-h       exact Diophantine counts over primes
  expsum        scaling experiment for the weighted exponential sum
  verify-ls     randomized large-sieve verification (seeded, deterministic)
  sieve-bounds  linear-sieve lower/upper bounds vs the exact sifted count
  remainder     averaged remainder scan (R or E terms)
  pipeline      full lower-bound pipeline from a key=value config file

Randomized commands take an explicit --seed; identical seeds produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from .backend import BACKEND
from .errors import DomainError
from .expsum import ScalingReport, scaling_experiment
from .fractional import DioParams, count_H, count_H_fixed, count_H_sieved
from .indicator import build_chi
from .large_sieve import randomized_check
from .linear_sieve import (
    SieveSequence,
    build_beta_weights,
    moebius_weights,
    reciprocal_density,
    sieve_count_exact,
    sieve_lower_bound,
    zero_weights,
)
from .pipeline import parse_config_file, remainder_scan, run_pipeline
from .primes import build_table
from .reports import write_csv_rows, write_json


def _cmd_sieve(args) -> int:
    t0 = time.perf_counter()
    table = build_table(args.n, with_spf=args.spf, segment_size=args.segment_size)
    dt = time.perf_counter() - t0
    ps = table.primes()
    print(f"sieve [2, {args.n}] backend={BACKEND} spf={args.spf} segment={table.segment_size}")
    print(f"pi({args.n}) = {ps.size}, largest prime = {ps[-1]}, built in {dt:.2f}s")
    if args.out:
        write_json(
            {"n": args.n, "pi": int(ps.size), "largest": int(ps[-1]), "spf": args.spf,
             "seconds": dt, "backend": BACKEND},
            args.out,
        )
    return 0


def _cmd_count_h(args) -> int:
    params = DioParams(alpha=args.alpha, beta=args.beta, gamma=args.gamma, theta=args.theta)
    table = build_table(args.n + 2, with_spf=True)
    mode = "frac" if args.frac else "nearest"
    if args.z is not None:
        count = count_H_sieved(table, args.n, params, args.z, mode=mode)
        label = f"sifted (z={args.z})"
    elif args.fixed_delta:
        count = count_H_fixed(table, args.n, params, r=args.r, mode=mode)
        label = f"fixed delta = n^-theta, r={args.r}"
    else:
        count = count_H(table, args.n, params, r=args.r, mode=mode)
        label = f"per-prime threshold, r={args.r}"
    print(
        f"count: {count}  [n={args.n} alpha={args.alpha} beta={args.beta} "
        f"gamma={args.gamma} theta={args.theta} mode={mode} {label}]"
    )
    if args.out:
        write_json(
            {"n": args.n, "alpha": args.alpha, "beta": args.beta, "gamma": args.gamma,
             "theta": args.theta, "r": args.r, "z": args.z, "mode": mode,
             "fixed_delta": bool(args.fixed_delta), "count": count},
            args.out,
        )
    return 0


def _weights_factory(kind: str, d_exponent: float, s: float):
    def factory(n: int):
        level = max(1, round(n**d_exponent))
        if kind == "moebius":
            return moebius_weights(level)
        if kind == "beta-lower":
            return build_beta_weights(max(2.0, level ** (1.0 / s)), max(2, level), "lower")
        return zero_weights(max(1, level))

    return factory


def _cmd_expsum(args) -> int:
    n_list = [int(x) for x in args.n_list.split(",")]
    table = build_table(2 * max(n_list) + 2, with_spf=False)
    report: ScalingReport = scaling_experiment(
        alpha=args.alpha,
        gamma=args.gamma,
        n_list=n_list,
        K=args.k,
        weights_for_n=_weights_factory(args.weights, args.d_exponent, args.s),
        table=table,
        c=args.c,
        support=args.support,
        full_range=args.full_range,
    )
    mode = "dyadic [1,N]" if args.full_range else "[N, 2N]"
    print(f"expsum scaling {mode}: alpha={args.alpha} gamma={args.gamma} "
          f"K={args.k} weights={args.weights}")
    for row in report.rows:
        print(
            f"  N={row.N:>9}  D={row.D:>6}  |S|={row.abs_S:14.6e}  "
            f"bound={row.bound:12.5e}  ratio={row.ratio:.6f}"
        )
    if report.slope is None:
        print("  slope: degenerate (all |S| = 0)")
    else:
        print(f"  log|S| vs log N slope: {report.slope:.4f}")
    if args.out:
        write_json({"rows": report.to_records(), "slope": report.slope}, args.out)
    return 0


def _cmd_verify_ls(args) -> int:
    res = randomized_check(args.trials, args.seed, max_points=args.max_points, max_m=args.max_m)
    print(
        f"large sieve: trials={res.trials} seed={args.seed} "
        f"violations={res.violations} min_slack={res.min_slack:.6e}"
    )
    if args.out:
        write_json(
            {"trials": res.trials, "seed": args.seed, "violations": res.violations,
             "min_slack": res.min_slack},
            args.out,
        )
    return 0 if res.violations == 0 else 1


def _cmd_sieve_bounds(args) -> int:
    table = build_table(args.n, with_spf=True)
    seq = SieveSequence(np.ones(args.n + 1))
    lower = sieve_lower_bound(
        seq, reciprocal_density(), args.z, args.level, X=seq.total, table=table
    )
    upper_w = build_beta_weights(args.z, args.level, "upper")
    upper = sum(lam * seq.f_d(int(d)) for d, lam in zip(upper_w.ds, upper_w.lams))
    exact = sieve_count_exact(seq, args.z, table)
    print(f"sieve bounds on 1..{args.n}, z={args.z}, level D={args.level} (s={lower.s:.3f})")
    print(f"  lower combinatorial bound = {lower.bound:.3f}")
    print(f"  exact sifted count        = {exact:.3f}")
    print(f"  upper combinatorial bound = {upper:.3f}")
    print(f"  analytic main X V(z) f(s) = {lower.main:.3f}  remainder = {lower.remainder:.3f}")
    ok = lower.bound <= exact + 1e-9 and exact <= upper + 1e-9
    print(f"  sandwich holds: {ok}")
    if args.out:
        write_json(
            {"n": args.n, "z": args.z, "level": args.level, "lower": lower.bound,
             "exact": exact, "upper": upper, "main": lower.main,
             "remainder": lower.remainder, "sandwich": ok},
            args.out,
        )
    return 0 if ok else 1


def _cmd_remainder(args) -> int:
    table = build_table(args.n + 2, with_spf=True)
    level = max(3, int(args.n**args.level_exp))
    weights = build_beta_weights(
        max(2.0, level ** (1.0 / 2.01)), level, "lower", exclude_two=True
    )
    chi = None
    params = None
    if args.which == "E":
        params = DioParams(alpha=args.alpha, beta=args.beta, gamma=args.gamma, theta=args.theta)
        delta = min(args.n**-args.theta, 0.499)
        cutoff = max(1, int(np.ceil((1 / delta) * np.log(1 / delta) ** 2)))
        chi = build_chi(delta, cutoff)
    rep = remainder_scan(
        table, args.n, weights, args.which, chi=chi, params=params,
        level_exponent=args.level_exp,
    )
    print(
        f"remainder scan which={rep.which} n={rep.n} level={rep.level} "
        f"support={rep.support_size} (even skipped: {rep.skipped_even})"
    )
    print(f"  weighted sum = {rep.total:.6f}")
    for a, ratio in rep.log_power_ratios.items():
        print(f"  |sum| (log n)^{a} / n = {ratio:.6e}")
    if args.out:
        write_json(rep, args.out)
    return 0


def _cmd_pipeline(args) -> int:
    config = parse_config_file(args.config)
    report = run_pipeline(config)
    print(f"pipeline n={report.n} gamma={report.gamma} theta={report.theta}")
    print(f"  delta={report.delta:.6f} (chi width {report.delta_chi}) K={report.cutoff} "
          f"D={report.level} z={report.z:.3f}")
    print(f"  weighted sum        = {report.weighted_sum:.4f}")
    print(f"  sifted smoothed sum = {report.sifted_smoothed_sum:.4f}")
    print(f"  exact counts: fixed-delta {report.h_fixed}, per-prime r=3 {report.h_perprime_r3}, "
          f"per-prime sifted {report.h_perprime_sieved}")
    print(f"  decomposition: main_li={report.main_li:.4f} sum_R={report.sum_R:.4f} "
          f"sum_E={report.sum_E:.4f} residual={report.residual:.3e} "
          f"(allowance {report.tail_allowance:.3e})")
    print(f"  analytic companion: main={report.main_analytic:.4f} "
          f"assembled={report.assembled_analytic:.4f}")
    print(f"  identity_ok={report.identity_ok} sandwich_ok={report.sandwich_ok} "
          f"positive_ok={report.positive_ok} ratio_h={report.ratio_h:.4f}")
    for w in report.warnings:
        print(f"  warning: {w}")
    if args.out:
        write_json(report, args.out)
    if args.csv:
        from .reports import to_plain_dict

        d = to_plain_dict(report)
        d.pop("timings", None)
        d.pop("warnings", None)
        write_csv_rows([d], args.csv)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diosieve", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="build and summarize a prime table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spf", action="store_true", help="also build smallest-prime-factor data")
    p.add_argument("--segment-size", type=int, default=1 << 20)
    p.add_argument("--out", help="write a JSON summary here")
    p.set_defaults(func=_cmd_sieve)

    p = sub.add_parser("count-h", help="exact Diophantine counts over primes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--r", type=int, default=None, help="almost-prime order for p+2")
    p.add_argument("--z", type=float, default=None,
                   help="sift p+2 by primes below z instead of the r-condition")
    p.add_argument("--frac", action="store_true",
                   help="use the fractional part instead of nearest-integer distance")
    p.add_argument("--fixed-delta", action="store_true",
                   help="threshold n^-theta for every prime instead of p^-theta")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_count_h)

    p = sub.add_parser("expsum", help="scaling experiment for S(N,K,D,gamma)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated increasing N values")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--weights", choices=["moebius", "beta-lower", "zero"], default="moebius")
    p.add_argument("--c", type=int, default=-2)
    p.add_argument("--d-exponent", type=float, default=1 / 3,
                   help="level grows as N^exponent")
    p.add_argument("--s", type=float, default=2.0, help="z = D^(1/s) for beta weights")
    p.add_argument("--support", choices=["primes", "all"], default="primes")
    p.add_argument("--full-range", action="store_true",
                   help="sum n over [1, N] via dyadic blocks instead of [N, 2N]")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_expsum)

    p = sub.add_parser("verify-ls", help="randomized large-sieve verification")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-points", type=int, default=40)
    p.add_argument("--max-m", type=int, default=1000)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify_ls)

    p = sub.add_parser("sieve-bounds", help="sieve bounds vs exact sifted count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--level", type=int, required=True, help="level of distribution D")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sieve_bounds)

    p = sub.add_parser("remainder", help="averaged remainder scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level-exp", type=float, default=4 / 7 - 0.02)
    p.add_argument("--which", choices=["R", "E"], required=True)
    p.add_argument("--alpha", type=float, default=float(np.sqrt(2.0)))
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--gamma", type=float, default=0.5)
    p.add_argument("--theta", type=float, default=0.04)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_remainder)

    p = sub.add_parser("pipeline", help="full lower-bound pipeline run")
    p.add_argument("--config", required=True, help="flat key = value config file")
    p.add_argument("--out", help="write the full JSON report here")
    p.add_argument("--csv", help="write a one-row CSV summary here")
    p.set_defaults(func=_cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
