"""Command-line front end: figure-style CSV sweeps and verification suites.

Defaults reproduce the reference configuration (P = 1, a = d = 4/sqrt(3),
h = 2, alpha = 4, SNR = 0 dB), so bare invocations emit the headline
tables.  Every output starts with ``#`` comment lines echoing the
parameters; identical flags and seed give byte-identical files.

Exit codes: 0 success, 1 usage or configuration error, 2 infeasible
analytic request, 3 any Monte Carlo violation.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .bounds import exclusion_radius, interference_bound, legacy_bound
from .guarantees import (InfeasibleError, LinkBudget, criticality_feasible,
                         critical_power, rate_always_active, rate_scheduled,
                         solve_critical_hk)
from .hexnet import hex_rate_sweep
from .montecarlo import (ConfigurationError, check_ball_regulation,
                         check_interference_bound, check_scheduled_bound,
                         lattice_factory, matern_factory)
from .pathloss import BoundedPowerLaw, DivergenceError
from .pointset import Rect, UnsupportedReuseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_VIOLATION = 3

_DEFAULT_A = 4 / math.sqrt(3.0)
_SUITES = ("ball", "interference", "scheduled", "all")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _write_csv(out_path, params: dict, header: list[str], rows,
               footer: list[str] = ()) -> None:
    lines = [f"# {key} = {_fmt(val)}" for key, val in params.items()]
    lines.append(",".join(header))
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    lines.extend(f"# {note}" for note in footer)
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0:
        raise _UsageError("grid step must be positive")
    if hi < lo:
        raise _UsageError("grid upper end must not be below the lower end")
    return np.arange(lo, hi + step / 2, step)


def cmd_bound_compare(args) -> int:
    alphas = args.alpha or [2.5, 3.0, 4.0]
    t_grid = _grid(args.t_min, args.t_max, args.t_step)
    params = {"command": "bound-compare", "alpha": " ".join(map(_fmt, alphas)),
              "hardcore": args.hardcore,
              "t_min": args.t_min, "t_max": args.t_max, "t_step": args.t_step}
    rows = []
    for alpha in alphas:
        model = BoundedPowerLaw(alpha)
        for t in t_grid:
            # sweeping the exclusion radius directly: the serving distance
            # d = t realizes t = max(d, 2h - d) whenever t >= h, and h is
            # the smallest reachable exclusion radius
            d = max(float(t), args.hardcore)
            t_real = exclusion_radius(d, args.hardcore)
            rows.append((t_real, alpha,
                         interference_bound(model, args.hardcore, d),
                         legacy_bound(model, args.hardcore, d)))
    _write_csv(args.out, params, ["t", "alpha", "new_bound", "legacy_bound"], rows)
    return EXIT_OK


def cmd_rate_vs_hk(args) -> int:
    model = BoundedPowerLaw(args.alpha)
    snr = 10.0 ** (args.snr_db / 10.0)
    link = LinkBudget(args.power, args.power * model.eval(args.d) / snr,
                      args.d, model)
    params = {"command": "rate-vs-hk", "k": args.k, "hardcore": args.hardcore,
              "d": args.d, "snr_db": args.snr_db, "alpha": args.alpha,
              "power": args.power, "hk_min": args.hk_min, "hk_max": args.hk_max,
              "hk_step": args.hk_step, "log_base": args.log_base}
    aa = rate_always_active(link, args.hardcore, args.log_base).rate
    feasible = criticality_feasible(link, args.hardcore, args.k)
    hk_star = solve_critical_hk(link, args.hardcore, args.k) if feasible else None
    rows = []
    for h_k in _grid(args.hk_min, args.hk_max, args.hk_step):
        sched = rate_scheduled(link, args.k, float(h_k), args.log_base).rate
        rows.append((float(h_k), sched, aa, hk_star))
    footer = [] if feasible else [
        "criticality infeasible: log(1+SNR) < k*log(1+theta); "
        "always active dominates for every h_k"]
    _write_csv(args.out, params,
               ["H_K", "rate_scheduled", "rate_aa", "H_K_star"], rows, footer)
    return EXIT_OK


def cmd_critical_power(args) -> int:
    ks = args.k or [3, 4]
    model = BoundedPowerLaw(args.alpha)
    snr = 10.0 ** (args.snr_db / 10.0)
    link = LinkBudget(args.power, args.power * model.eval(args.d) / snr,
                      args.d, model)
    params = {"command": "critical-power", "k": " ".join(map(_fmt, ks)),
              "hardcore": args.hardcore, "d": args.d, "snr_db": args.snr_db,
              "alpha": args.alpha, "power": args.power, "hk_min": args.hk_min,
              "hk_max": args.hk_max, "hk_step": args.hk_step}
    rows = []
    for k in ks:
        for h_k in _grid(args.hk_min, args.hk_max, args.hk_step):
            try:
                res = critical_power(link, args.hardcore, k, float(h_k))
                rows.append((k, float(h_k), res.p_k_star, res.feasible))
            except InfeasibleError:
                rows.append((k, float(h_k), None, False))
    _write_csv(args.out, params, ["K", "H_K", "P_K_star", "feasible"], rows)
    return EXIT_OK


def cmd_hex_sweep(args) -> int:
    model = BoundedPowerLaw(args.alpha)
    snr_grid = _grid(args.snr_min, args.snr_max, args.snr_step)
    params = {"command": "hex-sweep", "a": args.a, "alpha": args.alpha,
              "power": args.power, "snr_min": args.snr_min,
              "snr_max": args.snr_max, "snr_step": args.snr_step,
              "log_base": args.log_base}
    rows = hex_rate_sweep(args.a, args.power, model, snr_grid, args.log_base)
    _write_csv(args.out, params, ["snr_db", "rate_aa", "rate_k3", "rate_k4"],
               rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    model = BoundedPowerLaw(args.alpha)
    h = args.hardcore
    matern_window = Rect(0.0, args.window, 0.0, args.window)
    matern = matern_factory(args.intensity, 2 * h, matern_window)
    lattice = lattice_factory(args.a, args.lattice_half_width)

    reports = []
    if args.suite in ("ball", "all"):
        r_grid = [2.0, 4.0, 8.0, 16.0]
        reports.append(check_ball_regulation(lattice, h, r_grid,
                                             args.trials, args.seed))
        reports.append(check_ball_regulation(matern, h, r_grid,
                                             args.trials, args.seed + 1))
    if args.suite in ("interference", "all"):
        reports.append(check_interference_bound(lattice, h, model,
                                                min(args.trials, 1), args.seed))
        reports.append(check_interference_bound(matern, h, model,
                                                args.trials, args.seed + 2))
    if args.suite in ("scheduled", "all"):
        if args.trials > 0:
            for k in (1, 3, 4):
                reports.append(check_scheduled_bound(
                    args.a, k, model, seed=args.seed,
                    half_width=args.lattice_half_width))

    params = {"command": "verify", "suite": args.suite, "trials": args.trials,
              "seed": args.seed, "alpha": args.alpha, "hardcore": h,
              "a": args.a, "intensity": args.intensity, "window": args.window,
              "lattice_half_width": args.lattice_half_width}
    header = ["seed", "d", "t", "realized", "bound", "ratio"]
    rows = []
    footer = []
    for rep in reports:
        footer.append(rep.summary())
        rows.extend((r.seed, r.d, r.t, r.realized, r.bound, r.ratio)
                    for r in rep.records)
    _write_csv(args.out, params, header, rows, footer)
    total = sum(rep.violations for rep in reports)
    for rep in reports:
        print(rep.summary())
    print(f"total violations: {total}")
    return EXIT_OK if total == 0 else EXIT_VIOLATION


def build_parser() -> _Parser:
    parser = _Parser(prog="cellbounds",
                     description="Worst-case interference and rate guarantees "
                                 "for hardcore-regulated cellular downlinks")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, alpha_list=False, k_list=False):
        if alpha_list:
            p.add_argument("--alpha", type=float, action="append",
                           help="path-loss exponent; repeatable")
        else:
            p.add_argument("--alpha", type=float, default=4.0,
                           help="path-loss exponent")
        if k_list:
            p.add_argument("--k", type=int, action="append",
                           help="reuse factor; repeatable")
        p.add_argument("--out", type=str, default=None,
                       help="output CSV path (default: stdout)")

    p = sub.add_parser("bound-compare",
                       help="new vs legacy interference bound over the "
                            "exclusion radius t")
    common(p, alpha_list=True)
    p.add_argument("--hardcore", type=float, default=1.0,
                   help="hardcore half-distance h")
    p.add_argument("--t-min", type=float, default=1.0)
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--t-step", type=float, default=0.1)
    p.set_defaults(func=cmd_bound_compare)

    p = sub.add_parser("rate-vs-hk",
                       help="scheduled vs always-active rate over the class "
                            "separation h_k")
    common(p)
    p.add_argument("--k", type=int, default=3, help="reuse factor")
    p.add_argument("--hardcore", type=float, default=2.0)
    p.add_argument("--d", type=float, default=_DEFAULT_A)
    p.add_argument("--snr-db", type=float, default=0.0)
    p.add_argument("--power", type=float, default=1.0)
    p.add_argument("--hk-min", type=float, default=2.0)
    p.add_argument("--hk-max", type=float, default=8.0)
    p.add_argument("--hk-step", type=float, default=0.1)
    p.add_argument("--log-base", choices=("nat", "2"), default="nat")
    p.set_defaults(func=cmd_rate_vs_hk)

    p = sub.add_parser("critical-power",
                       help="reduced power preserving the always-active "
                            "guarantee, over h_k")
    common(p, k_list=True)
    p.add_argument("--hardcore", type=float, default=2.0)
    p.add_argument("--d", type=float, default=_DEFAULT_A)
    p.add_argument("--snr-db", type=float, default=0.0)
    p.add_argument("--power", type=float, default=1.0)
    p.add_argument("--hk-min", type=float, default=2.0)
    p.add_argument("--hk-max", type=float, default=8.0)
    p.add_argument("--hk-step", type=float, default=0.1)
    p.set_defaults(func=cmd_critical_power)

    p = sub.add_parser("hex-sweep",
                       help="hexagonal-network rate guarantees vs SNR")
    common(p)
    p.add_argument("--a", type=float, default=_DEFAULT_A,
                   help="hexagon edge length")
    p.add_argument("--power", type=float, default=1.0)
    p.add_argument("--snr-min", type=float, default=-15.0)
    p.add_argument("--snr-max", type=float, default=15.0)
    p.add_argument("--snr-step", type=float, default=0.1)
    p.add_argument("--log-base", choices=("nat", "2"), default="nat")
    p.set_defaults(func=cmd_hex_sweep)

    p = sub.add_parser("verify",
                       help="run the Monte Carlo and lattice verification "
                            "suites")
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--alpha", type=float, default=4.0)
    p.add_argument("--hardcore", type=float, default=2.0)
    p.add_argument("--a", type=float, default=_DEFAULT_A)
    p.add_argument("--intensity", type=float, default=0.1,
                   help="Poisson intensity before thinning")
    p.add_argument("--window", type=float, default=100.0,
                   help="side length of the Matern sampling window")
    p.add_argument("--lattice-half-width", type=float, default=40.0)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DivergenceError, InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ConfigurationError, UnsupportedReuseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
