"""Command-line front end.

Subcommands:

* ``optimize``   best power split per caching case, or for split-file mode
* ``sweep``      parameter sweep with optimized NOMA, OMA, and cacheless
                 NOMA averages per step
* ``surface``    split-file objective sampled on a grid, both branches
* ``validate``   Monte Carlo cross-check of the analytic probabilities
* ``concavity``  objective profiles per branch with concavity verdicts

All output is CSV with a header row, "." decimal separator, "," delimiter,
and LF line endings.  Exit codes: 0 success, 1 usage or config error,
2 validation failure, 3 numerical error.
"""
import argparse
import csv
import math
import sys
from dataclasses import replace

import numpy as np

from .caching import CacheCase, Catalog
from .config import ConfigError, load_config
from .errors import QuadratureAccuracyError
from .noma_full import average_success, case_objective, oma_average_success
from .noma_split import split_objective_branch
from .optimizer import (
    INTERIOR_TRIM,
    case_branch_feasible,
    check_concavity,
    optimize_case,
    optimize_split,
)
from .mc import McConfig, mc_case, mc_split

__all__ = [
    "main",
    "run_optimize",
    "run_sweep",
    "run_surface",
    "run_validate",
    "run_concavity",
    "sweep_values",
    "SWEEP_VARIABLES",
    "VALIDATE_ALPHAS",
    "VALIDATE_SPLIT_GRID",
]

_CASES = {
    "a": CacheCase.A,
    "b": CacheCase.B,
    "c": CacheCase.C,
    "d": CacheCase.D,
}

SWEEP_VARIABLES = ("zeta", "snr_db", "cache_size", "omega", "m", "num_files")
_INT_VARIABLES = ("cache_size", "num_files")

VALIDATE_ALPHAS = tuple(round(0.05 + 0.1 * i, 2) for i in range(10))
VALIDATE_SPLIT_GRID = (0.1, 0.3, 0.5, 0.7, 0.9)

_PASS_ABS = 0.005
_PASS_CI_FACTOR = 3.0


def _fmt(x):
    """Locale-independent cell formatting."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _write_csv(stream, header, rows):
    writer = csv.writer(stream, delimiter=",", lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(c) for c in row])


def run_optimize(cfg, selector):
    """Rows of (case, branch, alpha, beta, value, evaluations)."""
    rows = []
    if selector in _CASES:
        todo = [selector]
    elif selector == "all":
        todo = ["a", "b", "c", "d"]
    elif selector == "split":
        todo = ["split"]
    else:
        raise ValueError(f"unknown case selector {selector!r}")
    for name in todo:
        if name == "split":
            res = optimize_split(cfg.split)
            alpha, beta = res.argmax
            rows.append(("split", res.branch, alpha, beta,
                         res.value, res.evaluations))
        else:
            res = optimize_case(_CASES[name], cfg.scenario)
            rows.append((_CASES[name].value, res.branch, res.argmax, "",
                         res.value, res.evaluations))
    return rows


def sweep_values(variable, start, stop, steps, values):
    """Resolve the swept values from either an explicit list or a range."""
    if variable not in SWEEP_VARIABLES:
        raise ValueError(f"unknown sweep variable {variable!r}")
    if values is not None:
        if start is not None or stop is not None or steps is not None:
            raise ValueError("--values excludes --start/--stop/--steps")
        out = [float(v) for v in values.split(",") if v.strip() != ""]
        if not out:
            raise ValueError("--values is empty")
    else:
        if start is None or stop is None or steps is None:
            raise ValueError("sweep needs --values or --start/--stop/--steps")
        if steps < 1:
            raise ValueError("--steps must be at least 1")
        if steps == 1:
            out = [float(start)]
        else:
            out = [start + (stop - start) * i / (steps - 1) for i in range(steps)]
    if variable in _INT_VARIABLES:
        ints = []
        for v in out:
            r = round(v)
            if abs(v - r) > 1e-9:
                raise ValueError(f"{variable} values must be integers, got {v!r}")
            ints.append(int(r))
        return ints
    return out


def _apply_sweep(cfg, variable, value):
    """New ScenarioConfig with one variable replaced."""
    sc = cfg.scenario
    if variable == "zeta":
        return replace(cfg, catalog=replace(cfg.catalog, zeta=float(value)))
    if variable == "snr_db":
        power = sc.sigma1_sq * 10.0 ** (float(value) / 10.0)
        return cfg.replace_scenario(replace(sc, power=power))
    if variable == "cache_size":
        return replace(cfg, catalog=replace(cfg.catalog, cache_size=int(value)))
    if variable == "num_files":
        return replace(cfg, catalog=replace(cfg.catalog, num_files=int(value)))
    if variable == "omega":
        v = float(value)
        new_sc = replace(
            sc,
            chan1=replace(sc.chan1, omega1=v, omega2=v),
            chan2=replace(sc.chan2, omega1=v, omega2=v),
        )
        return cfg.replace_scenario(new_sc)
    if variable == "m":
        v = float(value)
        new_sc = replace(
            sc,
            chan1=replace(sc.chan1, m1=v, m2=v),
            chan2=replace(sc.chan2, m1=v, m2=v),
        )
        return cfg.replace_scenario(new_sc)
    raise ValueError(f"unknown sweep variable {variable!r}")


def run_sweep(cfg, variable, values):
    """Rows of (value, avg_success_noma, avg_success_oma, avg_success_conventional).

    The conventional column reruns the average with emptied caches, so it
    coincides with the NOMA column exactly when cache_size is already 0.
    """
    rows = []
    for value in values:
        step = _apply_sweep(cfg, variable, value)
        scen, cat, avg = step.scenario, step.catalog, step.averaging
        noma = average_success(scen, cat, optimize_case, averaging=avg)
        oma = oma_average_success(scen, cat, averaging=avg)
        empty = Catalog(num_files=cat.num_files, zeta=cat.zeta, cache_size=0)
        conv = average_success(scen, empty, optimize_case, averaging=avg)
        rows.append((value, noma, oma, conv))
    return rows


def run_surface(cfg, grid):
    """Rows of (alpha, beta, objective, branch), low branch first."""
    if grid < 2:
        raise ValueError("--grid must be at least 2")
    rows = []
    betas = np.linspace(0.0, 1.0, grid)
    for branch, alo, ahi in (("low", 0.0, 0.5), ("high", 0.5, 1.0)):
        for alpha in np.linspace(alo, ahi, grid):
            for beta in betas:
                v = split_objective_branch(float(alpha), float(beta),
                                           cfg.split, branch)
                rows.append((float(alpha), float(beta), v, branch))
    return rows


def _with_semantics(cfg, semantics):
    if cfg.scenario.semantics == semantics:
        return cfg
    return cfg.replace_scenario(replace(cfg.scenario, semantics=semantics))


def run_validate(cfg, samples, seed, workers):
    """Analytic-vs-MC rows; returns (rows, all_passed)."""
    rows = []
    ok = True
    cell = 0
    for name in ("a", "b", "c", "d"):
        case = _CASES[name]
        for semantics in ("product", "joint"):
            step = _with_semantics(cfg, semantics)
            scen = step.scenario
            objective = case_objective(case, scen)
            for alpha in VALIDATE_ALPHAS:
                mc_cfg = McConfig(samples=samples,
                                  seed=(seed + cell) % (2 ** 64),
                                  workers=workers)
                cell += 1
                analytic = objective(alpha)
                est = mc_case(case, alpha, scen, mc_cfg).joint
                tol = max(_PASS_ABS, _PASS_CI_FACTOR * est.half_width)
                diff = abs(analytic - est.value)
                passed = diff <= tol
                ok = ok and passed
                rows.append(("case", case.value, semantics, alpha, "",
                             analytic, est.value, est.half_width, diff,
                             "pass" if passed else "fail"))
    for semantics in ("product", "joint"):
        step = _with_semantics(cfg, semantics)
        for alpha in VALIDATE_SPLIT_GRID:
            for beta in VALIDATE_SPLIT_GRID:
                mc_cfg = McConfig(samples=samples,
                                  seed=(seed + cell) % (2 ** 64),
                                  workers=workers)
                cell += 1
                branch = "high" if alpha > 0.5 else "low"
                analytic = split_objective_branch(alpha, beta, step.split,
                                                  branch)
                est = mc_split(alpha, beta, step.split, mc_cfg).joint
                tol = max(_PASS_ABS, _PASS_CI_FACTOR * est.half_width)
                diff = abs(analytic - est.value)
                passed = diff <= tol
                ok = ok and passed
                rows.append(("split", "split", semantics, alpha, beta,
                             analytic, est.value, est.half_width, diff,
                             "pass" if passed else "fail"))
    return rows, ok


def _interior(lo, hi):
    margin = INTERIOR_TRIM * (hi - lo)
    return lo + margin, hi - margin


def run_concavity(cfg, selector, grid):
    """Objective profiles and per-branch concavity verdicts.

    Returns (rows, verdicts) where rows are (case, branch, alpha, objective)
    and verdicts are (case, branch, concave: bool, worst: float).
    """
    if grid < 11:
        raise ValueError("--grid must be at least 11")
    if selector == "all":
        todo = ["a", "b", "c", "d"]
    elif selector in _CASES:
        todo = [selector]
    else:
        raise ValueError(f"unknown case selector {selector!r}")
    rows = []
    verdicts = []
    for name in todo:
        case = _CASES[name]
        objective = case_objective(case, cfg.scenario)
        for branch, interval in case_branch_feasible(case, cfg.scenario).items():
            if interval is None:
                continue
            lo, hi = _interior(*interval)
            concave, worst = check_concavity(objective, lo, hi, grid_n=grid)
            verdicts.append((case.value, branch, concave, worst))
            for alpha in np.linspace(lo, hi, grid):
                rows.append((case.value, branch, float(alpha),
                             objective(float(alpha))))
    return rows, verdicts


class _Parser(argparse.ArgumentParser):
    """argparse flags usage problems with exit code 2; the contract says 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser():
    parser = _Parser(prog="cachenoma",
                     description="Cache-aided NOMA decoding analysis over "
                                 "cascaded Nakagami-m links.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="scenario file (JSON); defaults are built in")
    common.add_argument("--out", metavar="PATH",
                        help="output file (default stdout)")
    common.add_argument("--seed", type=int, default=0,
                        help="base random seed (default 0)")
    common.add_argument("--workers", type=int, default=1,
                        help="worker threads for sampling (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize", parents=[common],
                       help="optimal power split per caching case")
    p.add_argument("--case", default="all",
                   choices=["a", "b", "c", "d", "all", "split"],
                   help="which objective to optimize (default all)")

    p = sub.add_parser("sweep", parents=[common],
                       help="average success vs one swept parameter")
    p.add_argument("--variable", required=True, choices=list(SWEEP_VARIABLES))
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--values", help="comma-separated explicit sweep values")

    p = sub.add_parser("surface", parents=[common],
                       help="split objective on an (alpha, beta) grid")
    p.add_argument("--grid", type=int, default=51,
                   help="points per axis per branch (default 51)")

    p = sub.add_parser("validate", parents=[common],
                       help="Monte Carlo cross-check of analytic values")
    p.add_argument("--samples", type=int, default=1_000_000,
                   help="samples per estimate (default 1000000, min 10000)")

    p = sub.add_parser("concavity", parents=[common],
                       help="objective profiles with concavity verdicts")
    p.add_argument("--case", default="all",
                   choices=["a", "b", "c", "d", "all"])
    p.add_argument("--grid", type=int, default=101,
                   help="grid points per branch (default 101, min 11)")
    return parser


def _dispatch(args, out):
    if args.command == "optimize":
        cfg = load_config(args.config)
        _write_csv(out, ("case", "branch", "alpha", "beta", "value",
                         "evaluations"), run_optimize(cfg, args.case))
        return 0
    if args.command == "sweep":
        cfg = load_config(args.config)
        values = sweep_values(args.variable, args.start, args.stop,
                              args.steps, args.values)
        _write_csv(out, (args.variable, "avg_success_noma", "avg_success_oma",
                         "avg_success_conventional"),
                   run_sweep(cfg, args.variable, values))
        return 0
    if args.command == "surface":
        cfg = load_config(args.config)
        _write_csv(out, ("alpha", "beta", "objective", "branch"),
                   run_surface(cfg, args.grid))
        return 0
    if args.command == "validate":
        if args.samples < 10_000:
            raise ValueError("--samples must be at least 10000")
        if args.workers < 1:
            raise ValueError("--workers must be at least 1")
        cfg = load_config(args.config)
        rows, ok = run_validate(cfg, args.samples, args.seed, args.workers)
        _write_csv(out, ("kind", "case", "semantics", "alpha", "beta",
                         "analytic", "estimate", "half_width", "abs_diff",
                         "status"), rows)
        return 0 if ok else 2
    if args.command == "concavity":
        cfg = load_config(args.config)
        rows, verdicts = run_concavity(cfg, args.case, args.grid)
        _write_csv(out, ("case", "branch", "alpha", "objective"), rows)
        code = 0
        for case, branch, concave, worst in verdicts:
            print(f"case={case} branch={branch} concave={_fmt(concave)} "
                  f"worst_second_difference={_fmt(worst)}", file=sys.stderr)
            if not concave:
                code = 2
        return code
    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.out is not None:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                return _dispatch(args, fh)
        return _dispatch(args, sys.stdout)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"cachenoma: error: {exc}", file=sys.stderr)
        return 1
    except QuadratureAccuracyError as exc:
        print(f"cachenoma: numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
