"""Command-line front end.

Subcommands: `minimize` (one shape minimization), `sweep` (minimize over
a kappa grid), `verify` (closed form against quadrature / Monte Carlo /
grid oracles), `chvatal` (binomial argmin enumeration).  Output formats:
text (default), csv, json; `--out PATH` redirects from stdout, and the
sweep and chvatal report paths can render a matplotlib figure next to
the delimited output via `--plot PATH`.

Exit codes: 0 success, 1 check failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

from .distributions import ParetoParams, WeibullParams
from .errors import DomainError
from .minimizers import (
    MinimizationResult,
    chvatal_argmin,
    minimize_pareto,
    minimize_weibull,
    nearest_to_two_thirds,
)
from .verify import VerifyConfig, run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

RECORD_COLUMNS = ("kappa", "kind", "argmin", "value", "root_x0", "residual")

VERIFY_COLUMNS = (
    "family", "kappa", "closed_form", "quadrature", "quadrature_err_est",
    "mc_estimate", "mc_half_width", "grid_argmin", "grid_value",
    "minimizer_argmin", "minimizer_value",
    "passed_quadrature", "passed_monte_carlo", "passed_grid", "overall",
)

CHVATAL_COLUMNS = ("n", "m_star", "nearest_two_thirds", "q_min", "match", "ties")


def _fmt(x) -> str:
    # 17 significant digits: round-trip exact for doubles
    return format(float(x), ".17g")


def _fmt_opt(x) -> str:
    return "" if x is None else _fmt(x)


def _fmt_bool(b) -> str:
    return "" if b is None else ("true" if b else "false")


@dataclass(frozen=True)
class OutputRecord:
    """One minimization rendered for output; optionals stay None."""

    kappa: float
    kind: str
    argmin: float | None
    value: float
    root_x0: float | None
    residual: float | None
    limit: str | None = None


def record_from_result(res: MinimizationResult) -> OutputRecord:
    return OutputRecord(
        kappa=res.kappa,
        kind=res.kind,
        argmin=res.argmin,
        value=res.value,
        root_x0=res.root.root if res.root is not None else None,
        residual=res.root.residual if res.root is not None else None,
        limit=res.limit,
    )


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _write_records(records: list[OutputRecord], fmt: str, fh) -> None:
    if fmt == "csv":
        writer = csv.writer(fh)
        writer.writerow(RECORD_COLUMNS)
        for r in records:
            writer.writerow([_fmt(r.kappa), r.kind, _fmt_opt(r.argmin),
                             _fmt(r.value), _fmt_opt(r.root_x0),
                             _fmt_opt(r.residual)])
    elif fmt == "json":
        payload = [{"kappa": r.kappa, "kind": r.kind, "argmin": r.argmin,
                    "value": r.value, "root_x0": r.root_x0,
                    "residual": r.residual} for r in records]
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    else:
        for r in records:
            fh.write(f"kappa    = {_fmt(r.kappa)}\n")
            fh.write(f"kind     = {r.kind}\n")
            if r.argmin is not None:
                fh.write(f"argmin   = {_fmt(r.argmin)}\n")
            if r.limit is not None:
                fh.write(f"limit    = {r.limit}\n")
            fh.write(f"value    = {_fmt(r.value)}\n")
            if r.root_x0 is not None:
                fh.write(f"root_x0  = {_fmt(r.root_x0)}\n")
                fh.write(f"residual = {_fmt(r.residual)}\n")
            fh.write("\n")


# --------------------------------------------------------------------------
# Handlers

def _minimize_for(family: str, kappa: float) -> MinimizationResult:
    if family == "weibull":
        return minimize_weibull(kappa)
    return minimize_pareto(kappa)


def _cmd_minimize(args) -> int:
    record = record_from_result(_minimize_for(args.family, args.kappa))
    with _open_out(args.out) as fh:
        _write_records([record], args.format, fh)
    return EXIT_OK


def _kappa_grid(kappa_min: float, kappa_max: float, steps: int,
                scale: str) -> np.ndarray:
    if not 0.0 < kappa_min <= kappa_max:
        raise DomainError("need 0 < --kappa-min <= --kappa-max")
    if steps < 0:
        raise DomainError("--steps must be nonnegative")
    if steps == 0:
        if kappa_min != kappa_max:
            raise DomainError("--steps 0 requires --kappa-min == --kappa-max")
        return np.asarray([kappa_min])
    if scale == "log":
        return np.geomspace(kappa_min, kappa_max, steps + 1)
    return np.linspace(kappa_min, kappa_max, steps + 1)


def _cmd_sweep(args) -> int:
    grid = _kappa_grid(args.kappa_min, args.kappa_max, args.steps, args.scale)
    records = [record_from_result(_minimize_for(args.family, float(k)))
               for k in grid]
    with _open_out(args.out) as fh:
        _write_records(records, args.format, fh)
    if args.plot:
        from . import plots
        plots.render_sweep_figure(records, args.plot, log_x=(args.scale == "log"))
    return EXIT_OK


def _verify_params(args):
    if args.family == "weibull":
        if args.alpha is None or args.theta is None:
            raise DomainError("verify --family weibull needs --alpha and --theta")
        return WeibullParams(alpha=args.alpha, theta=args.theta)
    if args.a is None or args.theta is None:
        raise DomainError("verify --family pareto needs --a and --theta")
    return ParetoParams(a=args.a, theta=args.theta)


def _write_verify(report, fmt: str, fh) -> None:
    flat = {
        "family": report.family,
        "kappa": report.kappa,
        "closed_form": report.closed_form,
        "quadrature": report.quadrature,
        "quadrature_err_est": report.quadrature_err_est,
        "mc_estimate": report.mc_estimate,
        "mc_half_width": report.mc_half_width,
        "grid_argmin": report.grid_argmin,
        "grid_value": report.grid_value,
        "minimizer_argmin": report.minimizer_argmin,
        "minimizer_value": report.minimizer_value,
    }
    if fmt == "json":
        payload = dict(flat)
        payload["passed"] = report.passed
        payload["error"] = report.error
        payload["overall"] = report.all_passed
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    elif fmt == "csv":
        writer = csv.writer(fh)
        writer.writerow(VERIFY_COLUMNS)
        writer.writerow([
            report.family, _fmt(report.kappa), _fmt_opt(report.closed_form),
            _fmt_opt(report.quadrature), _fmt_opt(report.quadrature_err_est),
            _fmt_opt(report.mc_estimate), _fmt_opt(report.mc_half_width),
            _fmt_opt(report.grid_argmin), _fmt_opt(report.grid_value),
            _fmt_opt(report.minimizer_argmin), _fmt_opt(report.minimizer_value),
            _fmt_bool(report.passed.get("quadrature")),
            _fmt_bool(report.passed.get("monte_carlo")),
            _fmt_bool(report.passed.get("grid")),
            _fmt_bool(report.all_passed),
        ])
    else:
        for key, value in flat.items():
            if value is None:
                continue
            rendered = value if isinstance(value, str) else _fmt(value)
            fh.write(f"{key} = {rendered}\n")
        if report.error is not None:
            fh.write(f"error = {report.error}\n")
        for name, ok in report.passed.items():
            fh.write(f"check {name}: {'PASS' if ok else 'FAIL'}\n")
        fh.write(f"overall: {'PASS' if report.all_passed else 'FAIL'}\n")


def _cmd_verify(args) -> int:
    params = _verify_params(args)
    config = VerifyConfig(n_samples=args.mc, seed=args.seed,
                          quad_abs_tol=args.quad_tol,
                          grid_steps=args.grid_steps)
    report = run_verification(params, args.kappa, config)
    with _open_out(args.out) as fh:
        _write_verify(report, args.format, fh)
    if report.error is not None:
        print(f"error: {report.error}", file=sys.stderr)
        return EXIT_USAGE
    if not report.all_passed:
        failing = ", ".join(report.failing_checks())
        print(f"verification failed: {failing}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _chvatal_rows(n_max: int):
    rows = []
    for n in range(2, n_max + 1):
        res = chvatal_argmin(n)
        nearest = nearest_to_two_thirds(n)
        rows.append((n, res.m_star, nearest, float(res.q_values[res.m_star]),
                     res.m_star == nearest, res.ties))
    return rows


def _write_chvatal(rows, fmt: str, fh) -> None:
    if fmt == "csv":
        writer = csv.writer(fh)
        writer.writerow(CHVATAL_COLUMNS)
        for n, m_star, nearest, q_min, match, ties in rows:
            tie_text = ";".join(str(t) for t in ties) if len(ties) > 1 else ""
            writer.writerow([n, m_star, nearest, _fmt(q_min),
                             _fmt_bool(match), tie_text])
    elif fmt == "json":
        payload = [{"n": n, "m_star": m_star, "nearest_two_thirds": nearest,
                    "q_min": q_min, "match": match,
                    "ties": list(ties) if len(ties) > 1 else []}
                   for n, m_star, nearest, q_min, match, ties in rows]
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    else:
        fh.write(f"{'n':>6} {'m*':>6} {'2n/3':>6} {'q_min':>22} match\n")
        for n, m_star, nearest, q_min, match, ties in rows:
            tie_note = f"  ties={list(ties)}" if len(ties) > 1 else ""
            fh.write(f"{n:>6} {m_star:>6} {nearest:>6} {_fmt(q_min):>22} "
                     f"{'yes' if match else 'NO'}{tie_note}\n")
        mismatches = sum(1 for row in rows if not row[4])
        if mismatches:
            fh.write(f"{mismatches} mismatch(es)\n")
        else:
            fh.write(f"all {len(rows)} rows match the nearest integer to 2n/3\n")


def _cmd_chvatal(args) -> int:
    if args.n_max < 2:
        raise DomainError("--n-max must be at least 2")
    rows = _chvatal_rows(args.n_max)
    with _open_out(args.out) as fh:
        _write_chvatal(rows, args.format, fh)
    if args.plot:
        from . import plots
        plots.render_chvatal_figure(rows, args.plot)
    return EXIT_OK if all(row[4] for row in rows) else EXIT_CHECK_FAILED


# --------------------------------------------------------------------------
# Parser

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "csv", "json"),
                        default="text", help="output format (default text)")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meancross",
        description="Minimum of P(X <= kappa*EX) over a family's shape parameter.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_min = sub.add_parser("minimize", help="minimize at a single kappa")
    p_min.add_argument("--family", choices=("weibull", "pareto"), required=True)
    p_min.add_argument("--kappa", type=float, required=True)
    _add_common(p_min)
    p_min.set_defaults(handler=_cmd_minimize)

    p_sweep = sub.add_parser("sweep", help="minimize over a kappa grid")
    p_sweep.add_argument("--family", choices=("weibull", "pareto"), required=True)
    p_sweep.add_argument("--kappa-min", type=float, required=True)
    p_sweep.add_argument("--kappa-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True,
                         help="grid rows = steps + 1")
    p_sweep.add_argument("--scale", choices=("linear", "log"), default="linear")
    p_sweep.add_argument("--plot", default=None, metavar="PATH",
                         help="also render a figure to PATH")
    _add_common(p_sweep)
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_ver = sub.add_parser("verify", help="cross-check closed forms")
    p_ver.add_argument("--family", choices=("weibull", "pareto"), required=True)
    p_ver.add_argument("--kappa", type=float, required=True)
    p_ver.add_argument("--alpha", type=float, default=None,
                       help="Weibull shape")
    p_ver.add_argument("--theta", type=float, default=None,
                       help="Weibull scale / Pareto shape")
    p_ver.add_argument("--a", type=float, default=None, help="Pareto scale")
    p_ver.add_argument("--mc", type=int, default=1_000_000,
                       help="Monte Carlo sample count (default 1e6)")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--quad-tol", type=float, default=1e-10)
    p_ver.add_argument("--grid-steps", type=int, default=500_000)
    _add_common(p_ver)
    p_ver.set_defaults(handler=_cmd_verify)

    p_ch = sub.add_parser("chvatal", help="binomial argmin sweep over n")
    p_ch.add_argument("--n-max", type=int, required=True)
    p_ch.add_argument("--plot", default=None, metavar="PATH",
                      help="also render a figure to PATH")
    _add_common(p_ch)
    p_ch.set_defaults(handler=_cmd_chvatal)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
