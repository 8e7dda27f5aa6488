"""Command-line driver.

Commands: ``spectrum``, ``heat-trace``, ``residues``, ``theorems``, ``verify``.
Exit codes: 0 success, 1 verification failure or runtime diagnostic, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import sympy as sp

from . import __version__
from . import asymptotics as asy
from . import theorems as thm
from .ball import BallConfig, TailBoundError, TruncationError, check_ball_parameters, enumerate_spectrum, heat_trace
from .verify import SUITES, VerifyOptions, resolved_mu_max, run_suites


class UsageError(Exception):
    pass


def _round(obj):
    """Round floats to 15 significant digits for byte-stable output."""
    if isinstance(obj, float):
        return float("%.15g" % obj)
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _dump_json(payload) -> str:
    return json.dumps(_round(payload), indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k != "func"}
    return cfg


def _validate(args) -> None:
    try:
        check_ball_parameters(args.m, args.epsilon)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.mu_max is not None and not args.mu_max > 0:
        raise UsageError("mu-max must be positive")
    if not 0 < args.t_min < args.t_max:
        raise UsageError("need 0 < t-min < t-max")
    if args.samples < 2:
        raise UsageError("samples must be >= 2")


def _resolve_mu(args) -> float:
    if args.mu_max is None:
        args.mu_max = asy.mu_max_for_window(args.t_min, args.m)
    return args.mu_max


def cmd_spectrum(args) -> int:
    _validate(args)
    mu = _resolve_mu(args)
    spec = enumerate_spectrum(BallConfig(args.m, args.epsilon, mu, args.n_max))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "p", "weight", "branch", "root"])
        for n, p, weight, branch, root in spec.rows():
            w.writerow([n, p, weight, branch, "%.15g" % root])
        _emit(buf.getvalue(), args.out)
        return 0
    bounds = {}
    for t in (args.t_min, args.t_max):
        for kind in ("zeta", "eta"):
            try:
                bounds[f"{kind}@t={t:g}"] = heat_trace(spec, t, kind, tol=float("inf")).tail_bound
            except TailBoundError as exc:
                bounds[f"{kind}@t={t:g}"] = exc.bound
    payload = {
        "config": _config(args),
        "audit": spec.audit,
        "weighted_count": spec.count(),
        "heat_trace_tail_bounds": bounds,
        "families": [
            {"n": f.n, "p": f.p, "weight": f.weight, "kappa": f.kappa,
             "pos_roots": [float(r) for r in pos], "neg_roots": [float(r) for r in neg]}
            for f, pos, neg in zip(spec.families, spec.pos_roots, spec.neg_roots)
        ],
    }
    _emit(_dump_json(payload), args.out)
    return 0


def cmd_heat_trace(args) -> int:
    _validate(args)
    mu = _resolve_mu(args)
    spec = enumerate_spectrum(BallConfig(args.m, args.epsilon, mu, args.n_max))
    ts = asy.log_samples(args.t_min, args.t_max, args.samples)
    if args.emit_trace:
        lines = []
        for t in ts:
            v = heat_trace(spec, float(t), args.kind, tol=args.tail_tol).value
            lines.append("%.15g %.15g" % (t, v))
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    rows = []
    for t in ts:
        z = heat_trace(spec, float(t), "zeta", tol=args.tail_tol)
        e = heat_trace(spec, float(t), "eta", tol=args.tail_tol)
        rows.append({"t": float(t), "zeta": z.value, "zeta_tail": z.tail_bound,
                     "eta": e.value, "eta_tail": e.tail_bound})
    payload = {"config": _config(args), "samples": rows}
    if args.fit:
        zf = asy.fit_ball_zeta(args.m, args.epsilon, mu, args.t_min, args.t_max, args.samples, tol=args.tail_tol)
        payload["zeta_fit"] = zf.fit.as_dict() | {"tail_bound": zf.tail_bound}
        if args.epsilon != 0:
            ef = asy.fit_ball_eta(args.m, args.epsilon, mu, args.t_min, args.t_max, args.samples,
                                  args.n_terms, tol=args.tail_tol)
            payload["eta_fit_per_unit_epsilon"] = ef.fit.as_dict() | {"tail_bound": ef.tail_bound}
    _emit(_dump_json(payload), args.out)
    return 0


def cmd_residues(args) -> int:
    if args.m % 2 or not 4 <= args.m <= 10:
        raise UsageError("m must be even ≥ 4 (and at most 10)")
    rep = asy.eta_residues(args.m)
    m = args.m
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "n", "res_eta_exact", "res_eta", "a_n_exact", "a_n"])
        for n, a in ((2, rep.a2), (3, rep.a3)):
            r = rep.res_eta[m - n]
            w.writerow([m - n, n, str(r), "%.15g" % float(r), str(a), "%.15g" % float(a)])
        _emit(buf.getvalue(), args.out)
        return 0
    payload = {"config": _config(args)} | rep.as_dict()
    _emit(_dump_json(payload), args.out)
    return 0


def _exact_entry(expr) -> dict:
    return {"exact": str(expr), "value": float(expr)}


def cmd_theorems(args) -> int:
    _validate(args)
    m = args.m
    sym = thm.coefficient_table(m, symbolic_beta=True)
    num = thm.coefficient_table(m)
    table = {}
    for i in range(1, 18):
        basis = thm.basis_coefficients(sym[i])
        table[f"c{i}"] = {"basis": {k: str(v) for k, v in basis.items()},
                          "exact": str(num[i]), "value": float(num[i])}
    eps = Fraction(str(args.epsilon))
    data = thm.ball_geometry(m, eps if eps else Fraction(1))
    scale = sp.Rational(eps.numerator, eps.denominator) if eps else sp.Integer(1)
    t12 = thm.eval_theorem12(data)
    t11 = thm.eval_theorem11(data)
    pred = thm.ball_predictions(m)
    payload = {
        "config": _config(args),
        "beta": _exact_entry(num.beta),
        "coefficients": table,
        "ball_predictions_per_unit_epsilon": {k: _exact_entry(v) for k, v in pred.items()},
        "ball_eta_coefficients": {f"a{i}": _exact_entry(v) for i, v in enumerate(t12)},
        "ball_zeta_coefficients": {f"a{i}": _exact_entry(v) for i, v in enumerate(t11)},
        "epsilon_used": str(scale),
    }
    _emit(_dump_json(payload), args.out)
    return 0


def cmd_verify(args) -> int:
    _validate(args)
    names = args.suite or list(SUITES)
    opt = VerifyOptions(m=args.m, epsilon=args.epsilon, t_min=args.t_min, t_max=args.t_max,
                        samples=args.samples, mu_max=args.mu_max, n_terms=args.n_terms,
                        tol_a2=args.tol_a2, tol_a3=args.tol_a3, tol_a0=args.tol_a0, tol_a1=args.tol_a1,
                        seed=args.seed)
    if "spectral" in names:
        args.mu_max = resolved_mu_max(opt)
    results = run_suites(names, opt)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {"config": _config(args), "results": [r.as_dict() for r in results],
                   "passed": not failed}
        _emit(_dump_json(payload), args.out)
    else:
        lines = ["config: " + json.dumps(_round(_config(args)), sort_keys=True)]
        width = max(len(r.name) for r in results) if results else 10
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<9} {r.name:<{width}}  "
                         f"measured={r.measured}  tol={r.tolerance}")
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        if failed:
            lines.append("failures: " + "; ".join(r.name for r in failed))
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="etaheat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json", formats=("json",)):
        p.add_argument("--m", type=int, default=4, help="dimension (even, >= 4)")
        p.add_argument("--epsilon", type=float, default=0.02, help="boundary parameter")
        p.add_argument("--mu-max", type=float, default=None,
                       help="eigenvalue cutoff (default: sized from --t-min)")
        p.add_argument("--n-max", type=int, default=None, help="mode-family cutoff (default: automatic)")
        p.add_argument("--t-min", type=float, default=0.002)
        p.add_argument("--t-max", type=float, default=0.02)
        p.add_argument("--samples", type=int, default=40)
        p.add_argument("--format", choices=formats, default=fmt_default)
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("spectrum", help="enumerate the ball spectrum")
    common(p, "csv", ("csv", "json"))
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("heat-trace", help="sample heat traces and optionally fit coefficients")
    common(p)
    p.add_argument("--kind", choices=("eta", "zeta"), default="eta", help="trace for --emit-trace")
    p.add_argument("--emit-trace", action="store_true", help="two-column 't value' output")
    p.add_argument("--fit", action="store_true", help="append coefficient fits")
    p.add_argument("--n-terms", type=int, default=5)
    p.add_argument("--tail-tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_heat_trace)

    p = sub.add_parser("residues", help="exact eta-function residues of the ball")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("theorems", help="coefficient table and closed-form ball coefficients")
    common(p)
    p.set_defaults(func=cmd_theorems)

    p = sub.add_parser("verify", help="run invariant suites")
    common(p, "text", ("text", "json"))
    p.add_argument("--suite", action="append", choices=SUITES, help="restrict to a suite (repeatable)")
    p.add_argument("--n-terms", type=int, default=5)
    p.add_argument("--tol-a2", type=float, default=0.03)
    p.add_argument("--tol-a3", type=float, default=0.05)
    p.add_argument("--tol-a0", type=float, default=0.01)
    p.add_argument("--tol-a1", type=float, default=0.03)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (TruncationError, TailBoundError, asy.FitError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
