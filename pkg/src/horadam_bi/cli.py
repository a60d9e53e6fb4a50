"""Command-line front end: ``horadam-bi {poly,bounds,sweep,verify,reduce}``."""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import bound_report
from .classes import ClassKind, ClassRangeError, ClassSpec, DegenerateParameterError, alpha_range
from .horadam import HoradamParams, PolyFamily, family_params, gf_coefficients, horadam_sequence
from .reduction import all_deviations
from .verify import run_verification

CSV_COLUMNS = ["sweep_var", "value", "a2_bound", "a3_bound", "nu", "fs_bound", "fs_branch", "denom"]
CLASS_NAMES = [k.value for k in ClassKind]


def _params_arg(text: str) -> HoradamParams:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,p,q numbers, got {text!r}") from None
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected four comma-separated values, got {text!r}")
    return HoradamParams(*values)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _add_params(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--family", choices=[f.value for f in PolyFamily], default="fibonacci")
    group.add_argument("--params", type=_params_arg, metavar="A,B,P,Q")


def _add_spec(parser, x_required=True):
    parser.add_argument("--class", dest="kind", choices=CLASS_NAMES, required=True)
    parser.add_argument("--alpha", type=float, default=0.0)
    _add_params(parser)
    parser.add_argument("--x", type=float, required=x_required, default=None)
    parser.add_argument("--nu", type=float, nargs="+", default=[1.0])


def _resolve_params(args) -> HoradamParams:
    return args.params if args.params is not None else family_params(args.family)


def _spec(args, **overrides) -> ClassSpec:
    fields = {"kind": ClassKind(args.kind), "alpha": args.alpha,
              "horadam": _resolve_params(args), "x": args.x}
    fields.update(overrides)
    return ClassSpec(**fields)


def _json_float(v):
    return None if isinstance(v, float) and not math.isfinite(v) else v


def _fmt(v: float) -> str:
    if math.isinf(v):
        return "unbounded (vacuous)"
    return f"{v:.6g}"


def cmd_poly(args) -> int:
    params = _resolve_params(args)
    seq = horadam_sequence(params, args.n, args.x)
    oracle = gf_coefficients(params, args.x, args.n) if args.oracle else None
    header = ["n", "h_n"] + (["gf_coeff", "abs_diff"] if oracle else [])
    print("\t".join(header))
    for i, h in enumerate(seq):
        row = [str(i + 1), repr(h)]
        if oracle:
            row += [repr(oracle[i]), f"{abs(oracle[i] - h):.3e}"]
        print("\t".join(row))
    return 0


def cmd_bounds(args) -> int:
    spec = _spec(args)
    reports = [bound_report(spec, nu) for nu in args.nu]
    if args.json:
        out = {
            "spec": spec.to_dict(),
            "a2_bound": _json_float(reports[0].a2_bound),
            "a3_bound": reports[0].a3_bound,
            "denom": reports[0].denom,
            "threshold": _json_float(reports[0].threshold),
            "degenerate": reports[0].degenerate,
            "fekete_szego": [
                {"nu": r.nu, "fs_bound": _json_float(r.fs_bound), "fs_branch": r.fs_branch.value}
                for r in reports
            ],
        }
        print(json.dumps(out, indent=2, sort_keys=True))
        return 0
    first = reports[0]
    print(f"class {spec.kind.value}  alpha={spec.alpha:g}  (a,b,p,q)={spec.horadam.as_tuple()}  x={spec.x:g}")
    if first.degenerate:
        print("note: h2(x) = 0, subordination is degenerate")
    print(f"denom     {first.denom:.12g}")
    print(f"|a2| <=   {_fmt(first.a2_bound)}")
    print(f"|a3| <=   {_fmt(first.a3_bound)}")
    for r in reports:
        print(f"|a3 - {r.nu:g} a2^2| <= {_fmt(r.fs_bound)}  [{r.fs_branch.value}]")
    return 0


def sweep_rows(spec: ClassSpec, var: str, values, nus):
    """One row per (sweep value, nu) in sweep order."""
    for value in values:
        value = float(value)
        if var == "alpha":
            point = ClassSpec(spec.kind, value, spec.horadam, spec.x)
        elif var in ("x", "t"):
            point = ClassSpec(spec.kind, spec.alpha, spec.horadam, value)
        else:
            point = spec
        for nu in ([value] if var == "nu" else nus):
            r = bound_report(point, nu)
            yield {"sweep_var": var, "value": value, "a2_bound": r.a2_bound,
                   "a3_bound": r.a3_bound, "nu": r.nu, "fs_bound": r.fs_bound,
                   "fs_branch": r.fs_branch.value, "denom": r.denom}


def cmd_sweep(args) -> int:
    if not args.lo < args.hi:
        raise ValueError("--lo must be smaller than --hi")
    if args.var == "t":
        args.family, args.params = PolyFamily.CHEBYSHEV_SECOND.value, None
    if args.var == "alpha":
        lo, hi = alpha_range(ClassKind(args.kind))
        if args.lo < lo or args.hi > hi:
            raise ClassRangeError(f"alpha sweep [{args.lo}, {args.hi}] leaves [{lo}, {hi}]")
    if args.x is None:
        if args.var not in ("x", "t"):
            raise ValueError("--x is required unless sweeping x or t")
        args.x = args.lo
    spec = _spec(args)
    values = np.linspace(args.lo, args.hi, args.steps)
    rows = list(sweep_rows(spec, args.var, values, args.nu))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for row in rows:
                writer.writerow([f"{v:.12g}" if isinstance(v, float) else v
                                 for v in (row[c] for c in CSV_COLUMNS)])
        else:
            payload = {"version": __version__, "spec": spec.to_dict(),
                       "rows": [{k: _json_float(v) for k, v in row.items()} for row in rows]}
            out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def cmd_verify(args) -> int:
    spec = _spec(args)
    report = run_verification(spec, args.nu, args.trials, seed=args.seed,
                              strict_schwarz=args.strict_schwarz, workers=args.workers)
    payload = report.to_dict()
    payload["version"] = __version__
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{report.admissible}/{report.trials} admissible, {report.violations} violations, "
          f"max ratios a2={report.max_ratio_a2:.6f} a3={report.max_ratio_a3:.6f} "
          f"fs={report.max_ratio_fs:.6f}", file=sys.stderr)
    return 0 if report.certified else 1


def cmd_reduce(args) -> int:
    devs = all_deviations(args.grid_size)
    print(f"{'corollary':<10} {'points':>7} {'max_rel_dev':>12}")
    for d in devs:
        print(f"{d.name:<10} {d.points:>7} {d.max_rel:>12.3e} {'ok' if d.ok else 'FAIL'}")
    return 0 if all(d.ok for d in devs) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="horadam-bi", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="tabulate Horadam polynomials h_1..h_n at x")
    _add_params(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--n", type=_positive_int, default=8)
    p.add_argument("--oracle", action="store_true", help="compare with generating-function coefficients")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bounds", help="coefficient and Fekete-Szego bounds for one class instance")
    _add_spec(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="bounds over a range of alpha, x, t or nu")
    _add_spec(p, x_required=False)
    p.add_argument("--var", choices=["alpha", "x", "nu", "t"], required=True)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="Monte-Carlo certification; exit 0 iff no violations")
    _add_spec(p)
    p.add_argument("--trials", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict-schwarz", action="store_true")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="engine vs closed-form special cases")
    p.add_argument("--grid-size", type=_positive_int, default=16)
    p.set_defaults(func=cmd_reduce)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "sweep" and args.steps < 2:
        parser.error("--steps must be at least 2")
    try:
        return args.func(args)
    except (ClassRangeError, DegenerateParameterError, ValueError) as exc:
        print(f"horadam-bi: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"horadam-bi: I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
