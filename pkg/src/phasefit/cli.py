"""Command-line entry point: ``phasefit <subcommand> ...``."""
from __future__ import annotations

import argparse
import io
import math
import sys
from pathlib import Path

import numpy as np

from .coeffs import MethodId, coefficients
from .errors import PhasefitError
from .phaselag import phase_lag_curve
from .schrodinger import BENCHMARK_ENERGIES, X_MAX, phase_shift_from, solve_radial
from .stability import atomic_write, grid_to_csv, grid_to_pgm, stability_grid

__all__ = ["accuracy_curve", "accuracy_curve_csv", "build_parser", "main"]


def fmt(x) -> str:
    return "%.17g" % float(x)


def _method(name):
    try:
        return MethodId.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _methods(text):
    if text.strip().lower() == "all":
        return list(MethodId)
    return [_method(part) for part in text.split(",") if part.strip()]


def _emit(text: str, out) -> None:
    if out is None or str(out) == "-":
        sys.stdout.write(text)
    else:
        atomic_write(out, text)


# ---------------------------------------------------------------------------
# accuracy curves

def accuracy_curve(methods, E: float, h_ladder) -> list[tuple]:
    """Rows ``(method, E, h, steps, delta, digits)``, methods-major then h."""
    h_ladder = [float(h) for h in h_ladder]
    if not h_ladder:
        raise ValueError("h ladder is empty")
    if any(b >= a for a, b in zip(h_ladder, h_ladder[1:])):
        raise ValueError("h ladder must be strictly decreasing")
    rows = []
    for method in methods:
        method = MethodId.parse(method)
        for h in h_ladder:
            traj = solve_radial(method, E, h)
            res = phase_shift_from(traj, math.sqrt(E))
            rows.append((method.value, float(E), h, traj.steps + 11, res.delta, res.digits))
    return rows


def accuracy_curve_csv(rows) -> str:
    buf = io.StringIO()
    buf.write("method,E,h,steps,delta,digits\n")
    for method, E, h, steps, delta, digits in rows:
        buf.write(f"{method},{fmt(E)},{fmt(h)},{steps},{fmt(delta)},{fmt(digits)}\n")
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands

def cmd_coeffs(args):
    cs = coefficients(args.method, args.v)
    lines = ["j,a,b"] + [f"{j},{int(cs.a[j])},{fmt(cs.b[j])}" for j in range(13)]
    _emit("\n".join(lines) + "\n", args.out)


def cmd_phaselag(args):
    s = np.linspace(args.s_min, args.s_max, args.n)
    pl = phase_lag_curve(args.method, s, args.v)
    lines = ["s,pl"] + [f"{fmt(a)},{fmt(b)}" for a, b in zip(s, pl)]
    _emit("\n".join(lines) + "\n", args.out)


def cmd_stability_map(args):
    ns = args.ns or args.n
    nv = args.nv or args.n
    grid = stability_grid(args.method, (0.0, args.s_max), (0.0, args.v_max), ns, nv, args.tol)
    out = Path(args.out)
    if args.format in ("pgm", "both"):
        atomic_write(out.with_suffix(".pgm"), grid_to_pgm(grid))
    if args.format in ("csv", "both"):
        atomic_write(out.with_suffix(".csv"), grid_to_csv(grid))
    if grid.failures:
        print(f"phasefit: {grid.failures} cells failed root finding (marked unstable)", file=sys.stderr)


def _step_size(args):
    if args.h is not None:
        return args.h
    return 1.0 / args.steps_per_unit


def cmd_solve(args):
    h = _step_size(args)
    traj = solve_radial(args.method, args.energy, h)
    res = phase_shift_from(traj, math.sqrt(args.energy))
    text = "method,E,h,delta,digits\n" + f"{args.method.value},{fmt(args.energy)},{fmt(h)},{fmt(res.delta)},{fmt(res.digits)}\n"
    _emit(text, args.out)
    if args.trajectory:
        lines = ["x,y"] + [f"{fmt(x)},{fmt(y)}" for x, y in zip(traj.xs, traj.ys)]
        atomic_write(args.trajectory, "\n".join(lines) + "\n")


def cmd_accuracy_curve(args):
    ladder = [X_MAX / n for n in sorted(args.steps)]
    rows = accuracy_curve(args.methods, args.energy, ladder)
    _emit(accuracy_curve_csv(rows), args.out)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _int_list(text):
    try:
        return [_positive_int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phasefit", description="Phase-fitted 12-step methods for y'' = f(x, y).")
    sub = parser.add_subparsers(dest="command", required=True)
    names = ", ".join(m.value for m in MethodId)

    p = sub.add_parser("coeffs", help="dump a and b coefficients at v")
    p.add_argument("--method", type=_method, required=True, help=names)
    p.add_argument("--v", type=float, default=0.0)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out")
    p.set_defaults(run=cmd_coeffs)

    p = sub.add_parser("phaselag", help="phase lag PL(s, v) over an s range")
    p.add_argument("--method", type=_method, required=True, help=names)
    p.add_argument("--v", type=float, default=0.0)
    p.add_argument("--s-from", "--s-min", dest="s_min", type=float, default=0.0)
    p.add_argument("--s-to", "--s-max", dest="s_max", type=float, default=2.0)
    p.add_argument("--n", type=_positive_int, default=400)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out")
    p.set_defaults(run=cmd_phaselag)

    p = sub.add_parser("stability-map", help="raster of the stable region in the s-v plane")
    p.add_argument("--method", type=_method, required=True, help=names)
    p.add_argument("--s-max", type=float, default=1.5)
    p.add_argument("--v-max", type=float, default=1.5)
    p.add_argument("--n", type=_positive_int, default=300, help="cells per axis")
    p.add_argument("--ns", type=_positive_int)
    p.add_argument("--nv", type=_positive_int)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=("pgm", "csv", "both"), default="both")
    p.add_argument("--out", required=True, help="output path; the suffix is replaced by .pgm/.csv")
    p.set_defaults(run=cmd_stability_map)

    p = sub.add_parser("solve", help="Woods-Saxon phase shift for one method and energy")
    p.add_argument("--method", type=_method, required=True, help=names)
    p.add_argument("--energy", type=float, default=BENCHMARK_ENERGIES[0])
    step = p.add_mutually_exclusive_group()
    step.add_argument("--steps-per-unit", type=_positive_int, default=256)
    step.add_argument("--h", type=float)
    p.add_argument("--out")
    p.add_argument("--trajectory", help="also write the x,y samples here")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("accuracy-curve", help="digits against step count for several methods")
    p.add_argument("--methods", type=_methods, default=list(MethodId), help=f"'all' or a comma list of {names}")
    p.add_argument("--energy", type=float, default=BENCHMARK_ENERGIES[0])
    p.add_argument("--steps", type=_int_list, default=[120, 240, 480, 960, 1920, 3840],
                   help="comma list of step counts on [0, 15]")
    p.add_argument("--out")
    p.set_defaults(run=cmd_accuracy_curve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args)
    except (PhasefitError, ValueError, ArithmeticError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"phasefit: error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
