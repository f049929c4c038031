"""Command-line interface.

Usage:
    fractalhall farey 6 --format csv
    fractalhall classify 1/3
    fractalhall dual 2/7
    fractalhall class 11/6 --count 11
    fractalhall theorem --order 50
    fractalhall table --order 6 --rows 18 --format csv
    fractalhall occupation --h 3/2 --xi 1 --format json
    fractalhall occupation --h 1.25 --grid 0.01:100:9 --log
    fractalhall entropy --h 3/2 --xi 1
    fractalhall curve --generator koch --level 8 --estimate

Exit status is 0 on success, 2 on usage errors and 1 on domain errors
(for instance ``--h 2 --xi 0.5``, which lies in the condensation region).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import curve, entropy, farey, fracton, spectrum
from .errors import FractalHallError
from .rational import format_fraction, parse

__all__ = ["main", "build_parser"]

_FRACTION_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def _fraction_arg(text: str) -> Fraction:
    try:
        return parse(text)
    except FractalHallError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _real_arg(text: str) -> float:
    """Accept ``p/q`` or a decimal literal."""
    try:
        if _FRACTION_RE.fullmatch(text):
            return float(parse(text))
        return float(text)
    except (ValueError, FractalHallError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def _grid_arg(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must look like xmin:xmax:steps")
    try:
        lo, hi, steps = _real_arg(parts[0]), _real_arg(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None
    if steps < 1 or hi < lo:
        raise argparse.ArgumentTypeError("grid needs xmin <= xmax and steps >= 1")
    return lo, hi, steps


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


class Output:
    """Formats fractions and reals consistently for one invocation."""

    def __init__(self, fmt: str, precision: int):
        self.fmt = fmt
        self.precision = precision

    def frac(self, f: Fraction) -> str:
        return format_fraction(f, table=self.fmt != "plain")

    def real(self, x: float) -> str:
        # 'g' formatting rounds the binary value correctly (ties to even)
        if math.isinf(x) or math.isnan(x):
            return str(x)
        return f"{x:.{self.precision}g}"

    def real_json(self, x: float):
        return float(self.real(x))

    @staticmethod
    def csv(header: Sequence[str], rows) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()

    @staticmethod
    def json(obj) -> str:
        return json.dumps(obj, indent=2) + "\n"


def _cmd_farey(args, out: Output) -> int:
    seq = farey.generate(args.order)
    items = [out.frac(f) for f in seq]
    if args.verify:
        p1, p2 = farey.verify_p1(seq), farey.verify_p2(seq)
    if out.fmt == "csv":
        sys.stdout.write(out.csv([], [[x] for x in items]))
    elif out.fmt == "json":
        if args.verify:
            sys.stdout.write(out.json({"order": seq.order, "elements": items, "p1": p1.ok, "p2": p2.ok}))
        else:
            sys.stdout.write(out.json(items))
    else:
        print(f"F_{seq.order} ({len(seq)} terms): " + " ".join(items))
        if args.verify:
            print(f"P1 {'holds' if p1 else 'fails'} on {p1.checked} pairs")
            print(f"P2 {'holds' if p2 else 'fails'} on {p2.checked} triples")
    if args.verify and not (p1 and p2):
        return 1
    return 0


def _cmd_classify(args, out: Output) -> int:
    h = spectrum.classify_h(args.nu)
    if out.fmt == "csv":
        sys.stdout.write(out.csv(["nu", "h"], [[out.frac(args.nu), out.frac(h)]]))
    elif out.fmt == "json":
        sys.stdout.write(out.json({"nu": out.frac(args.nu), "h": out.frac(h)}))
    else:
        print(f"h = {out.frac(h)}")
    return 0


def _cmd_dual(args, out: Output) -> int:
    if args.label:
        d = spectrum.dual_h(args.value)
        row = {"h": out.frac(args.value), "dual_h": out.frac(d)}
    else:
        d = spectrum.dual_nu(args.value)
        h = spectrum.classify_h(args.value)
        row = {
            "nu": out.frac(args.value),
            "dual_nu": out.frac(d),
            "h": out.frac(h),
            "dual_h": out.frac(spectrum.classify_h(d)),
        }
    if out.fmt == "csv":
        sys.stdout.write(out.csv(list(row), [list(row.values())]))
    elif out.fmt == "json":
        sys.stdout.write(out.json(row))
    else:
        print(f"dual = {out.frac(d)}")
    return 0


def _cmd_class(args, out: Output) -> int:
    members = spectrum.class_members(args.h, args.count)
    items = [out.frac(m) for m in members]
    if out.fmt == "csv":
        sys.stdout.write(out.csv([], [[x] for x in items]))
    elif out.fmt == "json":
        sys.stdout.write(out.json({"h": out.frac(args.h), "members": items}))
    else:
        print(f"h = {out.frac(args.h)}: " + ", ".join(items))
    return 0


def _cmd_theorem(args, out: Output) -> int:
    report = spectrum.verify_theorem(args.order)
    rows = [
        [out.frac(e.f), out.frac(e.h), out.frac(e.second), "pass" if e.passed else "fail"]
        for e in report.entries
    ]
    if out.fmt == "csv":
        sys.stdout.write(out.csv(["f", "h", "second", "result"], rows))
    elif out.fmt == "json":
        entries = [dict(zip(["f", "h", "second"], r[:3]), passed=r[3] == "pass") for r in rows]
        sys.stdout.write(out.json({"order": report.order, "passed": report.passed, "entries": entries}))
    else:
        for f, h, second, result in rows:
            print(f"{f}: h = {h}, second member = {second}  {result}")
        status = "holds" if report.passed else f"fails for {len(report.failures)} fractions"
        print(f"theorem {status} on all {len(rows)} interior fractions of F_{report.order}")
    return 0 if report.passed else 1


def _cmd_table(args, out: Output) -> int:
    table = spectrum.paper_table(args.order, args.rows)
    header = ["interval"] + [out.frac(h) for h in table.columns]
    body = [[label] + [out.frac(c) for c in cells] for label, cells in table.rows]
    if out.fmt == "csv":
        sys.stdout.write(out.csv(header, body))
    elif out.fmt == "json":
        sys.stdout.write(
            out.json(
                {
                    "columns": header[1:],
                    "rows": [{"interval": r[0], "cells": r[1:]} for r in body],
                }
            )
        )
    else:
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        for r in [header] + body:
            print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return 0


def _xi_values(args) -> list[float]:
    if args.grid is not None:
        lo, hi, steps = args.grid
        if steps == 1:
            return [lo]
        if args.log:
            if lo <= 0:
                raise FractalHallError("log grid needs xmin > 0")
            a, b = math.log(lo), math.log(hi)
            return [math.exp(a + (b - a) * i / (steps - 1)) for i in range(steps)]
        return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    if args.xi is not None:
        return [args.xi]
    if args.epsilon is not None:
        t = fracton.ThermoInput(args.epsilon, args.mu, args.temperature, args.kb)
        return [fracton.xi_from_energy(t)]
    raise AssertionError("unreachable: checked in main()")


def _cmd_occupation(args, out: Output) -> int:
    points = [fracton.solve_point(args.h, xi) for xi in _xi_values(args)]
    cols = ["h", "xi", "Y", "n", "residual"]
    rows = [[p.h, p.xi, p.Y, p.n, p.residual] for p in points]
    if out.fmt == "csv":
        sys.stdout.write(out.csv(cols, [[out.real(v) for v in r] for r in rows]))
    elif out.fmt == "json":
        objs = [dict(zip(cols, (out.real_json(v) for v in r))) for r in rows]
        sys.stdout.write(out.json(objs[0] if len(objs) == 1 and args.grid is None else objs))
    else:
        for r in rows:
            print("  ".join(f"{c} = {out.real(v)}" for c, v in zip(cols, r)))
    return 0


def _cmd_entropy(args, out: Output) -> int:
    if args.n is not None:
        pt = entropy.entropy_point(args.h, args.n, args.kb)
    else:
        pt = entropy.entropy_from_xi(args.h, args.xi, args.kb)
    cols = ["h", "n", "S"]
    vals = [pt.h, pt.n, pt.S]
    if out.fmt == "csv":
        sys.stdout.write(out.csv(cols, [[out.real(v) for v in vals]]))
    elif out.fmt == "json":
        sys.stdout.write(out.json(dict(zip(cols, (out.real_json(v) for v in vals)))))
    else:
        print("  ".join(f"{c} = {out.real(v)}" for c, v in zip(cols, vals)))
    return 0


def _cmd_curve(args, out: Output) -> int:
    if args.generator == "koch":
        c = curve.generate_koch(args.level, args.dimension)
    else:
        c = curve.straight_line()
    if not args.estimate:
        fmt = out.fmt if out.fmt != "plain" else "csv"
        pts = [[out.real(x), out.real(y)] for x, y in c.points.tolist()]
        if fmt == "csv":
            sys.stdout.write(out.csv(["x", "y"], pts))
        else:
            sys.stdout.write(out.json([[float(x), float(y)] for x, y in pts]))
        return 0

    est = curve.estimate_dimension(c, args.resolutions)
    if out.fmt == "csv":
        rows = [[out.real(est.h), out.real(est.stderr), out.real(R), out.real(L)] for R, L in est.samples]
        sys.stdout.write(out.csv(["h", "stderr", "R", "L"], rows))
    elif out.fmt == "json":
        sys.stdout.write(
            out.json(
                {
                    "h": out.real_json(est.h),
                    "stderr": out.real_json(est.stderr),
                    "samples": [[out.real_json(R), out.real_json(L)] for R, L in est.samples],
                }
            )
        )
    else:
        print(f"h = {out.real(est.h)} +/- {out.real(est.stderr)}")
        for R, L in est.samples:
            print(f"  R = {out.real(R)}  L = {out.real(L)}")
    return 0


def _resolutions_arg(text: str) -> list[float]:
    return [_real_arg(t) for t in text.split(",") if t]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    common.add_argument("--precision", type=_positive_int, default=12, help="significant digits for reals")

    parser = argparse.ArgumentParser(prog="fractalhall", description="Fractal classes of filling factors and fracton statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("farey", parents=[common], help="Farey series F_n")
    p.add_argument("order", type=_positive_int)
    p.add_argument("--verify", action="store_true", help="also check the neighbour properties")
    p.set_defaults(func=_cmd_farey)

    p = sub.add_parser("classify", parents=[common], help="Hausdorff label of a filling factor")
    p.add_argument("nu", type=_fraction_arg)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("dual", parents=[common], help="dual filling factor (or label with --label)")
    p.add_argument("value", type=_fraction_arg)
    p.add_argument("--label", action="store_true", help="treat the value as a label h and return 3 - h")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("class", parents=[common], help="first members of a fractal class")
    p.add_argument("h", type=_fraction_arg)
    p.add_argument("--count", type=_positive_int, default=11)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("theorem", parents=[common], help="check second class members against labels on F_n")
    p.add_argument("--order", type=_positive_int, required=True)
    p.set_defaults(func=_cmd_theorem)

    p = sub.add_parser("table", parents=[common], help="classes of F_n laid out by unit interval")
    p.add_argument("--order", type=_positive_int, default=6)
    p.add_argument("--rows", type=_positive_int, default=18)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("occupation", parents=[common], help="fractal distribution function")
    p.add_argument("--h", type=_real_arg, required=True)
    p.add_argument("--xi", type=_real_arg)
    p.add_argument("--grid", type=_grid_arg, help="xmin:xmax:steps over xi")
    p.add_argument("--log", action="store_true", help="logarithmic grid spacing")
    p.add_argument("--epsilon", type=_real_arg)
    p.add_argument("--mu", type=_real_arg, default=0.0)
    p.add_argument("--temperature", type=_real_arg, default=1.0)
    p.add_argument("--kb", type=_real_arg, default=1.0, help="Boltzmann constant")
    p.set_defaults(func=_cmd_occupation)

    p = sub.add_parser("entropy", parents=[common], help="fractal entropy per state")
    p.add_argument("--h", type=_real_arg, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_real_arg)
    g.add_argument("--xi", type=_real_arg)
    p.add_argument("--kb", type=_real_arg, default=1.0, help="Boltzmann constant")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("curve", parents=[common], help="generate a curve or estimate its dimension")
    p.add_argument("--generator", choices=["koch", "line"], default="koch")
    p.add_argument("--level", type=int, default=6)
    p.add_argument("--dimension", type=_real_arg, default=curve.KOCH_DIMENSION)
    p.add_argument("--estimate", action="store_true")
    p.add_argument("--resolutions", type=_resolutions_arg, help="comma-separated caliper openings")
    p.set_defaults(func=_cmd_curve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "occupation" and args.xi is None and args.grid is None and args.epsilon is None:
        parser.error("occupation needs --xi, --grid or --epsilon")
    out = Output(args.format, args.precision)
    try:
        return args.func(args, out)
    except FractalHallError as exc:
        print(f"fractalhall: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
