"""Command line: ``ddecomp analyze`` and ``ddecomp bounds``."""

import argparse
import sys
from fractions import Fraction

from .. import dup
from ..bounds import (curve_complement_bound, matrix_planar_bound,
                      matrix_warren_bound, planar_bound, warren_bound)
from ..cad2d import _Curve, critical_abscissae
from ..errors import DDecompError, ParseError
from ..family import CONTINUOUS, DISCRETE
from .parser import parse_box, read_problem
from .pipeline import run_pipeline
from .report import emit_json
from .svg import emit_svg


def default_box(h):
    """Critical abscissae and the ordinates above them, padded by 1."""
    xs, ys = [], []
    crit = critical_abscissae(h)
    curve = _Curve(h)
    for c in crit:
        xs.extend((c.lo, c.hi))
        g = curve.at_r(c.midpoint)
        if len(g) > 1:
            for iv in dup.isolate(g):
                ys.extend((iv.lo, iv.hi))
    if curve.D > 0 and not crit:
        g = curve.at_r(0)
        if len(g) > 1:
            for iv in dup.isolate(g):
                ys.extend((iv.lo, iv.hi))
    xs = xs or [Fraction(0)]
    ys = ys or [Fraction(0)]
    return (min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _summary(rep):
    lines = [
        f"border: {rep.border}",
        f"degree: {rep.degree}",
        "bounds: " + ", ".join(f"{k}={v}" for k, v in rep.bounds.items()),
        f"regions: {rep.region_count}",
        f"sample points: {len(rep.points)}",
        f"stable region: {'yes' if rep.has_stable_region else 'no'}",
    ]
    by_region = {}
    for pt in rep.points:
        by_region.setdefault(pt.region, (pt.stable, pt.unstable))
    for rid in sorted(by_region):
        s, u = by_region[rid]
        lines.append(f"  region {rid}: {s} stable, {u} unstable")
    for c in rep.components:
        tag = "" if c.separating else " (not separating)"
        lines.append(f"component {c.source}, degree {c.degree}{tag}")
    for w in rep.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    pr = read_problem(args.file)
    rep = run_pipeline(pr)
    if args.json:
        _write(args.json, emit_json(rep))
    if args.svg:
        h = rep.curve
        box = args.box or pr.box or default_box(h)
        grid = args.grid or pr.grid or 256
        stable = [pt.stable for pt in rep.points]
        _write(args.svg, emit_svg(h, [(pt.r, pt.p) for pt in rep.points], box, grid, stable))
    if args.json != "-" and args.svg != "-":
        sys.stdout.write(_summary(rep))
    return 0


def cmd_bounds(args):
    t, d, n = args.t, args.d, args.n
    td = DISCRETE if args.discrete else CONTINUOUS
    rows = [("theorem1", warren_bound(t, d, n))]
    if n == 2:
        rows.append(("theorem2", planar_bound(t, d)))
    if args.matrix:
        if n == 2:
            rows.append(("corollary1", matrix_planar_bound(t, d, td)))
        rows.append(("corollary2", matrix_warren_bound(t, d, n, td)))
    rows.append(("lemma1", curve_complement_bound(2 * t * d + 2 * d)))
    for name, v in rows:
        print(f"{name}: {v}")
    return 0


def _box_arg(text):
    try:
        return parse_box(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid_arg(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("grid must be an integer") from None
    if n < 16:
        raise argparse.ArgumentTypeError("grid must be at least 16")
    return n


def build_parser():
    ap = argparse.ArgumentParser(prog="ddecomp",
                                 description="Exact D-decomposition of two-parameter families.")
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze a problem file")
    an.add_argument("file")
    an.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    an.add_argument("--svg", metavar="PATH", help="write an SVG plot ('-' for stdout)")
    an.add_argument("--box", type=_box_arg, metavar="XMIN:XMAX:YMIN:YMAX")
    an.add_argument("--grid", type=_grid_arg, metavar="N")
    an.set_defaults(func=cmd_analyze)

    bd = sub.add_parser("bounds", help="print region-count bounds")
    bd.add_argument("--t", type=int, required=True, help="degree in s (matrix size with --matrix)")
    bd.add_argument("--d", type=int, required=True, help="degree in the parameters")
    bd.add_argument("--n", type=int, default=2, help="number of parameters")
    bd.add_argument("--matrix", action="store_true")
    bd.add_argument("--discrete", action="store_true")
    bd.set_defaults(func=cmd_bounds)
    return ap


def _join_box(argv):
    # a box usually starts with '-', which argparse would take for an option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--box":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--box={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(_join_box(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ddecomp: parse error: {exc}", file=sys.stderr)
        return 2
    except (DDecompError, ValueError) as exc:
        print(f"ddecomp: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ddecomp: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
