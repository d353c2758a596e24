"""Command-line surface: intersect, points, verify, plot.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
failure (the curves share a component), 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cycles import Cycle
from .intersect import CommonComponentError, CycleInvariantError, intersection_cycle
from .mpoly import HPoly, homogenize
from .parsing import ParseError, parse_poly
from .unpack import DEFAULT_PRECISION, ApproxPoint, RootFindingError, unpack
from .verify import bezout_holds, on_curve, property_harness, resultant_oracle

_POINT_COLUMNS = "re_x,im_x,re_y,im_y,z,mult,res_a,res_b"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _use_color(stream) -> bool:
    return stream.isatty() and "NO_COLOR" not in os.environ


def _paint(text: str, code: str, stream) -> str:
    if _use_color(stream):
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _ok(stream) -> str:
    return _paint("OK", "32", stream)


def _fail(stream) -> str:
    return _paint("FAIL", "31", stream)


def _load_curve(text: str, affine: bool) -> HPoly:
    poly = parse_poly(text)
    if poly.is_zero:
        raise _UsageError(f"the zero polynomial does not define a curve: {text!r}")
    if affine:
        return homogenize(poly)
    if not poly.is_homogeneous:
        raise _UsageError(
            f"input is not homogeneous (pass --affine for affine curves): {text!r}"
        )
    return HPoly(poly)


def _fmt_float(v: float) -> str:
    return f"{v:.12g}"


def _point_csv_rows(points: list[ApproxPoint]) -> list[str]:
    rows = [_POINT_COLUMNS]
    for p in points:
        cells = [
            _fmt_float(float(p.x.real)),
            _fmt_float(float(p.x.imag)),
            _fmt_float(float(p.y.real)),
            _fmt_float(float(p.y.imag)),
            str(p.z),
            str(p.mult),
            "" if p.residual_a is None else _fmt_float(p.residual_a),
            "" if p.residual_b is None else _fmt_float(p.residual_b),
        ]
        rows.append(",".join(cells))
    return rows


def _json_document(a: HPoly, b: HPoly, cycle: Cycle, points=None) -> dict:
    doc = {
        "degA": a.degree,
        "degB": b.degree,
        "bezout": a.degree * b.degree,
        "cycles": cycle.to_json_entries(),
    }
    if points is not None:
        doc["points"] = [
            {
                "x": [float(p.x.real), float(p.x.imag)],
                "y": [float(p.y.real), float(p.y.imag)],
                "z": p.z,
                "mult": p.mult,
            }
            for p in points
        ]
    total = sum(e["mult"] * e["size"] for e in doc["cycles"])
    if total != doc["bezout"]:
        raise CycleInvariantError(
            f"document totals {total} points, Bezout number is {doc['bezout']}"
        )
    return doc


# ---------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------


def _cmd_intersect(args) -> int:
    a = _load_curve(args.curve_a, args.affine)
    b = _load_curve(args.curve_b, args.affine)
    cycle = intersection_cycle(a, b)
    points = None
    if args.points:
        points = unpack(cycle, args.precision, curves=(a, b))

    if args.json:
        doc = _json_document(a, b, cycle, points)
        print(json.dumps(doc))
    else:
        out = sys.stdout
        print(cycle.text())
        m, n = a.degree, b.degree
        print(f"# Bezout: {cycle.size} = {m}*{n} {_ok(out)}")
        if points is not None:
            print(f"# points precision={args.precision}")
            for row in _point_csv_rows(points):
                print(row)

    if args.verify:
        failures = _run_pair_checks(a, b, cycle, args.seed, quiet=args.json)
        if failures:
            return 3
    return 0


def _run_pair_checks(a: HPoly, b: HPoly, cycle: Cycle, seed: int, quiet: bool) -> int:
    out = sys.stderr if quiet else sys.stdout
    failures = 0
    count_ok = bezout_holds(cycle, a.degree, b.degree)
    entries = cycle.sorted_entries()
    member_bad = [
        gc for gc, _ in entries if not (on_curve(a, gc) and on_curve(b, gc))
    ]
    oracle = resultant_oracle(a, b, seed)
    failures += (not count_ok) + bool(member_bad) + (not oracle.passed)
    print(
        f"# count: {cycle.size} = {a.degree}*{b.degree} "
        f"{_ok(out) if count_ok else _fail(out)}",
        file=out,
    )
    status = _ok(out) if not member_bad else _fail(out)
    print(f"# membership: {len(entries) - len(member_bad)}/{len(entries)} {status}", file=out)
    verdict = oracle.verdict if not oracle.passed else _ok(out)
    print(f"# oracle: {verdict}" + (f" ({oracle.mismatch})" if oracle.mismatch else ""), file=out)
    return failures


def _cmd_points(args) -> int:
    a = _load_curve(args.curve_a, args.affine)
    b = _load_curve(args.curve_b, args.affine)
    cycle = intersection_cycle(a, b)
    points = unpack(cycle, args.precision, curves=(a, b))
    if args.json:
        print(json.dumps(_json_document(a, b, cycle, points)))
    else:
        for row in _point_csv_rows(points):
            print(row)
    return 0


def _cmd_verify(args) -> int:
    if not args.harness and not (args.curve_a and args.curve_b):
        raise _UsageError("verify needs two curves, --harness, or both")
    failed = False
    doc = {}
    if args.curve_a and args.curve_b:
        a = _load_curve(args.curve_a, args.affine)
        b = _load_curve(args.curve_b, args.affine)
        cycle = intersection_cycle(a, b)
        count_ok = bezout_holds(cycle, a.degree, b.degree)
        entries = cycle.sorted_entries()
        member_bad = [
            gc.text()
            for gc, _ in entries
            if not (on_curve(a, gc) and on_curve(b, gc))
        ]
        oracle = resultant_oracle(a, b, args.seed)
        failed = not count_ok or bool(member_bad) or not oracle.passed
        if args.json:
            doc["pair"] = {
                "cycle": cycle.text(),
                "count_ok": count_ok,
                "membership_failures": member_bad,
                "oracle": oracle.to_json(),
            }
        else:
            out = sys.stdout
            print(cycle.text())
            print(
                f"count: {cycle.size} = {a.degree}*{b.degree} "
                f"{_ok(out) if count_ok else _fail(out)}"
            )
            status = _ok(out) if not member_bad else _fail(out)
            print(f"membership: {len(entries) - len(member_bad)}/{len(entries)} {status}")
            print(
                f"oracle: {_ok(out) if oracle.passed else oracle.verdict}"
                + (f" ({oracle.mismatch})" if oracle.mismatch else "")
            )
    if args.harness:
        report = property_harness(args.trials, args.max_degree, args.seed)
        failed = failed or not report.all_passed
        if args.json:
            doc["harness"] = report.to_json()
        else:
            print(report.text())
    if args.json:
        print(json.dumps(doc))
    return 3 if failed else 0


def _parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 4:
        raise _UsageError("range must be xmin:xmax:ymin:ymax")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise _UsageError(f"bad range value: {exc}")
    if vals[0] >= vals[1] or vals[2] >= vals[3]:
        raise _UsageError("range bounds must be increasing")
    return tuple(vals)


def _cmd_plot(args) -> int:
    from .plotting import render_slice_plot

    a = _load_curve(args.curve_a, args.affine)
    b = _load_curve(args.curve_b, args.affine)
    cycle = intersection_cycle(a, b)
    points = unpack(cycle, args.precision, curves=(a, b))
    window = _parse_range(args.range)
    info = render_slice_plot(a, b, points, args.slice, window, args.grid, args.out)
    print(f"wrote {args.out} ({info['markers']} markers)")
    return 0


# ---------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="bezout",
        description="Intersection cycles of projective plane curves over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_curves(p, optional=False):
        nargs = {"nargs": "?"} if optional else {}
        p.add_argument("curve_a", help="first curve, e.g. \"y^2*z-x^3\"", **nargs)
        p.add_argument("curve_b", help="second curve", **nargs)
        p.add_argument("--affine", action="store_true", help="homogenize affine inputs in x, y")

    p_int = sub.add_parser("intersect", help="compute the intersection cycle")
    add_curves(p_int)
    p_int.add_argument("--json", action="store_true", help="emit the JSON document")
    p_int.add_argument("--points", action="store_true", help="append unpacked complex points")
    p_int.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="N")
    p_int.add_argument("--verify", action="store_true", help="run count/membership/oracle checks")
    p_int.add_argument("--seed", type=int, default=0, metavar="N")
    p_int.set_defaults(func=_cmd_intersect)

    p_pts = sub.add_parser("points", help="unpack the cycle into approximate points (CSV)")
    add_curves(p_pts)
    p_pts.add_argument("--json", action="store_true")
    p_pts.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="N")
    p_pts.set_defaults(func=_cmd_points)

    p_ver = sub.add_parser("verify", help="independent checks on a pair and/or random inputs")
    add_curves(p_ver, optional=True)
    p_ver.add_argument("--harness", action="store_true", help="run the random property harness")
    p_ver.add_argument("--trials", type=int, default=25, metavar="N")
    p_ver.add_argument("--max-degree", type=int, default=3, metavar="D")
    p_ver.add_argument("--seed", type=int, default=0, metavar="N")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=_cmd_verify)

    p_plot = sub.add_parser("plot", help="SVG slice plot with multiplicity markers")
    add_curves(p_plot)
    p_plot.add_argument("--slice", default="z=1", choices=["z=1", "y=1", "x=1"])
    p_plot.add_argument("--range", default="-2:2:-2:2", metavar="xmin:xmax:ymin:ymax")
    p_plot.add_argument("--out", default="plot.svg", metavar="FILE.svg")
    p_plot.add_argument("--grid", type=int, default=512, metavar="N")
    p_plot.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="N")
    p_plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CommonComponentError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (CycleInvariantError, RootFindingError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
