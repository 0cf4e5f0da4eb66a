"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical check failed,
2 usage, parse or precondition error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import generators
from .errors import PreconditionError
from .exact import Vec2, format_rat, is_lattice, parse_rat
from .hopf import check_umlaufsatz, turning_angles
from .measures import ang, axiom_samples, check_angle_axioms, dang
from .pick import pick_check_lemma
from .polygon import (
    Polygon,
    area,
    is_closed,
    is_simple,
    normalize_positive,
    orientation_label,
    polygon_from_doc,
    polygon_to_doc,
)
from .render import DEFAULT_PALETTE, RenderSpec, render_svg
from .winding import Box, classify, default_box_radius

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_polygon(path: str) -> Polygon:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        return polygon_from_doc(doc)
    except (OSError, json.JSONDecodeError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read polygon from {path}: {exc}") from exc


def parse_point(text: str) -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"point must be 'x,y', got {text!r}")
    try:
        return Vec2(parse_rat(parts[0]), parse_rat(parts[1]))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(doc: dict, human: bool) -> None:
    if human:
        width = max(len(k) for k in doc)
        for key, value in doc.items():
            if isinstance(value, list):
                value = " ".join(str(v) for v in value)
            print(f"{key:<{width}}  {value}")
    else:
        print(json.dumps(doc, indent=2))


def _flags(P: Polygon) -> dict:
    closed = is_closed(P)
    return {
        "closed": closed,
        "simple": is_simple(P) if closed else False,
        "orientation": orientation_label(P) if closed else "undefined",
    }


def cmd_area(args) -> int:
    P = load_polygon(args.polygon)
    doc = {"area": format_rat(area(P)), **_flags(P)}
    if not doc["closed"]:
        print("warning: polygon is not closed; area is the open trapezoid sum", file=sys.stderr)
    _emit(doc, args.human)
    return EXIT_OK


def _maybe_normalize(P: Polygon, args) -> Polygon:
    if getattr(args, "normalize_orientation", False) and is_closed(P) and area(P) != 0:
        return normalize_positive(P)
    return P


def cmd_pick(args) -> int:
    P = _maybe_normalize(load_polygon(args.polygon), args)
    report = pick_check_lemma(P, args.box_radius)
    _emit(report.to_dict(), args.human)
    if not report.lemma_holds or report.theorem_holds is False:
        return EXIT_FAIL
    return EXIT_OK


def cmd_welp(args) -> int:
    P = load_polygon(args.polygon)
    report = pick_check_lemma(P, args.box_radius)
    doc = {
        "area": format_rat(report.area),
        "welp": format_rat(report.welp),
        "box_radius": report.box_radius,
        "lemma_holds": report.lemma_holds,
    }
    _emit(doc, args.human)
    return EXIT_OK if report.lemma_holds else EXIT_FAIL


def cmd_classify(args) -> int:
    P = _maybe_normalize(load_polygon(args.polygon), args)
    text = args.point_opt or args.point
    if text is None:
        raise UsageError("a query point 'x,y' is required")
    q = parse_point(text)
    if not is_lattice(q):
        raise UsageError(f"query point {text} is not a lattice point")
    pc = classify(P, q)
    if args.json:
        _emit({"kind": pc.kind.value, "winding": format_rat(pc.winding), "index": pc.index}, False)
    else:
        print(f"{pc.kind.value} {format_rat(pc.winding)}")
    return EXIT_OK


def cmd_hopf(args) -> int:
    P = _maybe_normalize(load_polygon(args.polygon), args)
    if not is_closed(P):
        raise UsageError("hopf needs a closed polygon")
    holds = check_umlaufsatz(P, permissive=args.permissive)
    prof = turning_angles(P)
    doc = {
        "alphas": [format_rat(a) for a in prof.alphas],
        "betas": [format_rat(b) for b in prof.betas],
        "umlaufzahl": format_rat(prof.umlaufzahl),
        "beta_sum": format_rat(prof.beta_sum),
        "umlaufsatz": holds,
    }
    _emit(doc, args.human)
    claimed = is_simple(P) and area(P) > 0
    return EXIT_FAIL if (claimed and not holds) else EXIT_OK


def cmd_axioms(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    mu = dang if args.measure == "dang" else ang
    tol = args.tolerance if args.tolerance is not None else (0 if args.measure == "dang" else 1e-9)
    samples = axiom_samples(generators.SplitMix64(args.seed), args.samples)
    report = check_angle_axioms(mu, samples, tol=tol)
    doc = {"measure": args.measure, "samples": args.samples, "tolerance": tol, **report.to_dict()}
    if args.human:
        for name, res in report.items():
            line = f"{name:<14} {'pass' if res.passed else 'FAIL'}"
            print(line if res.passed else f"{line}  {res.counterexample}")
    else:
        _emit(doc, False)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "rectangle":
        P = generators.rectangle(args.a, args.b)
    elif kind == "oblique":
        P = generators.oblique_square()
    elif kind == "farey":
        P = generators.farey_sunburst(args.m)
    elif kind == "eight":
        P = generators.figure_eight()
    elif kind == "random-simple":
        P = generators.random_simple_polygon(args.seed, args.k, args.r)
    else:
        P = generators.random_closed_polygon(args.seed, args.k, args.r)
    text = json.dumps(polygon_to_doc(P)) + "\n"
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def cmd_render(args) -> int:
    P = load_polygon(args.polygon)
    palette = tuple(args.palette.split(",")) if args.palette else DEFAULT_PALETTE
    try:
        spec = RenderSpec(
            cell=args.cell,
            margin=args.margin,
            show_grid=not args.no_grid,
            palette=palette,
            stroke_width=args.stroke_width,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    box = None
    if args.box_radius is not None:
        if P.is_integer() and args.box_radius < default_box_radius(P).r:
            raise UsageError("--box-radius may not shrink below the vertex extent")
        box = Box(args.box_radius)
    _write(args.output, render_svg(P, spec, box))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pickwelp", description="Exact checks around Pick's theorem.")
    sub = parser.add_subparsers(dest="command", required=True)

    def polygon_cmd(name: str, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("polygon", help="polygon JSON file, or - for stdin")
        p.add_argument("--human", action="store_true", help="tabular output instead of JSON")
        return p

    p = polygon_cmd("area", "oriented area")
    p.set_defaults(func=cmd_area)

    p = polygon_cmd("pick", "check Area = Welp and, for simple polygons, Area = I + J/2 - 1")
    p.add_argument("--box-radius", type=int, default=None)
    p.add_argument("--normalize-orientation", action="store_true")
    p.set_defaults(func=cmd_pick)

    p = polygon_cmd("welp", "weighted enclosed lattice points")
    p.add_argument("--box-radius", type=int, default=None)
    p.set_defaults(func=cmd_welp)

    p = sub.add_parser("classify", help="classify a lattice point")
    p.add_argument("polygon")
    p.add_argument("point", nargs="?", help="x,y (use --point=x,y for negative x)")
    p.add_argument("--point", dest="point_opt", default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--normalize-orientation", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = polygon_cmd("hopf", "turning and interior angles")
    p.add_argument("--permissive", action="store_true", help="report instead of rejecting non-simple input")
    p.add_argument("--normalize-orientation", action="store_true")
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("axioms", help="check the angle-measure axioms on seeded samples")
    p.add_argument("--measure", choices=("dang", "ang"), default="dang")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--human", action="store_true")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("gen", help="emit a named or random polygon")
    p.add_argument(
        "kind", choices=("rectangle", "oblique", "farey", "eight", "random-simple", "random-closed")
    )
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="write an SVG figure")
    p.add_argument("polygon")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--cell", type=float, default=24.0)
    p.add_argument("--margin", type=float, default=16.0)
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--stroke-width", type=float, default=2.0)
    p.add_argument("--palette", default=None, help="exterior,interior,edge,vertex colors")
    p.add_argument("--box-radius", type=int, default=None)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, PreconditionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
