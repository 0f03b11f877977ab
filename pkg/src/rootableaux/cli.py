"""Command-line entry point: ``rootableaux <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import arrangement, boxes, boxes_c, calibration, render, serialize, shapes
from .errors import CapExceeded, InvalidShape, NotDominant, NotStandard, UnsupportedType
from .roots import DEFAULT_CAP, build_root_system, fmt_root, fmt_vector

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_COUNTEREXAMPLE = 0, 2, 3, 4


class UsageError(ValueError):
    pass


# shape input ----------------------------------------------------------------------

def _system(args):
    if args.type is None or args.rank is None:
        raise UsageError("give -t/--type and -r/--rank")
    return build_root_system(args.type, args.rank)


def load_shape(args, *, dominant: bool = True) -> shapes.PlacedShape:
    if getattr(args, "shape_file", None):
        text = sys.stdin.read() if args.shape_file == "-" else Path(args.shape_file).read_text()
        return serialize.shape_from_json(text, dominant=dominant)
    if getattr(args, "shape", None):
        return serialize.shape_from_json(args.shape, dominant=dominant)
    R = _system(args)
    if args.gamma is None:
        raise UsageError("give --gamma, --shape or --shape-file")
    gamma = serialize.parse_vector(args.gamma)
    J = serialize.parse_simple_coords(R, args.J) if args.J else []
    return shapes.placed_shape(R, gamma, J, dominant=dominant)


def _emit(args, text_lines: list[str] | str, payload=None, dot: str | None = None) -> None:
    fmt = getattr(args, "format", "text")
    if fmt == "json" and payload is not None:
        print(serialize.dumps(payload))
    elif fmt == "dot" and dot is not None:
        print(dot)
    else:
        print(text_lines if isinstance(text_lines, str) else "\n".join(text_lines))


def _roots_line(R, roots) -> str:
    return ", ".join(fmt_root(r) for r in sorted(roots, key=lambda r: (R.height(r), r))) or "-"


# subcommands -----------------------------------------------------------------------

def cmd_roots(args) -> int:
    R = _system(args)
    lines = [
        f"type {R.name}",
        f"|W| = {R.order()}",
        f"simple roots: {', '.join(fmt_root(a) for a in R.simple_roots) or '-'}",
        f"positive roots ({len(R.positive_roots)}):",
    ]
    lines += [f"  {fmt_root(r)}  simple coords {R.simple_coordinates(r)}" for r in R.positive_roots]
    payload = {
        "type": R.name,
        "order": R.order(),
        "simple_roots": [list(a) for a in R.simple_roots],
        "positive_roots": [list(r) for r in R.positive_roots],
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_shape(args) -> int:
    shape = load_shape(args)
    R = shape.system
    if args.format == "json":
        print(serialize.dumps(serialize.shape_to_json(shape)))
        return EXIT_OK
    if args.format == "ascii":
        print(_draw_shape(shape, args))
        return EXIT_OK
    size = len(shapes.tableau_indices(shape, args.cap))
    lines = [
        shape.describe(),
        f"Z = {{{_roots_line(R, shape.Z)}}}",
        f"P = {{{_roots_line(R, shape.P)}}}",
        f"nonemptiness condition: {shapes.nonemptiness_condition(shape)}",
        f"|F| = {size}",
    ]
    if size:
        lines.append(f"skew: {shapes.is_skew(shape, cap=args.cap)}")
        lines.append(f"ribbon: {shapes.is_ribbon(shape)}")
        lines.append(f"conjugate: {shapes.conjugate_shape(shape).describe()}")
    print("\n".join(lines))
    return EXIT_OK


def _check_boxes(n: int, args) -> None:
    if args.boxes is not None and n > args.boxes:
        raise CapExceeded("box configuration", n, args.boxes)


def _draw_shape(shape: shapes.PlacedShape, args, words=None) -> str:
    """Box picture of the shape, optionally followed by one drawing per word."""
    labels = getattr(args, "labels", "index")
    _check_boxes(shape.system.ambient_dim, args)
    if shape.system.family == "A":
        book = boxes.book_for_shape(shape)
        draw: Callable = lambda mode, w=None: render.render_book(book, mode, w)  # noqa: E731
        moved = book.order != tuple(range(len(book.order)))
        rearranged = book.shape()
    elif shape.system.family == "C":
        bookc, w = boxes_c.book_from_shape(shape)
        draw = lambda mode, w=None: render.render_book_c(bookc, mode, w)  # noqa: E731
        moved = w.perm != tuple(range(1, len(w.perm) + 1))
        rearranged = bookc.shape()
    else:
        raise InvalidShape(f"no box model for type {shape.system.family}")
    out = []
    if moved:
        out.append(f"drawn for the rearranged weight {fmt_vector(rearranged.gamma)}")
    out.append(draw(labels))
    if words is not None:
        if moved:
            words = shapes.enumerate_standard_tableaux(rearranged, args.cap)
        for w in words:
            out.append("")
            out.append(w.oneline())
            out.append(draw("entry", w.perm))
    return "\n".join(out)


def cmd_tableaux(args) -> int:
    shape = load_shape(args)
    ts = shapes.enumerate_standard_tableaux(shape, args.cap)
    if args.format == "json":
        print(serialize.dumps(serialize.tableau_set_to_json(ts)))
        return EXIT_OK
    lines = [shape.describe(), f"|F| = {len(ts)}"]
    lines += [w.oneline() for w in ts]
    if args.render and len(ts):
        lines += ["", _draw_shape(shape, args, list(ts))]
    print("\n".join(lines))
    return EXIT_OK


def cmd_calib(args) -> int:
    shape = load_shape(args)
    R = shape.system
    graph = calibration.build_calibration_graph(R, shape.gamma, args.cap)
    summary = calibration.component_summary(graph)
    if args.format == "dot":
        print(calibration.to_dot(graph))
        return EXIT_OK
    payload = {
        "type": R.name,
        "gamma": serialize.weight_to_json(shape.gamma),
        "vertices": len(graph),
        "edges": [list(e) for e in graph.edges],
        "components": summary,
    }
    lines = [
        f"{R.name} gamma={fmt_vector(shape.gamma)}",
        f"vertices: {len(graph)}",
        f"edges: {len(graph.edges)}",
        f"components: {len(summary)}",
    ]
    for c in summary:
        J = "{" + ", ".join(c["J"]) + "}" if c["J"] is not None else "?"
        lines.append(f"  size {c['size']}  J = {J}")
    _emit(args, lines, payload)
    return EXIT_OK


def _grid(args) -> tuple:
    return serialize.parse_vector(args.grid)


def cmd_conjecture(args) -> int:
    R = _system(args)
    gammas = list(shapes.dominant_grid(R, _grid(args)))
    if args.name == "nonempty":
        report = shapes.nonemptiness_harness(R, gammas, args.cap)
    else:
        report = shapes.interval_harness(R, gammas, args.cap)
    report["grid"] = [str(v) for v in _grid(args)]
    if args.format == "json":
        print(serialize.dumps(report))
    else:
        print(f"{report['conjecture']} on {report['type']}: {report['shapes_checked']} shapes checked")
        if report["counterexample"]:
            bad = report.get("failures") or report["forward_violations"] + report["reverse_violations"]
            print(f"counterexample found ({len(bad)})")
            for b in bad[:10]:
                print(f"  {b if isinstance(b, str) else json.dumps(b, sort_keys=True)}")
        else:
            print("no counterexample")
    return EXIT_COUNTEREXAMPLE if report["counterexample"] else EXIT_OK


def cmd_count(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("give -n with n >= 1")
    if args.which == "shi-dominant":
        value = arrangement.count_shi_dominant_intersections(args.n, args.reading, args.cap)
        payload = {"count": "shi-dominant", "n": args.n, "reading": args.reading, "value": value,
                   "formula": arrangement.shi_dominant_formula(args.n)}
        lines = [str(value), f"formula: {payload['formula']}"]
    else:
        if (args.type or "A").upper() != "A":
            raise UnsupportedType("calib-classes is implemented for type A")
        value = arrangement.calibration_classes_type_a(args.n, args.cap)
        printed = arrangement.product_series(args.n, 1)[args.n]
        recip = arrangement.product_series(args.n, -1)[args.n]
        payload = {"count": "calib-classes", "type": "A", "n": args.n, "value": value,
                   "printed": printed, "reciprocal": recip}
        verdict = [k for k in ("printed", "reciprocal") if payload[k] == value]
        lines = [str(value),
                 f"generating function: printed {printed}, reciprocal {recip}; "
                 f"agrees with {', '.join(verdict) or 'neither'}"]
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_render(args) -> int:
    shape = load_shape(args)
    words = None
    if args.word:
        R = shape.system
        from .roots import WeylElement
        w = WeylElement(R, tuple(int(x) for x in args.word.split(",")))
        if not shape.contains(w):
            raise NotStandard(f"{w.oneline()} is not a standard tableau of {shape.describe()}")
        words = [w]
    print(_draw_shape(shape, args, words))
    return EXIT_OK


# parser ------------------------------------------------------------------------------

def _add_shape_flags(p):
    p.add_argument("--gamma", help="weight in epsilon coordinates, e.g. 0,1/2,1")
    p.add_argument("--J", help="roots of J by simple-root coordinates, ';'-separated, e.g. 0,1;1,1")
    p.add_argument("--shape", help="inline shape JSON")
    p.add_argument("--shape-file", help="shape JSON file ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", "--type", help="root system family A, B, C or D")
    common.add_argument("-r", "--rank", type=int)
    common.add_argument("--format", choices=("text", "json", "dot", "ascii"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest group to enumerate")
    common.add_argument("--boxes", type=int, default=None, help="largest box count to draw")

    parser = argparse.ArgumentParser(prog="rootableaux", description="Standard tableaux of placed shapes in root systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="list roots and the group order")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("shape", parents=[common], help="describe a placed shape")
    _add_shape_flags(p)
    p.add_argument("--labels", choices=("content", "index"), default="index")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("tableaux", parents=[common], help="enumerate standard tableaux")
    _add_shape_flags(p)
    p.add_argument("--render", action="store_true", help="draw box fillings (types A and C)")
    p.add_argument("--labels", choices=("content", "index"), default="index")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("calib", parents=[common], help="calibration graph of the orbit")
    _add_shape_flags(p)
    p.set_defaults(func=cmd_calib)

    p = sub.add_parser("conjecture", parents=[common], help="run a conjecture harness over a grid")
    p.add_argument("name", choices=("nonempty", "interval"))
    p.add_argument("--grid", default="0,1,2", help="simple-root pairings to sweep")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("count", parents=[common], help="counting formulas")
    p.add_argument("which", choices=("shi-dominant", "calib-classes"))
    p.add_argument("-n", type=int)
    p.add_argument("--reading", choices=arrangement.SHI_READINGS, default="flat")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("render", parents=[common], help="draw the box picture of a shape")
    _add_shape_flags(p)
    p.add_argument("--labels", choices=("content", "index"), default="index")
    p.add_argument("--word", help="one-line tableau to draw as a filling, e.g. 2,1,3")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, InvalidShape, NotDominant, UnsupportedType, NotStandard, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
