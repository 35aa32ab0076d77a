"""Command line front end: ``persistdist <command> ...``.

Exit status is 0 on success, 1 when ``oracle-check`` finds a disagreement,
2 for unreadable or invalid input and 3 when a brute-force size limit is hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bottleneck import bottleneck
from .dimdist import GridFunction, dimension_distance, dimension_function
from .document import load
from .errors import IntervalError, ParseError, ShapeMismatch, SizeLimitError
from .extreal import format_scalar, to_scalar
from .generate import random_interval
from .interleaving import interleaving_distance
from .oracle import DEFAULT_MAX_COMPONENTS, oracle_distance
from .render import render_svg

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_SIZE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _single(doc, path):
    module = doc.module()
    if len(module) != 1:
        raise UsageError(f"{path}: expected exactly one interval, found {len(module)}")
    return module[0]


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def cmd_validate(args):
    doc = load(args.file)
    count = sum(len(m) for m in doc.modules.values())
    grid = f", grid {'x'.join(map(str, doc.grid.shape))}" if doc.grid else ""
    _emit(
        args,
        f"ok: {len(doc.modules)} module(s), {count} interval(s){grid}",
        {"valid": True, "modules": {k: len(v) for k, v in doc.modules.items()}},
    )


def cmd_interleaving(args):
    a = _single(load(args.a), args.a)
    b = _single(load(args.b), args.b)
    d = format_scalar(interleaving_distance(a, b))
    _emit(args, d, {"distance": d})


def cmd_bottleneck(args):
    ms = load(args.a).module()
    ns = load(args.b).module()
    res = bottleneck(ms, ns)
    d = format_scalar(res.distance)
    pairs = [list(p) for p in res.matching]
    payload = {"distance": d, "matching": pairs, "unmatched_left": list(res.unmatched_left)}
    if res.unmatched_right:
        payload["unmatched_right"] = list(res.unmatched_right)
    lines = [d]
    lines += [f"match {i} {j}" for i, j in res.matching]
    lines += [f"unmatched left {i}" for i in res.unmatched_left]
    lines += [f"unmatched right {j}" for j in res.unmatched_right]
    _emit(args, "\n".join(lines), payload)


def _parse_grid(spec):
    # SHAPE[:ORIGIN[:SPACING]], e.g. 17x17:0,0:1
    parts = spec.split(":")
    try:
        shape = tuple(int(s) for s in parts[0].lower().split("x"))
        origin = tuple(to_scalar(o) for o in parts[1].split(",")) if len(parts) > 1 else (0,) * len(shape)
        spacing = to_scalar(parts[2]) if len(parts) > 2 else 1
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --grid {spec!r}: {exc}") from None
    if len(origin) != len(shape) or any(s <= 0 for s in shape) or not spacing > 0:
        raise UsageError(f"bad --grid {spec!r}")
    return shape, origin, spacing


def _grid_function(path, grid_spec) -> GridFunction:
    doc = load(path)
    if grid_spec is not None:
        shape, origin, spacing = _parse_grid(grid_spec)
        if len(shape) != 2:
            raise UsageError(f"bad --grid {grid_spec!r}: modules are sampled on 2-d grids")
        return dimension_function(doc.module(), shape, origin, spacing)
    if doc.grid is None:
        raise UsageError(f"{path}: no grid block; pass --grid to sample the module")
    return doc.grid.values


def cmd_dimdist(args):
    f = _grid_function(args.f, args.grid)
    g = _grid_function(args.g, args.grid)
    res = dimension_distance(f, g)
    vals = {k: format_scalar(v) for k, v in res._asdict().items()}
    _emit(
        args,
        f"d_minus {vals['d_minus']}\nd_plus {vals['d_plus']}\nd_zero {vals['d_zero']}",
        vals,
    )


def cmd_oracle_check(args):
    if args.a and args.b:
        pairs = [(_single(load(args.a), args.a), _single(load(args.b), args.b))]
    elif args.a or args.b:
        raise UsageError("give two files or none")
    else:
        rng = random.Random(args.seed)
        pairs = [(random_interval(rng), random_interval(rng)) for _ in range(args.trials)]
    mismatches = []
    for k, (a, b) in enumerate(pairs):
        fast = interleaving_distance(a, b)
        slow = oracle_distance(a, b, max_components=args.max_components)
        if fast != slow:
            mismatches.append({"pair": k, "algorithm": format_scalar(fast), "oracle": format_scalar(slow)})
    text = f"checked {len(pairs)} pair(s), {len(mismatches)} mismatch(es)"
    for mm in mismatches:
        text += f"\npair {mm['pair']}: algorithm {mm['algorithm']}, oracle {mm['oracle']}"
    _emit(args, text, {"checked": len(pairs), "mismatches": mismatches})
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _parse_frame(spec):
    try:
        vals = tuple(to_scalar(v) for v in spec.split(","))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --frame {spec!r}: {exc}") from None
    if len(vals) != 4:
        raise UsageError("--frame takes x0,y0,x1,y1")
    return vals


def cmd_render(args):
    a = list(load(args.a).module())
    b = list(load(args.b).module()) if args.b else []
    shift = to_scalar(args.shift) if args.shift is not None else None
    if shift is not None and not b:
        raise UsageError("--shift needs a second file")
    frame = _parse_frame(args.frame) if args.frame else None
    try:
        svg = render_svg(a, b, shift=shift, frame=frame)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="persistdist",
        description="Exact interleaving, bottleneck and dimension distances of 2-parameter interval modules.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a module document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("interleaving", parents=[common], help="d_I of two single intervals")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_interleaving)

    p = sub.add_parser("bottleneck", parents=[common], help="d_B of two modules, with a matching")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_bottleneck)

    p = sub.add_parser("dimdist", parents=[common], help="dimension distances of two grid functions")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--grid", help="sample the first module instead: SHAPE[:ORIGIN[:SPACING]], e.g. 17x17:0,0:1")
    p.set_defaults(func=cmd_dimdist)

    p = sub.add_parser("oracle-check", parents=[common], help="compare d_I with the brute-force oracle")
    p.add_argument("a", nargs="?")
    p.add_argument("b", nargs="?")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-components", type=int, default=DEFAULT_MAX_COMPONENTS)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("render", parents=[common], help="draw intervals as SVG")
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.add_argument("--shift", help="overlay the second module shifted by this amount")
    p.add_argument("--frame", help="x0,y0,x1,y1; infinite coordinates are clipped to it")
    p.add_argument("-o", "--output", help="write the SVG here instead of stdout")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args)
    except (ParseError, IntervalError, ShapeMismatch, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SizeLimitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SIZE
    return EXIT_OK if status is None else status


if __name__ == "__main__":
    sys.exit(main())
