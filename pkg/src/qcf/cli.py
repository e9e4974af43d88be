"""Command-line interface.

Exit codes: 0 success with results, 1 error, 2 parameter prefilter failed,
3 success without results.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .birational import c_to_e, e_to_c, quartic_to_weierstrass, shift_to_basepoint
from .curves import ECPoint, ParamTriple, QuarticPoint, ec_discriminant, is_on_quartic, points_at_x, quartic_from_params
from .errors import QCFError, UnsupportedParameterRegion
from .families import FAMILY_PARAMS, family_eval, family_positive_range, get_family, singular_to_conic
from .group_law import ec_lincomb
from .positivity import Mode, abc_from_params, prop1_check, prop2_check, search_window
from .presets import PRESETS, get_preset
from .rational import format_rat, parse_rat, parse_rat_list
from .solver import Preset, build_solution, find_rational_point, search, to_integer_solution
from .verify import verify_solution

EXIT_OK, EXIT_ERROR, EXIT_PRECONDITION, EXIT_EMPTY = 0, 1, 2, 3

log = logging.getLogger("qcf")


class CLIError(Exception):
    pass


def _params_arg(text: str) -> ParamTriple:
    try:
        return ParamTriple(*parse_rat_list(text, 3))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point_arg(text: str) -> QuarticPoint:
    try:
        return QuarticPoint(*parse_rat_list(text, 2))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _combo_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(n) for n in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from None


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_grid_axis(text: str) -> list[Fraction]:
    """Comma-separated rationals and inclusive ranges ``a..b`` or ``a..b:step``."""
    values: list[Fraction] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ".." in part:
            span, _, step_text = part.partition(":")
            lo_text, hi_text = span.split("..", 1)
            lo, hi = parse_rat(lo_text), parse_rat(hi_text)
            step = parse_rat(step_text) if step_text else Fraction(1)
            if step <= 0:
                raise ValueError(f"step must be positive in {part!r}")
            v = lo
            while v <= hi:
                values.append(v)
                v += step
        else:
            values.append(parse_rat(part))
    return values


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _envelope(command: str, **body) -> dict:
    return {"schema": jsonio.SCHEMA, "command": command, **body}


# ---------------------------------------------------------------- rendering


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def render_text(doc: dict) -> str:
    rows = [(k, "null" if v is None else json.dumps(v) if isinstance(v, (list, bool)) else str(v))
            for k, v in _flatten(doc)]
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def emit(doc: dict, args) -> None:
    text = render_text(doc) if args.format == "text" else jsonio.dumps(doc)
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------- commands


def _resolve_params(args) -> tuple[ParamTriple, Preset | None]:
    if getattr(args, "preset", None):
        preset = get_preset(args.preset)
        return preset.params, preset
    if getattr(args, "params", None) is None:
        raise CLIError("one of --preset or --params is required")
    return args.params, None


def cmd_derive(args) -> int:
    p, preset = _resolve_params(args)
    C = quartic_from_params(p)
    cert = abc_from_params(p)
    doc = _envelope("derive", params=jsonio.params_json(p), quartic=jsonio.quartic_json(C),
                    positivity=jsonio.cert_json(cert))
    try:
        ok = prop2_check(p)
    except UnsupportedParameterRegion as exc:
        ok = False
        doc["error"] = str(exc)
    if not ok and not args.force:
        emit(doc, args)
        log.error("parameters fail the prefilter b < 0 < b^2 - 4ac (use --force to continue)")
        return EXIT_PRECONDITION
    doc["window"] = jsonio.window_json(search_window(p)) if ok else None
    if C.f0 == 0:
        conic = singular_to_conic(C)
        doc["singular"] = True
        doc["conic"] = {"A": format_rat(conic.A), "B": format_rat(conic.B),
                        "base": {"s": format_rat(conic.s0), "w": format_rat(conic.w0)}}
        doc["hint"] = "x1 = 0 gives a singular quartic; its points are parametrised, see `qcf family`"
        emit(doc, args)
        return EXIT_OK
    doc["singular"] = False
    basepoint = args.basepoint or (preset.basepoint if preset else None)
    if basepoint is None:
        basepoint = find_rational_point(C, args.height, require_nonzero_v=True)
        if basepoint is None:
            doc["basepoint"] = None
            emit(doc, args)
            return EXIT_EMPTY
    if not is_on_quartic(C, basepoint):
        raise CLIError(f"basepoint ({format_rat(basepoint.t)}, {format_rat(basepoint.v)}) is not on the quartic")
    data = quartic_to_weierstrass(shift_to_basepoint(C, basepoint))
    doc["basepoint"] = jsonio.point_json(basepoint)
    doc.update(jsonio.birational_json(data))
    doc["discriminant"] = format_rat(ec_discriminant(data.dst))
    doc["elliptic"] = data.is_elliptic
    emit(doc, args)
    return EXIT_OK


def cmd_point_search(args) -> int:
    p, _ = _resolve_params(args)
    C = quartic_from_params(p)
    pt = find_rational_point(C, args.height, require_nonzero_v=args.nonzero)
    emit(_envelope("point-search", params=jsonio.params_json(p), quartic=jsonio.quartic_json(C),
                   height=args.height, basepoint=jsonio.point_json(pt)), args)
    return EXIT_OK if pt is not None else EXIT_EMPTY


def _preset_from_args(args) -> Preset:
    if args.preset:
        preset = get_preset(args.preset)
        if args.gens:
            preset = Preset(preset.name, preset.params, preset.basepoint,
                            tuple(jsonio.parse_generators(_load_json(args.gens))))
        return preset
    if args.derived:
        derived = _load_json(args.derived)
        params = jsonio.parse_params(derived["params"])
        basepoint = jsonio.parse_quartic_point(derived["basepoint"])
    elif args.params is not None:
        params = args.params
        basepoint = args.basepoint or find_rational_point(
            quartic_from_params(params), args.height, require_nonzero_v=True)
        if basepoint is None:
            raise CLIError(f"no basepoint with v != 0 up to height {args.height}")
    else:
        raise CLIError("one of --preset, --params or --derived is required")
    if not args.gens:
        raise CLIError("--gens FILE is required without --preset")
    gens = tuple(jsonio.parse_generators(_load_json(args.gens)))
    return Preset("custom", params, basepoint, gens)


def cmd_search(args) -> int:
    preset = _preset_from_args(args)
    sols = search(preset, args.bound, mode=args.mode, max_bits=args.max_bits, jobs=args.jobs)
    body = [jsonio.solution_json(s) for s in sols]
    if args.integer:
        for entry, s in zip(body, sols):
            entry["integer"] = jsonio.integer_solution_json(to_integer_solution(s))
    emit(_envelope("search", preset=preset.name, bound=args.bound, mode=Mode(args.mode).value,
                   count=len(sols), solutions=body), args)
    return EXIT_OK if sols else EXIT_EMPTY


def _k_values(args) -> list[Fraction]:
    if args.k is not None:
        return [args.k]
    if args.k_range:
        lo_text, hi_text = args.k_range.split("..", 1)
        return parse_grid_axis(f"{lo_text}..{hi_text}:{format_rat(args.step)}")
    raise CLIError("one of --k or --k-range is required")


def cmd_family(args) -> int:
    fam = get_family(args.name)
    rows = []
    for k in _k_values(args):
        s = family_eval(fam, k)
        if s is None:
            rows.append({"k": format_rat(k), "solution": None})
            continue
        row = {"k": format_rat(k), "solution": jsonio.solution_json(s),
               "positive": family_positive_range(fam, k)}
        if args.integer:
            row["integer"] = jsonio.integer_solution_json(to_integer_solution(s, minimize=args.minimize))
        rows.append(row)
    emit(_envelope("family", name=fam.name, params=jsonio.params_json(fam.params),
                   closed_form=fam.as_strings(), results=rows), args)
    return EXIT_OK if any(r["solution"] for r in rows) else EXIT_EMPTY


def cmd_verify(args) -> int:
    sextuples = jsonio.parse_sextuples(_load_json(args.input))
    reports = [verify_solution(*s) for s in sextuples]
    all_hold = all(r.holds for r in reports)
    emit(_envelope("verify", all_hold=all_hold, reports=[jsonio.report_json(r) for r in reports]), args)
    return EXIT_OK if all_hold else EXIT_EMPTY


def cmd_map_point(args) -> int:
    preset = _preset_from_args(args) if (args.gens or args.preset) else None
    if preset is None:
        p, _ = _resolve_params(args)
        if args.basepoint is None:
            raise CLIError("--basepoint is required with --params and no --gens")
        preset = Preset("custom", p, args.basepoint, ())
    data = preset.validate()
    if args.combo is not None:
        P = ec_lincomb(data.dst, args.combo, preset.generators)
    elif args.x is not None:
        if args.y is not None:
            P = ECPoint(args.x, args.y)
        else:
            roots = points_at_x(data.dst, args.x)
            if not roots:
                raise CLIError(f"no rational point on E with x = {format_rat(args.x)}")
            P = roots[0] if args.root == "low" else roots[-1]
    elif args.t is not None:
        if args.v is None:
            raise CLIError("--t needs --v")
        pt = QuarticPoint(args.t, args.v)
        P = c_to_e(data, pt)
    else:
        raise CLIError("one of --combo, --x or --t is required")
    pt = e_to_c(data, P)
    doc = _envelope("map-point", preset=preset.name, ec_point=jsonio.ecpoint_json(P),
                    quartic_point=jsonio.point_json(pt))
    if pt is not None:
        doc["prop1"] = {m.value: prop1_check(preset.params, pt, m) for m in Mode}
        doc["solution"] = jsonio.solution_json(build_solution(preset.params, pt, args.combo))
    emit(doc, args)
    return EXIT_OK if pt is not None else EXIT_EMPTY


def scan_row(p: ParamTriple, height: int) -> dict:
    cert = abc_from_params(p)
    row = {"params": jsonio.params_json(p), "positivity": jsonio.cert_json(cert)}
    try:
        passes = prop2_check(p)
    except UnsupportedParameterRegion:
        passes = False
    row["prefilter"] = passes
    if not passes:
        row["basepoint"] = None
        return row
    C = quartic_from_params(p)
    row["singular"] = C.f0 == 0
    row["basepoint"] = jsonio.point_json(find_rational_point(C, height, require_nonzero_v=True))
    row["window"] = jsonio.window_json(search_window(p))
    return row


def cmd_scan(args) -> int:
    grid = [ParamTriple(*t) for t in itertools.product(
        parse_grid_axis(args.x1), parse_grid_axis(args.alpha), parse_grid_axis(args.beta))]
    if args.jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(scan_row, grid, itertools.repeat(args.height)))
    else:
        rows = [scan_row(p, args.height) for p in grid]
    if not args.all:
        rows = [r for r in rows if r["prefilter"] and r["basepoint"] is not None]
    emit(_envelope("scan", height=args.height, grid_size=len(grid), rows=rows), args)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    def add_source(sp, with_gens=False):
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--preset", choices=sorted(PRESETS))
        src.add_argument("--params", type=_params_arg, metavar="X1,ALPHA,BETA")
        if with_gens:
            src.add_argument("--derived", metavar="FILE", help="params and basepoint from `derive` output")
            sp.add_argument("--gens", metavar="FILE", help="JSON list of generator points on E")
        sp.add_argument("--basepoint", type=_point_arg, metavar="T,V")
        sp.add_argument("--height", type=int, default=50, help="basepoint search height (default 50)")

    parser = argparse.ArgumentParser(prog="qcf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("derive", parents=[common], help="quartic, prefilter, window and Weierstrass model")
    add_source(sp)
    sp.add_argument("--force", action="store_true", help="continue when the prefilter fails")
    sp.set_defaults(func=cmd_derive)

    sp = sub.add_parser("point-search", parents=[common], help="small-height rational point on the quartic")
    add_source(sp)
    sp.add_argument("--nonzero", action="store_true", help="skip points with v = 0")
    sp.set_defaults(func=cmd_point_search)

    sp = sub.add_parser("search", parents=[common], help="positive solutions from generator combinations")
    add_source(sp, with_gens=True)
    sp.add_argument("--bound", type=int, required=True, help="max-norm of coefficient vectors")
    sp.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STRICT.value)
    sp.add_argument("--max-bits", type=int, default=None, help="coordinate size cap (env QCF_MAX_BITS)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--integer", action="store_true", help="also emit integer scalings")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("family", parents=[common], help="closed-form families from singular quartics")
    sp.add_argument("--name", choices=sorted(FAMILY_PARAMS), required=True)
    sp.add_argument("--k", type=_rat_arg)
    sp.add_argument("--k-range", metavar="A..B")
    sp.add_argument("--step", type=_rat_arg, default=Fraction(1))
    sp.add_argument("--integer", action="store_true")
    sp.add_argument("--minimize", action="store_true", help="smallest integer multiplier (factors denominators)")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify", parents=[common], help="exactly verify sextuples from a JSON file")
    sp.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("map-point", parents=[common], help="map a point between E and the quartic")
    add_source(sp, with_gens=True)
    sp.add_argument("--combo", type=_combo_arg, metavar="N1,N2,...")
    sp.add_argument("--x", type=_rat_arg)
    sp.add_argument("--y", type=_rat_arg)
    sp.add_argument("--root", choices=("low", "high"), default="low", help="y-root when only --x is given")
    sp.add_argument("--t", type=_rat_arg)
    sp.add_argument("--v", type=_rat_arg)
    sp.set_defaults(func=cmd_map_point)

    sp = sub.add_parser("scan", parents=[common], help="prefilter and basepoint search over a parameter grid")
    sp.add_argument("--x1", default="", help="values, e.g. 0..3 or 1/2,2")
    sp.add_argument("--alpha", default="")
    sp.add_argument("--beta", default="")
    sp.add_argument("--height", type=int, default=20)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--all", action="store_true", help="include rows that fail")
    sp.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="qcf: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (CLIError, QCFError, KeyError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"qcf: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
