"""JSON encoding of pipeline objects.

Every rational is written as a "p/q" (or "p") string; floats appear only
for the advisory search window.
"""

from __future__ import annotations

import json
from typing import Any

from .birational import BirationalData
from .curves import ECPoint, ParamTriple, QuarticCurve, QuarticPoint, ShiftedQuartic, WeierstrassCurve
from .positivity import PositivityCert, SearchWindow
from .rational import format_rat, parse_rat
from .solver import IntegerSolution, Solution
from .verify import VerifyReport

SCHEMA = "1"


def params_json(p: ParamTriple) -> dict:
    return {"x1": format_rat(p.x1), "alpha": format_rat(p.alpha), "beta": format_rat(p.beta)}


def quartic_json(C: QuarticCurve) -> dict:
    return {"f4": format_rat(C.f4), "f2": format_rat(C.f2), "f0": format_rat(C.f0)}


def point_json(P: QuarticPoint | None) -> dict | None:
    if P is None:
        return None
    out = {"t": format_rat(P.t), "v": format_rat(P.v)}
    if P.t_star is not None:
        out["t_star"] = format_rat(P.t_star)
    return out


def ecpoint_json(P: ECPoint | None) -> dict | None:
    if P is None:
        return None
    if P.is_infinity:
        return {"infinity": True}
    return {"x": format_rat(P.x), "y": format_rat(P.y)}


def shifted_json(S: ShiftedQuartic) -> dict:
    return {k: format_rat(getattr(S, k)) for k in ("a", "b", "c", "d", "q", "t_star")}


def weierstrass_json(E: WeierstrassCurve) -> dict:
    return {k: format_rat(getattr(E, k)) for k in ("a1", "a2", "a3", "a4", "a6")}


def birational_json(data: BirationalData) -> dict:
    return {"shifted": shifted_json(data.src), "weierstrass": weierstrass_json(data.dst)}


def cert_json(cert: PositivityCert) -> dict:
    return {
        "a": format_rat(cert.a),
        "b": format_rat(cert.b),
        "c": format_rat(cert.c),
        "disc": format_rat(cert.disc),
        "passes": cert.passes,
    }


def window_json(w: SearchWindow | None) -> dict | None:
    if w is None:
        return None
    return {"lo": float(f"{w.lo:.10g}"), "hi": float(f"{w.hi:.10g}")}


def solution_json(s: Solution) -> dict:
    out: dict[str, Any] = {name: format_rat(val) for name, val in zip(SEXTUPLE, s.components)}
    out["params"] = params_json(s.params)
    out["source"] = point_json(s.source)
    out["combo"] = list(s.combo) if s.combo is not None else None
    return out


def integer_solution_json(s: IntegerSolution) -> dict:
    out: dict[str, Any] = {name: str(val) for name, val in zip(SEXTUPLE, s.components)}
    out["multiplier"] = str(s.multiplier)
    out["minimal"] = s.minimal
    return out


def report_json(r: VerifyReport) -> dict:
    return {
        "holds": r.holds,
        "lhs": format_rat(r.lhs),
        "rhs": format_rat(r.rhs),
        "equation_class": r.equation_class.value,
        "positive": r.positive,
        "integral": r.integral,
    }


SEXTUPLE = ("X1", "X2", "X3", "Y1", "Y2", "Y3")


def parse_params(obj: dict) -> ParamTriple:
    return ParamTriple(parse_rat(obj["x1"]), parse_rat(obj["alpha"]), parse_rat(obj["beta"]))


def parse_quartic_point(obj: dict) -> QuarticPoint:
    t_star = obj.get("t_star")
    return QuarticPoint(parse_rat(obj["t"]), parse_rat(obj["v"]), parse_rat(t_star) if t_star else None)


def parse_ecpoint(obj) -> ECPoint:
    """Accepts {"x": .., "y": ..}, {"infinity": true} or a two-element list."""
    if isinstance(obj, dict):
        if obj.get("infinity"):
            return ECPoint()
        return ECPoint(parse_rat(obj["x"]), parse_rat(obj["y"]))
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return ECPoint(parse_rat(obj[0]), parse_rat(obj[1]))
    raise ValueError(f"cannot read an elliptic-curve point from {obj!r}")


def parse_generators(doc) -> list[ECPoint]:
    if isinstance(doc, dict):
        doc = doc["generators"]
    return [parse_ecpoint(P) for P in doc]


def parse_sextuple(obj) -> tuple:
    if isinstance(obj, dict):
        return tuple(parse_rat(obj.get(name, "0")) for name in SEXTUPLE)
    if isinstance(obj, (list, tuple)) and len(obj) == 6:
        return tuple(parse_rat(v) for v in obj)
    raise ValueError(f"expected six rationals, got {obj!r}")


def parse_sextuples(doc) -> list[tuple]:
    """A JSON array of sextuples, or any envelope carrying a "solutions" array."""
    if isinstance(doc, dict):
        doc = doc["solutions"]
    return [parse_sextuple(item) for item in doc]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
