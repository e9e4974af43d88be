"""One-parameter solution families for the singular quartics with x1 = 0.

With x1 = 0 the quartic is v^2 = f4 t^4 + f2 t^2, singular at the origin.
Putting s = 1/t, w = v/t^2 turns it into the conic w^2 = f4 + f2 s^2, and
lines w = w0 + k (s - s0) through a rational base point sweep out all its
rational points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .curves import ParamTriple, QuarticCurve, QuarticPoint, quartic_from_params
from .errors import IdentityViolation, NotSingular
from .rational import Rat, format_rat, rat_sqrt
from .solver import Solution, rationals_of_height

# Polynomials in k: coefficient tuples, constant term first.
Poly = tuple[Fraction, ...]

COMPONENTS = ("X1", "X2", "X3", "Y1", "Y2", "Y3")


def _trim(p) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def pscale(p: Poly, c: Rat) -> Poly:
    return _trim(c * a for a in p)


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def peval(p: Poly, k: Rat) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * k + c
    return acc


def pformat(p: Poly, var: str = "k") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if mag == 1 and i > 0 else format_rat(mag)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = f"{coef}*{mono}" if coef and mono else coef or mono
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Scale num/den to coprime integer coefficients with positive leading den."""
    coeffs = [c for c in num + den if c != 0]
    if not coeffs:
        return num, den
    scale = Fraction(lcm(*(c.denominator for c in coeffs)))
    content = reduce(gcd, (int(c * scale) for c in coeffs))
    scale /= content
    if den and den[-1] < 0:
        scale = -scale
    return pscale(num, scale), pscale(den, scale)


@dataclass(frozen=True)
class ConicModel:
    """w^2 = A + B s^2 with a rational base point (s0, w0)."""

    A: Rat
    B: Rat
    s0: Rat
    w0: Rat

    def __post_init__(self):
        if self.w0 * self.w0 != self.A + self.B * self.s0 * self.s0:
            raise ValueError("base point is not on the conic")


@dataclass(frozen=True)
class FamilyMap:
    name: str
    params: ParamTriple
    components: tuple[tuple[Poly, Poly], ...]
    source_t: tuple[Poly, Poly]
    source_v: tuple[Poly, Poly]

    def as_strings(self) -> dict[str, str]:
        return {
            name: f"({pformat(num)}) / ({pformat(den)})"
            for name, (num, den) in zip(COMPONENTS, self.components)
        }


def singular_to_conic(C: QuarticCurve, height_bound: int = 20) -> ConicModel:
    if C.f0 != 0:
        raise NotSingular(f"constant term {C.f0} is nonzero")
    A, B = C.f4, C.f2
    for h in range(1, height_bound + 1):
        for s in rationals_of_height(h):
            w = rat_sqrt(A + B * s * s)
            if w is not None:
                return ConicModel(A, B, s, w)
    raise ValueError(f"no rational point on w^2 = {A} + {B} s^2 up to height {height_bound}")


def parametrize(conic: ConicModel, p: ParamTriple, name: str = "") -> FamilyMap:
    """Closed forms in k for the point cut out by w = w0 + k (s - s0)."""
    B, s0, w0 = conic.B, conic.s0, conic.w0
    # Second intersection: s = (s0 k^2 - 2 w0 k + B s0) / (k^2 - B),
    #                      w = (-w0 k^2 + 2 B s0 k - B w0) / (k^2 - B).
    D: Poly = _trim((-B, 0, 1))
    s_num: Poly = _trim((B * s0, -2 * w0, s0))
    w_num: Poly = _trim((-B * w0, 2 * B * s0, -w0))
    # t = 1/s = D / s_num;  v = w t^2 = w_num D / s_num^2.
    t_pair = _normalize(D, s_num)
    v_pair = _normalize(pmul(w_num, D), pmul(s_num, s_num))
    s_sq = pmul(s_num, s_num)
    tD = pmul(D, s_num)  # t over the common denominator s_num^2
    vD = pmul(w_num, D)
    comps = []
    for coeff_t, lin in ((1, p.x1), (1, -p.x1), (p.alpha, 0)):
        num = padd(pscale(D, coeff_t), pscale(s_num, lin))
        comps.append(_normalize(num, s_num))
    comps.append(_normalize(padd(tD, vD), s_sq))
    comps.append(_normalize(padd(tD, pscale(vD, -1)), s_sq))
    comps.append(_normalize(pscale(D, p.beta), s_num))
    return FamilyMap(name, p, tuple(comps), t_pair, v_pair)


def family_eval(f: FamilyMap, k: Rat) -> Solution | None:
    """Evaluate the family at k; None where a denominator vanishes."""
    k = Fraction(k)
    pairs = list(f.components) + [f.source_t, f.source_v]
    if any(peval(den, k) == 0 for _, den in pairs):
        return None
    vals = [peval(num, k) / peval(den, k) for num, den in f.components]
    t = peval(f.source_t[0], k) / peval(f.source_t[1], k)
    v = peval(f.source_v[0], k) / peval(f.source_v[1], k)
    s = Solution(*vals, params=f.params, source=QuarticPoint(t, v))
    if not s.holds():
        raise IdentityViolation(f"family {f.name!r} fails the identity at k = {k}")
    return s


def family_positive_range(f: FamilyMap, k: Rat) -> bool:
    """True iff every structurally nonzero component is positive at k."""
    s = family_eval(f, k)
    if s is None:
        raise ValueError(f"family {f.name!r} is undefined at k = {k}")
    return all(val > 0 for (num, _), val in zip(f.components, s.components) if num)


FAMILY_PARAMS = {
    "sec51": ParamTriple(0, 1, 1),
    "sec53": ParamTriple(0, 0, 0),
}


def get_family(name: str) -> FamilyMap:
    try:
        p = FAMILY_PARAMS[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILY_PARAMS))}") from None
    return parametrize(singular_to_conic(quartic_from_params(p)), p, name)
