"""Positivity criteria for solutions built from quartic points.

A point (t, v) gives a positive solution exactly when alpha, beta > 0,
0 <= F(t) < t^2 and t > |x1|.  A parameter triple can only admit such points
when the quadratic a s^2 + b s + c, with

    a = (2 + alpha^5)/6,  b = (20 x1^2 - 8 - beta^3)/6,  c = 5 x1^4 / 3,

has b < 0 < b^2 - 4ac.  (a s^2 + b s + c is F(t) - t^2 rewritten in s = t^2.)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import ParamTriple, QuarticCurve, QuarticPoint, is_on_quartic, quartic_eval, quartic_from_params
from .errors import NotOnCurve, UnsupportedParameterRegion


class Mode(str, enum.Enum):
    STRICT = "strict"
    ALLOW_ZERO = "allow-zero"


@dataclass(frozen=True)
class PositivityCert:
    a: Fraction
    b: Fraction
    c: Fraction
    disc: Fraction
    passes: bool


@dataclass(frozen=True)
class SearchWindow:
    """Float bounds of the interval lo <= t <= hi where F(t) >= 0 > F(t) - t^2.

    Only a guide for where to look.  Membership is always decided exactly.
    """

    lo: float
    hi: float
    curve: QuarticCurve

    def defining_polys(self) -> tuple[QuarticCurve, QuarticCurve]:
        """F(t) and F(t) - t^2, whose larger positive roots are lo and hi."""
        C = self.curve
        return C, QuarticCurve(C.f4, C.f2 - 1, C.f0)

    def contains(self, t: float, margin: float = 0.0) -> bool:
        return self.lo + margin < t < self.hi - margin


def abc_from_params(p: ParamTriple) -> PositivityCert:
    x1, alpha, beta = p
    a = (2 + alpha**5) / Fraction(6)
    b = (20 * x1**2 - 8 - beta**3) / Fraction(6)
    c = Fraction(5, 3) * x1**4
    disc = b * b - 4 * a * c
    return PositivityCert(a, b, c, disc, disc > 0 and b < 0)


def prop2_check(p: ParamTriple) -> bool:
    """True iff some real t has F(t) < t^2.  Requires a > 0."""
    cert = abc_from_params(p)
    if cert.a <= 0:
        raise UnsupportedParameterRegion(f"(2 + alpha^5)/6 = {cert.a} is not positive")
    return cert.passes


def prop1_check(p: ParamTriple, pt: QuarticPoint, mode: Mode | str = Mode.STRICT) -> bool:
    """Exact test that ``pt`` yields a positive solution.

    In ``allow-zero`` mode alpha and beta may vanish; the solution is then
    positive in its nonzero components.
    """
    mode = Mode(mode)
    C = quartic_from_params(p)
    pt = pt.to_original()
    if not is_on_quartic(C, pt):
        raise NotOnCurve(f"({pt.t}, {pt.v}) is not on the quartic for {p}")
    if mode is Mode.STRICT:
        if not (p.alpha > 0 and p.beta > 0):
            return False
    elif not (p.alpha >= 0 and p.beta >= 0):
        return False
    t = pt.t
    Ft = quartic_eval(C, t)
    # t > |x1| also forces t > 0 when x1 = 0.
    return 0 <= Ft < t * t and t > abs(p.x1)


def _roots_in_s(a: Fraction, b: Fraction, c: Fraction) -> tuple[float, float] | None:
    """Real roots (small, large) of a s^2 + b s + c, or None."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    sq = math.sqrt(disc)
    af, bf, cf = float(a), float(b), float(c)
    # Stable quadratic formula: compute the larger-magnitude root first.
    big = (-bf - math.copysign(sq, bf)) / (2 * af) if bf != 0 else sq / (2 * af)
    small = cf / (af * big) if big != 0 else -big
    return (min(small, big), max(small, big))


def search_window(p: ParamTriple) -> SearchWindow | None:
    """Approximate interval [a1, a2] of t-values whose points lie in C0.

    a1 is the larger root of F(t) = 0 and a2 the larger root of F(t) = t^2.
    When F has no real root, a1 falls back to the smaller root of
    F(t) = t^2 (the whole F(t) < t^2 band is then admissible).
    """
    if not prop2_check(p):
        return None
    C = quartic_from_params(p)
    tilde = _roots_in_s(C.f4, C.f2 - 1, C.f0)
    if tilde is None or tilde[1] <= 0:
        return None
    hi = math.sqrt(tilde[1])
    roots = _roots_in_s(C.f4, C.f2, C.f0)
    if roots is not None and roots[1] >= 0:
        lo = math.sqrt(roots[1])
    else:
        lo = math.sqrt(max(tilde[0], 0.0))
    if not lo < hi:
        return None
    return SearchWindow(lo, hi, C)
