"""Quartic to Weierstrass reduction.

A quartic v^2 = a u^4 + b u^3 + c u^2 + d u + q^2 with q != 0 is birational
over Q to

    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6,
    a1 = d/q, a2 = c - d^2/(4q^2), a3 = 2qb, a4 = -4q^2 a, a6 = a2*a4,

with (u, v) = (0, q) sent to the point at infinity.  The forward map is

    x = (2q(v + q) + d u) / u^2
    y = (4q^2(v + q) + 2q u (d + c u) - d^2 u^2 / (2q)) / u^3

and the inverse is

    u = (2q(x + c) - d^2/(2q)) / y,    v = -q + u (u x - d) / (2q).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .curves import (
    INFINITY,
    ECPoint,
    QuarticCurve,
    QuarticPoint,
    ShiftedQuartic,
    WeierstrassCurve,
    ec_discriminant,
    is_on_ec,
    is_on_quartic,
)
from .errors import NotOnCurve, ZeroBasepointOrdinate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BirationalData:
    src: ShiftedQuartic
    dst: WeierstrassCurve

    @property
    def is_elliptic(self) -> bool:
        return ec_discriminant(self.dst) != 0


def shift_to_basepoint(C: QuarticCurve, P: QuarticPoint) -> ShiftedQuartic:
    """Taylor-expand F at t* = P.t so the constant term becomes P.v^2."""
    P = P.to_original()
    if not is_on_quartic(C, P):
        raise NotOnCurve(f"basepoint ({P.t}, {P.v}) is not on the quartic")
    if P.v == 0:
        raise ZeroBasepointOrdinate("basepoint has v = 0; the reduction needs q != 0")
    ts = P.t
    f4, f2 = C.f4, C.f2
    return ShiftedQuartic(
        a=f4,
        b=4 * f4 * ts,
        c=6 * f4 * ts**2 + f2,
        d=4 * f4 * ts**3 + 2 * f2 * ts,
        q=abs(P.v),
        t_star=ts,
    )


def weierstrass_coefficients(S: ShiftedQuartic) -> WeierstrassCurve:
    a, b, c, d, q = S.a, S.b, S.c, S.d, S.q
    q2 = q * q
    a2 = c - d * d / (4 * q2)
    a4 = -4 * q2 * a
    return WeierstrassCurve(d / q, a2, 2 * q * b, a4, a * d * d - 4 * a * c * q2)


def quartic_to_weierstrass(S: ShiftedQuartic) -> BirationalData:
    data = BirationalData(S, weierstrass_coefficients(S))
    if not data.is_elliptic:
        log.warning("reduced cubic %s is singular", data.dst.ainvs)
    return data


def _as_data(obj: BirationalData | ShiftedQuartic) -> BirationalData:
    if isinstance(obj, ShiftedQuartic):
        return BirationalData(obj, weierstrass_coefficients(obj))
    return obj


def c_to_e(data: BirationalData | ShiftedQuartic, P: QuarticPoint) -> ECPoint:
    """Image of a quartic point on E.  ``P`` may be in either frame."""
    data = _as_data(data)
    S, E = data.src, data.dst
    P = P.to_shifted(S.t_star)
    if not is_on_quartic(S, P):
        raise NotOnCurve(f"({P.t}, {P.v}) is not on the shifted quartic")
    u, v = P.t, P.v
    if u == 0:
        if v == S.q:
            return INFINITY
        # (0, -q) is the limit of the chart along C.  Since a6 = a2*a4 the
        # cubic's right side is (x + a2)(x^2 + a4), so x = -a2 carries the
        # roots y = 0 and y = -(a1 x + a3); the limit is the latter.
        x = -E.a2
        return ECPoint(x, -(E.a1 * x + E.a3))
    c, d, q = S.c, S.d, S.q
    x = (2 * q * (v + q) + d * u) / (u * u)
    y = (4 * q * q * (v + q) + 2 * q * u * (d + c * u) - d * d * u * u / (2 * q)) / u**3
    return ECPoint(x, y)


def e_to_c(data: BirationalData | ShiftedQuartic, P: ECPoint) -> QuarticPoint | None:
    """Preimage on the original quartic, or None where the map is undefined."""
    data = _as_data(data)
    S, E = data.src, data.dst
    if P.is_infinity or P.y == 0:
        return None
    if not is_on_ec(E, P):
        raise NotOnCurve(f"{P!r} is not on E")
    c, d, q = S.c, S.d, S.q
    x, y = P.x, P.y
    u = (2 * q * (x + c) - d * d / (2 * q)) / y
    v = -q + u * (u * x - d) / (2 * q)
    shifted = QuarticPoint(u, v, S.t_star)
    if not is_on_quartic(S, shifted):
        return None
    return shifted.to_original()
