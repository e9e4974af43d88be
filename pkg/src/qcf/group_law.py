"""Chord-tangent composition law on long Weierstrass curves over Q."""

from __future__ import annotations

from collections.abc import Sequence

from .curves import INFINITY, ECPoint, WeierstrassCurve, is_on_ec
from .errors import CoordinateTooLarge, LengthMismatch, NotOnCurve
from .rational import max_bits as _bit_length

Combo = tuple[int, ...]


def _require_on(E: WeierstrassCurve, *points: ECPoint) -> None:
    for P in points:
        if not is_on_ec(E, P):
            raise NotOnCurve(f"{P!r} is not on {E.ainvs}")


def _neg(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    if P.is_infinity:
        return P
    return ECPoint(P.x, -P.y - E.a1 * P.x - E.a3)


def _add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, _ = E.ainvs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        denom = 2 * y1 + a1 * x1 + a3
        # Q = -P, including the 2-torsion case P = -P.
        if y1 + y2 + a1 * x2 + a3 == 0:
            return INFINITY
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denom
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam * (x3 - x1) + y1) - a1 * x3 - a3
    return ECPoint(x3, y3)


def _smul(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        n, P = -n, _neg(E, P)
    result = INFINITY
    addend = P
    while n:
        if n & 1:
            result = _add(E, result, addend)
        n >>= 1
        if n:
            addend = _add(E, addend, addend)
    return result


def ec_neg(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    _require_on(E, P)
    return _neg(E, P)


def ec_add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    _require_on(E, P, Q)
    return _add(E, P, Q)


def ec_smul(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    """n*P by double-and-add on |n|."""
    _require_on(E, P)
    return _smul(E, int(n), P)


def _check_bits(P: ECPoint, cap: int | None) -> None:
    if cap is None or P.is_infinity:
        return
    bits = max(_bit_length(P.x), _bit_length(P.y))
    if bits > cap:
        raise CoordinateTooLarge(f"coordinate of {bits} bits exceeds cap {cap}")


def ec_lincomb(
    E: WeierstrassCurve,
    combo: Sequence[int],
    gens: Sequence[ECPoint],
    max_bits: int | None = None,
) -> ECPoint:
    """Sum of n_i * P_i.

    With ``max_bits`` set, CoordinateTooLarge is raised as soon as any
    intermediate coordinate outgrows the cap.
    """
    if len(combo) != len(gens):
        raise LengthMismatch(f"{len(combo)} coefficients for {len(gens)} generators")
    _require_on(E, *gens)
    total = INFINITY
    for n, P in zip(combo, gens):
        term = _smul(E, int(n), P)
        _check_bits(term, max_bits)
        total = _add(E, total, term)
        _check_bits(total, max_bits)
    return total


class MultipleTable:
    """Cached multiples n*P for |n| <= bound, for repeated lattice sums."""

    def __init__(self, E: WeierstrassCurve, P: ECPoint, bound: int):
        _require_on(E, P)
        self.E = E
        pos = [INFINITY, P]
        for _ in range(2, bound + 1):
            pos.append(_add(E, pos[-1], P))
        self._pos = pos

    def __getitem__(self, n: int) -> ECPoint:
        if n >= 0:
            return self._pos[n]
        return _neg(self.E, self._pos[-n])


def lincomb_from_tables(
    E: WeierstrassCurve,
    combo: Sequence[int],
    tables: Sequence[MultipleTable],
    max_bits: int | None = None,
) -> ECPoint:
    if len(combo) != len(tables):
        raise LengthMismatch(f"{len(combo)} coefficients for {len(tables)} generators")
    total = INFINITY
    for n, table in zip(combo, tables):
        total = _add(E, total, table[n])
        _check_bits(total, max_bits)
    return total

