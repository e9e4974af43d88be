"""Search for positive solutions through the Weierstrass model.

Pipeline: basepoint on C -> shifted quartic -> E; enumerate small integer
combinations of the supplied generators on E, pull each back to C, keep the
points passing the positivity test, and build the sextuple

    X1 = t + x1, X2 = t - x1, X3 = alpha t,  Y1 = t + v, Y2 = t - v, Y3 = beta t.
"""

from __future__ import annotations

import itertools
import logging
import os
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .birational import BirationalData, e_to_c, quartic_to_weierstrass, shift_to_basepoint
from .curves import (
    ECPoint,
    ParamTriple,
    QuarticCurve,
    QuarticPoint,
    is_on_ec,
    is_on_quartic,
    quartic_eval,
    quartic_from_params,
)
from .errors import CoordinateTooLarge, IdentityViolation, InvalidPreset, NotOnCurve
from .group_law import Combo, MultipleTable, lincomb_from_tables
from .positivity import Mode, prop1_check
from .rational import Rat, height, rat_sqrt

log = logging.getLogger(__name__)

DEFAULT_MAX_BITS = 10**6
FACTOR_LIMIT = 2**64


def default_max_bits() -> int:
    env = os.environ.get("QCF_MAX_BITS")
    return int(env) if env else DEFAULT_MAX_BITS


def identity_sides(xs: Sequence[Rat], ys: Sequence[Rat]) -> tuple[Rat, Rat]:
    return sum(Fraction(x) ** 5 for x in xs), sum(Fraction(y) ** 3 for y in ys)


@dataclass(frozen=True)
class Solution:
    X1: Rat
    X2: Rat
    X3: Rat
    Y1: Rat
    Y2: Rat
    Y3: Rat
    params: ParamTriple
    source: QuarticPoint
    combo: Combo | None = None

    @property
    def xs(self) -> tuple[Rat, Rat, Rat]:
        return (self.X1, self.X2, self.X3)

    @property
    def ys(self) -> tuple[Rat, Rat, Rat]:
        return (self.Y1, self.Y2, self.Y3)

    @property
    def components(self) -> tuple[Rat, ...]:
        return self.xs + self.ys

    def holds(self) -> bool:
        lhs, rhs = identity_sides(self.xs, self.ys)
        return lhs == rhs

    def canonical_key(self) -> tuple:
        return (tuple(sorted(self.xs)), tuple(sorted(self.ys)))


@dataclass(frozen=True)
class IntegerSolution:
    X1: int
    X2: int
    X3: int
    Y1: int
    Y2: int
    Y3: int
    multiplier: int
    minimal: bool

    @property
    def components(self) -> tuple[int, ...]:
        return (self.X1, self.X2, self.X3, self.Y1, self.Y2, self.Y3)

    def holds(self) -> bool:
        c = self.components
        return sum(x**5 for x in c[:3]) == sum(y**3 for y in c[3:])


@dataclass(frozen=True)
class Preset:
    name: str
    params: ParamTriple
    basepoint: QuarticPoint
    generators: tuple[ECPoint, ...]
    expected: dict | None = None
    description: str = ""

    @property
    def quartic(self) -> QuarticCurve:
        return quartic_from_params(self.params)

    def birational(self) -> BirationalData:
        return quartic_to_weierstrass(shift_to_basepoint(self.quartic, self.basepoint))

    def validate(self) -> BirationalData:
        if not is_on_quartic(self.quartic, self.basepoint):
            raise InvalidPreset(f"{self.name}: basepoint is not on the quartic")
        try:
            data = self.birational()
        except (NotOnCurve, ValueError) as exc:
            raise InvalidPreset(f"{self.name}: {exc}") from exc
        for P in self.generators:
            if not is_on_ec(data.dst, P):
                raise InvalidPreset(f"{self.name}: generator {P!r} is not on E")
        return data


def build_solution(p: ParamTriple, pt: QuarticPoint, combo: Combo | None = None) -> Solution:
    pt = pt.to_original()
    if not is_on_quartic(quartic_from_params(p), pt):
        raise NotOnCurve(f"({pt.t}, {pt.v}) is not on the quartic for {p}")
    t, v = pt.t, pt.v
    s = Solution(
        X1=t + p.x1,
        X2=t - p.x1,
        X3=p.alpha * t,
        Y1=t + v,
        Y2=t - v,
        Y3=p.beta * t,
        params=p,
        source=pt,
        combo=tuple(combo) if combo is not None else None,
    )
    if not s.holds():
        raise IdentityViolation(f"identity fails for {p} at ({t}, {v})")
    return s


def rationals_of_height(h: int) -> Iterator[Fraction]:
    """Non-negative t = p/q of height exactly h, ordered by (q, p)."""
    if h == 1:
        yield Fraction(0)
    for q in range(1, h + 1):
        ps = [h] if q < h else range(1, h + 1)
        for p in ps:
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def find_rational_point(
    C: QuarticCurve, height_bound: int, require_nonzero_v: bool = False
) -> QuarticPoint | None:
    """First point with t = p/q, max(|p|, q) <= height_bound.

    Evenness of F means only t >= 0 is scanned; the returned point has
    t >= 0 and v >= 0, and (-t, v), (t, -v) are on C as well.  Points with
    v = 0 cannot serve as a basepoint and can be skipped.
    """
    for h in range(1, height_bound + 1):
        for t in rationals_of_height(h):
            v = rat_sqrt(quartic_eval(C, t))
            if v is not None and not (require_nonzero_v and v == 0):
                return QuarticPoint(t, v)
    return None


def iter_combos(k: int, bound: int) -> Iterator[Combo]:
    """Integer vectors of length k with 0 < max|n_i| <= bound.

    Ordered by max-norm shell, lexicographic inside a shell.
    """
    for shell in range(1, bound + 1):
        yield from shell_combos(k, shell)


def shell_combos(k: int, shell: int) -> Iterator[Combo]:
    for combo in itertools.product(range(-shell, shell + 1), repeat=k):
        if max(abs(n) for n in combo) == shell:
            yield combo


def _evaluate_shell(
    data: BirationalData,
    params: ParamTriple,
    generators: Sequence[ECPoint],
    shell: int,
    mode: Mode,
    max_bits: int | None,
) -> list[Solution]:
    E = data.dst
    tables = [MultipleTable(E, P, shell) for P in generators]
    found = []
    for combo in shell_combos(len(generators), shell):
        try:
            P = lincomb_from_tables(E, combo, tables, max_bits=max_bits)
        except CoordinateTooLarge:
            log.info("combo %s skipped: coordinates exceed %s bits", combo, max_bits)
            continue
        pt = e_to_c(data, P)
        if pt is None:
            continue
        if prop1_check(params, pt, mode):
            found.append(build_solution(params, pt, combo))
    return found


def search(
    preset: Preset,
    bound: int,
    mode: Mode | str = Mode.STRICT,
    max_bits: int | None = None,
    jobs: int = 1,
) -> list[Solution]:
    """Positive solutions from generator combinations of max-norm <= bound."""
    mode = Mode(mode)
    data = preset.validate()
    if max_bits is None:
        max_bits = default_max_bits()
    shells = range(1, bound + 1)
    args = (data, preset.params, preset.generators)
    if jobs > 1 and bound > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_evaluate_shell, *args, s, mode, max_bits) for s in shells]
            per_shell = [f.result() for f in futures]
    else:
        per_shell = [_evaluate_shell(*args, s, mode, max_bits) for s in shells]
    return dedupe(itertools.chain.from_iterable(per_shell))


def _source_height(s: Solution) -> tuple[int, int]:
    return (height(s.source.t), height(s.source.v))


def dedupe(solutions: Iterable[Solution]) -> list[Solution]:
    """Drop repeats by sorted-triples key, then order stably by source height."""
    seen = set()
    unique = []
    for s in solutions:
        key = s.canonical_key()
        if key in seen:
            continue
        seen.add(key)
        unique.append(s)
    return sorted(unique, key=_source_height)


def _valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def to_integer_solution(s: Solution, minimize: bool = False) -> IntegerSolution:
    """Clear denominators via (X, Y) -> (m^3 X, m^5 Y).

    Without ``minimize``, m is the lcm of all denominators.  With it, m is the
    smallest multiplier for which every component becomes integral; this
    needs the factorisation of the lcm and is only tried below 2^64.
    """
    xs, ys = s.xs, s.ys
    den = lcm(*(Fraction(c).denominator for c in xs + ys))
    m, minimal = den, False
    if minimize and den < FACTOR_LIMIT:
        from sympy import factorint

        m = 1
        for p in factorint(den):
            ex = max(_valuation(Fraction(x).denominator, p) for x in xs)
            ey = max(_valuation(Fraction(y).denominator, p) for y in ys)
            m *= p ** max(_ceil_div(ex, 3), _ceil_div(ey, 5))
        minimal = True
    X = [m**3 * Fraction(x) for x in xs]
    Y = [m**5 * Fraction(y) for y in ys]
    assert all(c.denominator == 1 for c in X + Y)
    result = IntegerSolution(*(int(c) for c in X + Y), multiplier=m, minimal=minimal)
    if not result.holds():
        raise IdentityViolation("scaled solution fails the identity")
    return result
