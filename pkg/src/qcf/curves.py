"""Curve models: the biquadratic quartic v^2 = F(t), its basepoint-shifted
form, and long Weierstrass cubics with their rational points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FrameMismatch, SingularCurve
from .rational import Rat, format_rat, rat_sqrt


@dataclass(frozen=True)
class ParamTriple:
    x1: Rat
    alpha: Rat
    beta: Rat

    def __post_init__(self):
        for name in ("x1", "alpha", "beta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __iter__(self):
        return iter((self.x1, self.alpha, self.beta))

    def __str__(self):
        return ",".join(format_rat(v) for v in self)


@dataclass(frozen=True)
class QuarticCurve:
    """v^2 = f4 t^4 + f2 t^2 + f0."""

    f4: Rat
    f2: Rat
    f0: Rat

    def __call__(self, t: Rat) -> Rat:
        return quartic_eval(self, t)

    @property
    def is_singular(self) -> bool:
        # f0 = 0 gives a node/cusp at the origin; f4 = 0 or a repeated root
        # in t^2 makes the model degenerate as well.
        return self.f0 == 0 or self.f4 == 0 or self.f2 * self.f2 == 4 * self.f4 * self.f0


@dataclass(frozen=True)
class QuarticPoint:
    """A point (t, v).

    ``t_star`` is None for the original frame; otherwise ``t`` is the shifted
    coordinate u = t - t_star.
    """

    t: Rat
    v: Rat
    t_star: Rat | None = None

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.t_star is not None:
            object.__setattr__(self, "t_star", Fraction(self.t_star))

    @property
    def shifted(self) -> bool:
        return self.t_star is not None

    def to_original(self) -> QuarticPoint:
        if self.t_star is None:
            return self
        return QuarticPoint(self.t + self.t_star, self.v)

    def to_shifted(self, t_star: Rat) -> QuarticPoint:
        orig = self.to_original()
        return QuarticPoint(orig.t - t_star, orig.v, t_star)


@dataclass(frozen=True)
class ShiftedQuartic:
    """v^2 = a u^4 + b u^3 + c u^2 + d u + q^2 with u = t - t_star."""

    a: Rat
    b: Rat
    c: Rat
    d: Rat
    q: Rat
    t_star: Rat

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("q must be nonzero")

    def __call__(self, u: Rat) -> Rat:
        return (((self.a * u + self.b) * u + self.c) * u + self.d) * u + self.q * self.q


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Rat
    a2: Rat
    a3: Rat
    a4: Rat
    a6: Rat

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def elliptic(cls, a1, a2, a3, a4, a6) -> WeierstrassCurve:
        """Build a curve, raising SingularCurve when the discriminant vanishes."""
        E = cls(a1, a2, a3, a4, a6)
        if ec_discriminant(E) == 0:
            raise SingularCurve(f"singular cubic {E.ainvs}")
        return E

    @property
    def ainvs(self) -> tuple[Rat, Rat, Rat, Rat, Rat]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def discriminant(self) -> Rat:
        return ec_discriminant(self)

    @property
    def is_nonsingular(self) -> bool:
        return ec_discriminant(self) != 0


@dataclass(frozen=True)
class ECPoint:
    """Affine point, or the point at infinity when ``x`` and ``y`` are None."""

    x: Rat | None = None
    y: Rat | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates must be given, or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        if self.is_infinity:
            return "ECPoint(Infinity)"
        return f"ECPoint({format_rat(self.x)}, {format_rat(self.y)})"


INFINITY = ECPoint()


def quartic_from_params(p: ParamTriple) -> QuarticCurve:
    x1, alpha, beta = p
    return QuarticCurve(
        f4=(2 + alpha**5) / Fraction(6),
        f2=(20 * x1**2 - 2 - beta**3) / Fraction(6),
        f0=5 * x1**4 / Fraction(3),
    )


def quartic_eval(C: QuarticCurve, t: Rat) -> Rat:
    t2 = Fraction(t) ** 2
    return (C.f4 * t2 + C.f2) * t2 + C.f0


def is_on_quartic(C: QuarticCurve | ShiftedQuartic, P: QuarticPoint) -> bool:
    """Exact membership test.  The point's frame must match the curve's."""
    if isinstance(C, ShiftedQuartic):
        if P.t_star != C.t_star:
            raise FrameMismatch(f"point frame {P.t_star} does not match shift {C.t_star}")
        return P.v * P.v == C(P.t)
    if P.t_star is not None:
        raise FrameMismatch("shifted point tested against an unshifted quartic")
    return P.v * P.v == quartic_eval(C, P.t)


def ec_rhs(E: WeierstrassCurve, x: Rat) -> Rat:
    return ((x + E.a2) * x + E.a4) * x + E.a6


def is_on_ec(E: WeierstrassCurve, P: ECPoint) -> bool:
    if P.is_infinity:
        return True
    x, y = P.x, P.y
    return y * (y + E.a1 * x + E.a3) == ec_rhs(E, x)


def b_invariants(E: WeierstrassCurve) -> tuple[Rat, Rat, Rat, Rat]:
    a1, a2, a3, a4, a6 = E.ainvs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def ec_discriminant(E: WeierstrassCurve) -> Rat:
    b2, b4, b6, b8 = b_invariants(E)
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def points_at_x(E: WeierstrassCurve, x: Rat) -> list[ECPoint]:
    """Rational points of E with the given abscissa, sorted by y ascending."""
    x = Fraction(x)
    lin = E.a1 * x + E.a3
    disc = lin * lin + 4 * ec_rhs(E, x)
    root = rat_sqrt(disc)
    if root is None:
        return []
    ys = sorted({(-lin - root) / 2, (-lin + root) / 2})
    return [ECPoint(x, y) for y in ys]
