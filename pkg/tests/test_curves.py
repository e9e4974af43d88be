from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given

from qcf.curves import (
    INFINITY,
    ECPoint,
    ParamTriple,
    QuarticCurve,
    QuarticPoint,
    WeierstrassCurve,
    ec_discriminant,
    is_on_ec,
    is_on_quartic,
    points_at_x,
    quartic_eval,
    quartic_from_params,
)
from qcf.errors import FrameMismatch, SingularCurve
from qcf.presets import SEC3, SEC4, SEC52

from conftest import rationals

SEC3_C = quartic_from_params(ParamTriple(2, 1, 16))
SEC4_C = quartic_from_params(ParamTriple(10, 0, 18))


@pytest.mark.parametrize("params, coeffs", [
    ((2, 1, 16), (Q(1, 2), Q(-2009, 3), Q(80, 3))),
    ((10, 0, 18), (Q(1, 3), Q(-639), Q(50000, 3))),
    ((Q(1, 2), 0, 0), (Q(1, 3), Q(1, 2), Q(5, 48))),
    ((0, 1, 1), (Q(1, 2), Q(-1, 2), Q(0))),
])
def test_quartic_from_params(params, coeffs):
    C = quartic_from_params(ParamTriple(*params))
    assert (C.f4, C.f2, C.f0) == coeffs


def test_quartic_eval_at_reference_points():
    assert quartic_eval(SEC3_C, 44) == 577600 == 760**2
    assert quartic_eval(SEC4_C, -5) == 900 == 30**2
    assert quartic_eval(SEC3_C, 0) == SEC3_C.f0


def test_is_on_quartic():
    assert is_on_quartic(SEC3_C, QuarticPoint(44, 760))
    assert not is_on_quartic(SEC3_C, QuarticPoint(44, 761))
    assert is_on_quartic(SEC3_C, QuarticPoint(-44, -760))


def test_is_on_quartic_frame_mismatch():
    with pytest.raises(FrameMismatch):
        is_on_quartic(SEC3_C, QuarticPoint(0, 760, t_star=44))


@given(rationals(), rationals(), rationals(), rationals(200, 50))
def test_quartic_is_even(x1, alpha, beta, t):
    C = quartic_from_params(ParamTriple(x1, alpha, beta))
    assert quartic_eval(C, t) == quartic_eval(C, -t)


@given(rationals(), rationals(), rationals(), rationals(200, 50))
def test_sign_symmetries_preserve_membership(x1, alpha, beta, t):
    C = quartic_from_params(ParamTriple(x1, alpha, beta))
    # Manufacture a point by adjusting f0 so that v = t + 1 lies on C.
    v = t + 1
    C = QuarticCurve(C.f4, C.f2, v * v - C.f4 * t**4 - C.f2 * t**2)
    for st in (1, -1):
        for sv in (1, -1):
            assert is_on_quartic(C, QuarticPoint(st * t, sv * v))


@given(rationals(), rationals(), rationals())
def test_quartic_coefficients_denominators(x1, alpha, beta):
    C = quartic_from_params(ParamTriple(x1, alpha, beta))
    assert (6 * x1.denominator**4 * alpha.denominator**5 * beta.denominator**3) % C.f2.denominator == 0
    assert (6 * alpha.denominator**5) % C.f4.denominator == 0
    assert (3 * x1.denominator**4) % C.f0.denominator == 0


def test_is_on_ec():
    E = SEC3.expected["weierstrass"]
    assert is_on_ec(E, SEC3.generators[0])
    assert is_on_ec(E, INFINITY)
    assert not is_on_ec(E, ECPoint(0, 0))


def _disc_oracle(E: WeierstrassCurve):
    """16 * disc of the cubic after completing the square in y."""
    x = sympy.symbols("x")
    a1, a2, a3, a4, a6 = (sympy.Rational(c.numerator, c.denominator) for c in E.ainvs)
    f = x**3 + a2 * x**2 + a4 * x + a6 + ((a1 * x + a3) / 2) ** 2
    d = 16 * sympy.discriminant(sympy.expand(f), x)
    return Q(int(d.p), int(d.q))


def test_discriminant_cusp():
    assert ec_discriminant(WeierstrassCurve(0, 0, 0, 0, 0)) == 0


def test_discriminant_congruent_curve():
    # y^2 = x^3 - x: -16(4(-1)^3 + 27*0) = 64.
    E = WeierstrassCurve(0, 0, 0, -1, 0)
    assert ec_discriminant(E) == 64 == _disc_oracle(E)


@pytest.mark.parametrize("preset", [SEC3, SEC4, SEC52], ids=lambda p: p.name)
def test_reference_curves_nonsingular(preset):
    E = preset.expected["weierstrass"]
    d = ec_discriminant(E)
    assert d != 0
    assert d == _disc_oracle(E)


@given(rationals(20, 5), rationals(20, 5), rationals(20, 5), rationals(20, 5), rationals(20, 5))
def test_discriminant_matches_oracle(a1, a2, a3, a4, a6):
    E = WeierstrassCurve(a1, a2, a3, a4, a6)
    assert ec_discriminant(E) == _disc_oracle(E)


def test_singular_constructions():
    # Node y^2 = x^2 (x + 1) and cusp shifted by a1, a3 terms.
    assert ec_discriminant(WeierstrassCurve(0, 1, 0, 0, 0)) == 0
    with pytest.raises(SingularCurve):
        WeierstrassCurve.elliptic(0, 1, 0, 0, 0)
    assert WeierstrassCurve.elliptic(0, 0, 0, -1, 0).is_nonsingular


def test_points_at_x_sorted_and_on_curve():
    E = SEC4.expected["weierstrass"]
    pts = points_at_x(E, SEC4.expected["x0"])
    assert len(pts) == 2 and pts[0].y < pts[1].y
    assert all(is_on_ec(E, P) for P in pts)
    assert points_at_x(WeierstrassCurve(0, 0, 0, 0, 2), 0) == []


def test_ecpoint_needs_both_coordinates():
    with pytest.raises(ValueError):
        ECPoint(1, None)
