"""Exact rationals.

``Rat`` is :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  This module adds the string
format used in JSON I/O and a few integer helpers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(value: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimal and float input is rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise TypeError(f"expected a rational string, got {type(value).__name__}")
    m = _RAT_RE.match(value)
    if not m:
        raise ValueError(f"not an exact rational: {value!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rat(r: Fraction | int) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rat_list(text: str, expected: int | None = None) -> list[Fraction]:
    parts = [p for p in text.split(",")]
    if expected is not None and len(parts) != expected:
        raise ValueError(f"expected {expected} comma-separated rationals, got {text!r}")
    return [parse_rat(p) for p in parts]


def rat_sqrt(r: Fraction) -> Fraction | None:
    """Non-negative rational square root of ``r``, or None if ``r`` is not a square."""
    r = Fraction(r)
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn != n or sd * sd != d:
        return None
    return Fraction(sn, sd)


def height(r: Fraction) -> int:
    """Naive height max(|p|, q)."""
    return max(abs(r.numerator), r.denominator)


def max_bits(r: Fraction) -> int:
    return max(r.numerator.bit_length(), r.denominator.bit_length())
