"""Exact verification and classification of candidate sextuples."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .solver import identity_sides


class EquationClass(str, enum.Enum):
    FULL = "full"  # X1^5+X2^5+X3^5 = Y1^3+Y2^3+Y3^3
    X3_ZERO = "x3_zero"  # X1^5+X2^5 = Y1^3+Y2^3+Y3^3
    Y3_ZERO = "y3_zero"  # X1^5+X2^5+X3^5 = Y1^3+Y2^3
    BOTH_ZERO = "both_zero"  # X1^5+X2^5 = Y1^3+Y2^3
    DEGENERATE_OTHER = "degenerate_other"


_CLASS_BY_ZEROS = {
    (0, 0): EquationClass.FULL,
    (1, 0): EquationClass.X3_ZERO,
    (0, 1): EquationClass.Y3_ZERO,
    (1, 1): EquationClass.BOTH_ZERO,
}


@dataclass(frozen=True)
class VerifyReport:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    equation_class: EquationClass
    positive: bool
    integral: bool

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs


def classify(xs: Sequence, ys: Sequence) -> EquationClass:
    """Classify by how many X's and how many Y's vanish.

    Counting zeros (rather than looking at the third slot) keeps the result
    invariant under permutations inside each triple.
    """
    zx = sum(1 for x in xs if x == 0)
    zy = sum(1 for y in ys if y == 0)
    return _CLASS_BY_ZEROS.get((zx, zy), EquationClass.DEGENERATE_OTHER)


def verify_solution(X1, X2, X3, Y1, Y2, Y3) -> VerifyReport:
    """``positive`` means every component not vanished by the class is > 0."""
    xs = tuple(Fraction(v) for v in (X1, X2, X3))
    ys = tuple(Fraction(v) for v in (Y1, Y2, Y3))
    lhs, rhs = identity_sides(xs, ys)
    cls = classify(xs, ys)
    nonzero = [c for c in xs + ys if c != 0]
    positive = cls is not EquationClass.DEGENERATE_OTHER and all(c > 0 for c in nonzero)
    integral = all(c.denominator == 1 for c in xs + ys)
    return VerifyReport(lhs == rhs, lhs, rhs, cls, positive, integral)
