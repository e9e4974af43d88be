"""Exact elliptic-curve pipeline for positive rational solutions of
X1^5 + X2^5 + X3^5 = Y1^3 + Y2^3 + Y3^3 and its degenerate variants.
"""

from .birational import BirationalData, c_to_e, e_to_c, quartic_to_weierstrass, shift_to_basepoint
from .curves import (
    INFINITY,
    ECPoint,
    ParamTriple,
    QuarticCurve,
    QuarticPoint,
    ShiftedQuartic,
    WeierstrassCurve,
    ec_discriminant,
    is_on_ec,
    is_on_quartic,
    points_at_x,
    quartic_eval,
    quartic_from_params,
)
from .families import family_eval, family_positive_range, get_family, parametrize, singular_to_conic
from .group_law import ec_add, ec_lincomb, ec_neg, ec_smul
from .positivity import Mode, abc_from_params, prop1_check, prop2_check, search_window
from .presets import PRESETS, get_preset
from .rational import Rat, format_rat, parse_rat
from .solver import (
    IntegerSolution,
    Preset,
    Solution,
    build_solution,
    dedupe,
    find_rational_point,
    search,
    to_integer_solution,
)
from .verify import EquationClass, VerifyReport, classify, verify_solution

__version__ = "0.1.0"
