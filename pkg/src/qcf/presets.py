"""Built-in worked examples: parameters, basepoints, generators and the
reference values each is expected to reproduce.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .curves import ECPoint, ParamTriple, QuarticPoint, WeierstrassCurve
from .solver import Preset

# (x1, alpha, beta) = (2, 1, 16); E has rank 2, generators P1, P2.
_SEC3_P1 = ECPoint(Q(-1802189, 1521), Q(5513659679, 417430))
_SEC3_P2 = ECPoint(Q(-351379, 363), Q(47356344241, 2276010))
_SEC3_Q = ECPoint(
    Q(304845381192111829037, 58470412871306667),
    Q(-4767546475726965161322288395890039, 4652843756178203561643745770),
)
_SEC3_T0 = QuarticPoint(
    Q(170815619844155909156204, 4664941095250009917983),
    Q(-690740884062625663919872925291699877683029096, 21761675422152362106175457381859866386788289),
)
_SEC3_DEN = 4664941095250009917983
_SEC3_DEN2 = 21761675422152362106175457381859866386788289

SEC3 = Preset(
    name="ib-sec3",
    params=ParamTriple(2, 1, 16),
    basepoint=QuarticPoint(44, 760),
    generators=(_SEC3_P1, _SEC3_P2),
    description="X1^5+X2^5+X3^5 = Y1^3+Y2^3+Y3^3 with (x1, alpha, beta) = (2, 1, 16)",
    expected={
        "quartic": (Q(1, 2), Q(-2009, 3), Q(80, 3)),
        "shifted": (Q(1, 2), Q(88), Q(15415, 3), Q(334312, 3), Q(760)),
        "weierstrass": WeierstrassCurve(
            Q(41789, 285), Q(-76876021, 324900), Q(133760), Q(-1155200), Q(2460032672, 9)
        ),
        "combo": (2, -1),
        "Q": _SEC3_Q,
        "source": _SEC3_T0,
        "solution": (
            Q(180145502034655928992170, _SEC3_DEN),
            Q(161485737653655889320238, _SEC3_DEN),
            Q(170815619844155909156204, _SEC3_DEN),
            Q(106103920658980331397442614601687483092587436, _SEC3_DEN2),
            Q(1487585688784231659237188465185087238458645628, _SEC3_DEN2),
            Q(2733049917506494546499264, _SEC3_DEN),
        ),
        "decimals": (
            "38.61688676", "34.61688676", "36.61688676",
            "4.875723886", "68.35804964", "585.8701882",
        ),
        "window": (36.59635926, 36.62367500),
    },
)

# alpha = 0: X1^5 + X2^5 = Y1^3 + Y2^3 + Y3^3.  Only x0 of Q is recorded;
# of the two y-roots at x0 the smaller pulls back to the reference t0, the
# larger to a different t.
_SEC4_X0 = Q(9233921838917810856046138588468998730, 71226852166762122405616706766475947)
_SEC4_Y0 = Q(
    -1371080316670923192144342222977673425071594409172357194855,
    98775107067560236288252240912941819702449636862192639,
)
_SEC4_DEN = 180965667579279848488380712753242417827
_SEC4_DEN2 = 32748572842414417658282657731373155447687070419319181813277645661864847401929

SEC4 = Preset(
    name="ib-sec4",
    params=ParamTriple(10, 0, 18),
    basepoint=QuarticPoint(-5, 30),
    generators=(ECPoint(_SEC4_X0, _SEC4_Y0),),
    description="X1^5+X2^5 = Y1^3+Y2^3+Y3^3 with (x1, alpha, beta) = (10, 0, 18)",
    expected={
        "quartic": (Q(1, 3), Q(-639), Q(50000, 3)),
        "weierstrass": WeierstrassCurve(Q(1867, 9), Q(-3676525, 324), Q(-400), Q(-1200), Q(367652500, 27)),
        "x0": _SEC4_X0,
        "t0": Q(7869911761727476320751662986237524106650, _SEC4_DEN),
        "solution": (
            Q(9679568437520274805635470113769948284920, _SEC4_DEN),
            Q(6060255085934677835867855858705099928380, _SEC4_DEN),
            Q(0),
            Q(
                2102579397586077496858869804126511993988094601307100986270258503567645177035000,
                _SEC4_DEN2,
            ),
            Q(
                745788273916000738265027095213285105579870143595196644344754733646843241464100,
                _SEC4_DEN2,
            ),
            Q(141658411711094573773529933752275433919700, _SEC4_DEN),
        ),
    },
)

# alpha = beta = 0 from the trivial solution 1^5 + 0^5 = 1^3 + 0^3; E has rank 1.
_SEC52_Q = ECPoint(
    Q(10017045137918654785, 165672066306928896),
    Q(29224609136538294659462738431, 67433225470590933809197056),
)
_SEC52_DEN = 2189508002284033493999
_SEC52_DEN2 = 4793945292065819219974333985709279969012001

SEC52 = Preset(
    name="ib-sec52",
    params=ParamTriple(Q(1, 2), 0, 0),
    basepoint=QuarticPoint(Q(1, 2), Q(1, 2)),
    generators=(_SEC52_Q,),
    description="X1^5+X2^5 = Y1^3+Y2^3 with (x1, alpha, beta) = (1/2, 0, 0)",
    expected={
        "quartic": (Q(1, 3), Q(1, 2), Q(5, 48)),
        "shifted": (Q(1, 3), Q(2, 3), Q(1), Q(2, 3), Q(1, 2)),
        "weierstrass": WeierstrassCurve(Q(4, 3), Q(5, 9), Q(2, 3), Q(-1, 3), Q(-5, 27)),
        "Q": _SEC52_Q,
        "source": QuarticPoint(
            Q(2806052350871126431439, 4379016004568066987998),
            Q(5797926783162005502807971914786692611082209, 9587890584131638439948667971418559938024002),
        ),
        "solution": (
            Q(2497780176577579962719, _SEC52_DEN),
            Q(308272174293546468720, _SEC52_DEN),
            Q(0),
            Q(5970900430111130674379700360675596051258385, _SEC52_DEN2),
            Q(172973646949125171571728445888903440176176, _SEC52_DEN2),
            Q(0),
        ),
    },
)

PRESETS: dict[str, Preset] = {p.name: p for p in (SEC3, SEC4, SEC52)}

# Two known integer solutions found by an earlier, unrefined search.
INTRO_SOLUTIONS = (
    (8, 6, 14, -110, 124, 14),
    (128122, -79524, 48598, 359227580, -251874598, 107352982),
)


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}") from None
