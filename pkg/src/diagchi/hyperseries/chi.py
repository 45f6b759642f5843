"""Closed-form assembly of the third and fourth diagonal-susceptibility terms.

Both susceptibilities split into three analytic-at-0 pieces combined with
fixed rational weights; every piece has an explicit hypergeometric closed
form, so all series here are exact to their truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from ..exactcore import QQ, Poly, RatFun
from ..exactcore.series import ExactSeries
from ..oreops import load_operator
from .pfq import pfq_series, poly_series, ratfun_series

# weights of the three pieces in the full diagonal term
CHI3_WEIGHTS = (mpq(1, 3), mpq(1, 2), mpq(-1, 6))
CHI4_WEIGHTS = (mpq(1, 8), mpq(1, 24), mpq(-1, 8))


def _rf(num_ints, den_factors):
    num = Poly.from_ints(QQ, num_ints)
    den = Poly.from_ints(QQ, [1])
    for f in den_factors:
        den = den * Poly.from_ints(QQ, f)
    return RatFun(num, den)


def _x_squared(N):
    return ExactSeries(QQ, 0, [QQ.zero(), QQ.zero(), QQ.one()]
                       + [QQ.zero()] * (N - 3)) if N >= 3 else \
        ExactSeries(QQ, 0, [QQ.zero()] * N)


def core_pullback(N):
    """The degree-six rational argument 27x²(1+x)²/(4(x²+x+1)³) as a series."""
    f = _rf([0, 0, 27, 54, 27],
            [[4], [1, 1, 1], [1, 1, 1], [1, 1, 1]])
    return ratfun_series(f, N)


def chi3_piece1(N):
    """1/(1-x)."""
    return ratfun_series(_rf([1], [[1, -1]]), N)


def chi3_piece2(N):
    """Difference of weighted complete-elliptic-type 2F1's in x²."""
    half = N // 2 + 2
    sq = _x_squared(N)
    f_minus = pfq_series([mpq(1, 2), mpq(-1, 2)], [1], half).compose(sq)
    f_plus = pfq_series([mpq(1, 2), mpq(1, 2)], [1], half).compose(sq)
    return (ratfun_series(_rf([1], [[1, -1], [1, -1]]), N) * f_minus
            - ratfun_series(_rf([1], [[1, -1]]), N) * f_plus)


def chi3_piece3(N):
    """Prefactor times 3F2([1/3,2/3,3/2],[1,1]) at the degree-six argument."""
    pref = ratfun_series(_rf([2, 5, 2], [[1, -1], [1, 1, 1]]), N)
    f = pfq_series([mpq(1, 3), mpq(2, 3), mpq(3, 2)], [1, 1], N // 2 + 2)
    return pref * f.compose(core_pullback(N))


def assemble_chi3(N):
    """All three pieces plus the weighted total, as exact series in x."""
    d1 = chi3_piece1(N)
    d2 = chi3_piece2(N)
    d3 = chi3_piece3(N)
    w1, w2, w3 = CHI3_WEIGHTS
    total = d1.scale(w1) + d2.scale(w2) + d3.scale(w3)
    return {"d1": d1, "d2": d2, "d3": d3, "total": total}


def quartic_argument(N):
    """-4t/(1-t)² as a series (valuation 1)."""
    return ratfun_series(_rf([0, -4], [[1, -1], [1, -1]]), N)


def chi4_piece1(N):
    """t/(1-t)."""
    return ratfun_series(_rf([0, 1], [[1, -1]]), N)


def chi4_piece2(N, cross_check=False):
    """Quadratic combination of elliptic-type 2F1's (default), or the
    equivalent single 3F2 form at the quartic argument (cross-check)."""
    if cross_check:
        pref = ratfun_series(
            RatFun(Poly.from_ints(QQ, [0, 0, 9, 9]),
                   Poly.from_ints(QQ, [8]) *
                   Poly.from_ints(QQ, [1, -1]) ** 5), N)
        f = pfq_series([mpq(3, 2), mpq(5, 2), mpq(5, 2)], [3, 3], N)
        return pref * f.compose(quartic_argument(N))
    e_minus = pfq_series([mpq(1, 2), mpq(-1, 2)], [1], N)
    e_plus = pfq_series([mpq(1, 2), mpq(1, 2)], [1], N)
    return (ratfun_series(_rf([1, 1], [[1, -1], [1, -1]]), N) * e_minus * e_minus
            - e_plus * e_plus
            - ratfun_series(_rf([0, 2], [[1, -1]]), N) * e_plus * e_minus)


def chi4_piece3(N):
    """Order-three lift operator applied to 4F3([1/2⁴],[1³]; t²)."""
    lift = load_operator("chi4_part3_lift")
    half = N // 2 + 3
    sq = _x_squared(N + 4)
    f = pfq_series([mpq(1, 2)] * 4, [1, 1, 1], half).compose(sq)
    return lift.apply_to_series(f, cleared=False).truncate(N)


def assemble_chi4(N):
    """All three pieces plus the weighted total, as exact series in t."""
    d1 = chi4_piece1(N)
    d2 = chi4_piece2(N)
    d3 = chi4_piece3(N)
    w1, w2, w3 = CHI4_WEIGHTS
    total = d1.scale(w1) + d2.scale(w2) + d3.scale(w3)
    return {"d1": d1, "d2": d2, "d3": d3, "total": total}


@dataclass
class IntegralityReport:
    ok: bool
    checked: int
    scale: object
    first_violation: int | None = None
    violating_value: object | None = None

    def __bool__(self):
        return self.ok


def integrality_check(s, scale, M):
    """Do the first M coefficients of s(scale·x) all lie in Z?

    Reports the first violating index (exponent in the rescaled variable)
    and its value when the answer is no.
    """
    if M > s.order:
        raise ValueError("series carries %d known terms, asked for %d"
                         % (s.order, M))
    rescaled = s.scale_argument(mpq(scale))
    for k in range(M):
        expo = rescaled.expo + k
        val = mpq(rescaled.coeffs[k])
        if val.denominator != 1:
            return IntegralityReport(False, M, mpq(scale), expo, val)
    return IntegralityReport(True, M, mpq(scale))
