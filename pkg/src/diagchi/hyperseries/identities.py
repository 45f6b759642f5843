"""Named hypergeometric identities, each verifiable to a requested order.

Every entry either matches two exact series term-by-term or certifies an
operator relation by exact right division; nothing here is numerical.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from ..exactcore import QQ, Poly, RatFun
from ..oreops import load_operator
from .pfq import (binomial_series, pfq_series, pfq_operator, poly_series,
                  ratfun_series)
from .chi import chi4_piece2


class UnknownIdentity(KeyError):
    pass


@dataclass
class IdentityReport:
    name: str
    ok: bool
    nterms: int
    params: tuple = ()
    detail: str = ""

    def __bool__(self):
        return self.ok


def _poly(ints_list):
    out = Poly.from_ints(QQ, ints_list[0])
    for ints in ints_list[1:]:
        out = out * Poly.from_ints(QQ, ints)
    return out


_CYC = [1, 1, 1]
_XP1 = [1, 1]
_ONEMX = [1, -1]
_TWOXP1 = [1, 2]
_XP2 = [2, 1]

# rational pullback arguments used on the series side
_Q_CORE = RatFun(_poly([[0, 0, 27], _XP1, _XP1]),
                 _poly([[4], _CYC, _CYC, _CYC]))
_Q_A = RatFun(_poly([[0, 27], _XP1]), _poly([_TWOXP1] * 6))
_Q_B = RatFun(_poly([[0, 0, 0, 0, 27], _XP1]), _poly([_XP2] * 6))
_Q_C = RatFun(_poly([[0, -27], _XP1, _XP1, _XP1, _XP1]), _poly([_ONEMX] * 6))
_ILA = RatFun(_poly([[0, -4]]), _poly([_ONEMX, _ONEMX]))
_PAR = RatFun(_poly([[0, 4], _ONEMX]))


def _core_2f1(N):
    return pfq_series([mpq(1, 6), mpq(1, 3)], [1], N)


def _triple_3f2(N):
    return pfq_series([mpq(1, 3), mpq(2, 3), mpq(3, 2)], [1, 1], N)


def _quartic_3f2(N):
    return pfq_series([mpq(3, 2), mpq(5, 2), mpq(5, 2)], [3, 3], N)


def _check_triple_to_quadratic(N):
    q = ratfun_series(_Q_CORE, N)
    lhs = _triple_3f2(N).compose(q)
    f = _core_2f1(N).compose(q)
    g = _core_2f1(N).derivative().scale(mpq(18)).compose(q)
    rhs = f * f + q.scale(mpq(2, 9)) * f * g
    return lhs.eq_known(rhs)


def _check_core_partner(N, partner):
    q = ratfun_series(_Q_CORE, N)
    f = _core_2f1(N)
    root = poly_series(_poly([_CYC]), N).pow_rat(mpq(1, 2))
    if partner == "a":
        lhs = poly_series(_poly([_TWOXP1]), N) * f.compose(q)
        rhs = root * f.compose(ratfun_series(_Q_A, N))
    elif partner == "b":
        lhs = poly_series(_poly([_XP2]), N) * f.compose(q)
        rhs = root.scale(mpq(2)) * f.compose(ratfun_series(_Q_B, N))
    else:
        lhs = poly_series(_poly([_ONEMX]), N) * f.compose(q)
        rhs = root * f.compose(ratfun_series(_Q_C, N))
    return lhs.eq_known(rhs)


def _check_pullback_swap_sextic(N):
    swap = load_operator("pullback_swap_sextic_op")
    f = _triple_3f2(N)
    lhs = (poly_series(_poly([_CYC]), N).pow_int(3)
           * poly_series(_poly([[1, -8, -8]]), N)
           * f.compose(ratfun_series(_Q_A, N)))
    rhs = swap.apply_to_series(f.compose(ratfun_series(_Q_CORE, N)),
                               cleared=False).scale(mpq(-1))
    return lhs.eq_known(rhs)


def _check_whipple_quadratic(N, params):
    a, b, c = (mpq(p) for p in params)
    lhs_f = pfq_series([1 + a - b - c, a / 2, (a + 1) / 2],
                       [1 + a - b, 1 + a - c], N)
    lhs = lhs_f.compose(ratfun_series(_ILA, N))
    rhs = binomial_series(a, N) * pfq_series([a, b, c],
                                             [1 + a - b, 1 + a - c], N)
    return lhs.eq_known(rhs)


def _check_pullback_swap_parabolic(N):
    swap = load_operator("pullback_swap_parabolic_op")
    f = _quartic_3f2(N)
    src = f.compose(ratfun_series(_ILA, N))
    tgt = f.compose(ratfun_series(_PAR, N))
    applied = swap.apply_to_series(src, cleared=True)
    _, den = swap.cleared()
    return applied.eq_known(poly_series(den, N) * tgt)


def _check_pullback_swap_inverse(N):
    # the reciprocal-chart argument is singular at the origin, so this one
    # is certified at the operator level: swap maps solutions of the base
    # chart's annihilator into solutions of the reciprocal chart's.
    swap = load_operator("pullback_swap_inverse_op")
    op = pfq_operator([mpq(3, 2), mpq(5, 2), mpq(5, 2)], [3, 3], var="z")
    base = op.change_variable(_ILA, newvar="t")
    inv_arg = RatFun(_poly([[-4, 4]]), _poly([[0, 0, 1]]))
    recip = op.change_variable(inv_arg, newvar="t")
    _, rem = (recip * swap).right_divide(base)
    return rem.is_zero()


def _check_chi4_part2_two_forms(N):
    return chi4_piece2(N).eq_known(chi4_piece2(N, cross_check=True))


_REGISTRY = {
    "triple_to_quadratic": lambda N, p: _check_triple_to_quadratic(N),
    "core_partner_a": lambda N, p: _check_core_partner(N, "a"),
    "core_partner_b": lambda N, p: _check_core_partner(N, "b"),
    "core_partner_c": lambda N, p: _check_core_partner(N, "c"),
    "pullback_swap_sextic": lambda N, p: _check_pullback_swap_sextic(N),
    "whipple_quadratic": _check_whipple_quadratic,
    "pullback_swap_inverse": lambda N, p: _check_pullback_swap_inverse(N),
    "pullback_swap_parabolic": lambda N, p: _check_pullback_swap_parabolic(N),
    "chi4_part2_two_forms": lambda N, p: _check_chi4_part2_two_forms(N),
}

IDENTITY_NAMES = tuple(sorted(_REGISTRY))

WHIPPLE_DEFAULT = (mpq(1, 2), mpq(1, 2), mpq(1, 2))


def verify_hypergeometric_identity(name, nterms=40, params=None):
    """Check one named identity to `nterms` series terms (or exactly).

    `params` only applies to the parametrized quadratic-argument relation,
    where it is an (alpha, beta, gamma) triple.
    """
    if name not in _REGISTRY:
        raise UnknownIdentity(
            "unknown identity %r; available: %s" % (name, ", ".join(IDENTITY_NAMES)))
    if name == "whipple_quadratic":
        params = tuple(params) if params is not None else WHIPPLE_DEFAULT
        ok = _REGISTRY[name](nterms, params)
        return IdentityReport(name, ok, nterms, params=params)
    if params is not None:
        raise ValueError("identity %r takes no parameters" % name)
    ok = _REGISTRY[name](nterms, None)
    return IdentityReport(name, ok, nterms)


def verify_all_identities(nterms=40):
    out = [verify_hypergeometric_identity(n, nterms) for n in IDENTITY_NAMES]
    for triple in ((mpq(1, 2), mpq(1, 2), mpq(1, 2)),
                   (mpq(1, 3), mpq(1, 4), mpq(1, 5)),
                   (mpq(2, 3), mpq(1, 2), mpq(1, 3))):
        if triple != WHIPPLE_DEFAULT:
            out.append(verify_hypergeometric_identity(
                "whipple_quadratic", nterms, params=triple))
    return out
