"""Generalized hypergeometric series pFq and their annihilating operators.

Everything is exact: series coefficients are rationals produced by the
term-ratio recursion, and operators are built from the Euler operator
theta = z*D so that

    [ theta * prod_j (theta + b_j - 1)  -  z * prod_i (theta + a_i) ]  pFq = 0.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..exactcore import QQ, Poly, RatFun, ExactSeries
from ..exactcore.series import field_from_rat
from ..oreops import DiffOp


class InvalidParameters(ValueError):
    """A lower pFq parameter is a nonpositive integer."""


def _as_rats(params):
    return [mpq(p) for p in params]


def pfq_series(upper, lower, nterms, field=QQ):
    """Series of pFq(upper; lower; z) at z = 0 with `nterms` coefficients.

    Coefficients follow c_0 = 1 and
    c_{n+1} = c_n * prod(a+n) / prod(b+n) / (n+1).
    """
    upper = _as_rats(upper)
    lower = _as_rats(lower)
    for b in lower:
        if b.denominator == 1 and b <= 0:
            raise InvalidParameters("lower parameter %s is a nonpositive integer" % b)
    nterms = int(nterms)
    coeffs = []
    c = mpq(1)
    for n in range(nterms):
        coeffs.append(c)
        num = mpq(1)
        for a in upper:
            num *= a + n
        den = mpq(n + 1)
        for b in lower:
            den *= b + n
        c = c * num / den
    return ExactSeries(QQ, 0, coeffs) if field is QQ else \
        ExactSeries.from_rats(coeffs).map_coeffs(
            lambda q: _rat_into(field, q), new_field=field)


def _rat_into(field, q):
    num = field.from_int(int(q.numerator))
    if q.denominator == 1:
        return num
    return field.div(num, field.from_int(int(q.denominator)))


def pfq_coefficient_recursion_holds(s, upper, lower):
    """Independent re-check of the defining term recursion on a series."""
    upper = _as_rats(upper)
    lower = _as_rats(lower)
    if s.expo != 0 or not s.coeffs or s.coeffs[0] != 1:
        return False
    for n in range(len(s.coeffs) - 1):
        num = mpq(1)
        for a in upper:
            num *= a + n
        den = mpq(n + 1)
        for b in lower:
            den *= b + n
        if s.coeffs[n + 1] * den != s.coeffs[n] * num:
            return False
    return True


def pfq_operator(upper, lower, var="z"):
    """Annihilator of pFq(upper; lower; z), order max(p, q+1)."""
    upper = _as_rats(upper)
    lower = _as_rats(lower)
    F = QQ
    z = RatFun.x(F)
    theta = DiffOp.multiplication(z, var=var) * DiffOp.derivation(F, var)
    one = DiffOp.identity(F, var)
    left = theta
    for b in lower:
        left = left * (theta + one.scale(b - 1))
    right = one
    for a in upper:
        right = right * (theta + one.scale(a))
    return left - DiffOp.multiplication(z, var=var) * right


def poly_series(p, nterms, field=None):
    """A polynomial viewed as a series with `nterms` known coefficients."""
    field = field or p.field
    coeffs = list(p.coeffs) + [field.zero()] * int(nterms)
    return ExactSeries(field, 0, coeffs[: max(int(nterms), 1)])


def ratfun_series(f, nterms):
    """Laurent expansion of a rational function at 0 (num/den by series division)."""
    n = int(nterms)
    vd = 0
    den = f.den
    while den.coeffs and den.field.is_zero(den.coeffs[0]):
        vd += 1
        den = Poly(den.field, den.coeffs[1:])
    num_s = poly_series(f.num, n + vd + f.den.degree + 1, f.field)
    den_s = poly_series(den, n + vd + f.den.degree + 1, f.field)
    return (num_s * den_s.inverse()).shift_exponent(-vd)


def binomial_series(alpha, nterms, field=QQ):
    """(1-x)^alpha as an exact series (alpha any rational)."""
    a = mpq(alpha)
    coeffs = [field.one()]
    for k in range(int(nterms) - 1):
        step = field_from_rat(field, mpq(k - a, k + 1))
        coeffs.append(field.mul(coeffs[-1], step))
    return ExactSeries(field, 0, coeffs)
