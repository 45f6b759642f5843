"""Degree-six pullback arguments, modular curves, and their parametrizations.

The catalog stores a family of rational pullback arguments ("hauptmoduls")
that enter the hypergeometric identities, together with the polynomial
relations (modular curves) that pairs of them satisfy identically.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..exactcore import QQ, Poly, RatFun
from ..oreops.catalog import fixture


def hauptmodul_names():
    return sorted(fixture("hauptmoduls"))


def load_hauptmodul(name):
    """One of the catalog's rational pullback arguments, as a RatFun."""
    table = fixture("hauptmoduls")
    if name not in table:
        raise KeyError("unknown hauptmodul %r; available: %s"
                       % (name, ", ".join(sorted(table))))
    rec = table[name]
    num = Poly(QQ, [mpq(c) for c in rec["num"]])
    den = Poly(QQ, [mpq(c) for c in rec["den"]])
    return RatFun(num, den)


def curve_names():
    return sorted(fixture("curves"))


def load_curve(name):
    """A modular curve as a list of (i, j, coefficient) monomials in (u, v)."""
    table = fixture("curves")
    if name not in table:
        raise KeyError("unknown curve %r; available: %s"
                       % (name, ", ".join(sorted(table))))
    return [(int(i), int(j), mpq(c)) for i, j, c in table[name]]


def curve_residual(curve, u, v):
    """Evaluate a curve's polynomial at a pair of rational functions.

    The result is a RatFun; a parametrization makes it identically zero.
    """
    if isinstance(curve, str):
        curve = load_curve(curve)
    acc = RatFun.zero(QQ)
    for i, j, c in curve:
        acc = acc + (u ** int(i)) * (v ** int(j)) * RatFun.constant(QQ, mpq(c))
    return acc


def parametrizations():
    """All catalogued (curve, u, v) parametrization triples, by name."""
    return [tuple(row) for row in fixture("curve_parametrizations")]


def verify_parametrization(curve_name, u_name, v_name):
    u = load_hauptmodul(u_name)
    v = load_hauptmodul(v_name)
    return curve_residual(curve_name, u, v).is_zero()


def inverse_landen_series(N):
    """The algebraic modulus map ((1-sqrt(1-x))/(1+sqrt(1-x)))² as a series.

    Expanded via (x²-8x+8)/x² - 4(2-x)sqrt(1-x)/x²; starts at x²/16.
    """
    from .pfq import binomial_series, poly_series

    root = binomial_series(mpq(1, 2), N + 3)
    num = (poly_series(Poly.from_ints(QQ, [8, -8, 1]), N + 3)
           - poly_series(Poly.from_ints(QQ, [2, -1]), N + 3).scale(mpq(4)) * root)
    return num.shift_exponent(-2).normalized().truncate(N)
