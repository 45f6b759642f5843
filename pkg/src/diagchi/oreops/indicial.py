"""Local data of an operator at a point: indicial polynomial and exponents.

A point is one of
  * an exact rational (int or mpq),
  * the string "inf",
  * an AlgebraicPoint: a root of an irreducible rational polynomial,
    disambiguated by a complex hint.

`localize` recenters the operator so the point sits at u = 0 and returns
polynomial coefficients over the right constant field (QQ, or the quotient
field for an algebraic point) plus an embedding of that field into mpc.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import mpmath
from gmpy2 import mpq

from ..exactcore import QQ, Poly, RatFun
from ..exactcore.fields import QuotientField
from ..exactcore import bigfloat
from .diffops import DiffOp


@dataclass(frozen=True)
class AlgebraicPoint:
    """A root of `minpoly` (integer coefficient list, low to high) near `hint`."""

    minpoly: tuple
    hint: complex
    label: str = ""

    def quotient_field(self):
        return QuotientField(list(self.minpoly))

    def value(self):
        """The designated root at current mpmath precision."""
        p = Poly.from_ints(QQ, list(self.minpoly))
        roots = mpmath.polyroots([bigfloat.to_mpf(c) for c in reversed(p.coeffs)],
                                 extraprec=60)
        best = min(roots, key=lambda r: abs(r - mpmath.mpc(self.hint)))
        return mpmath.mpc(best)

    def embedding(self):
        """Map a quotient-field element (tuple of rationals) to mpc.

        The root is recomputed lazily at the precision active when the
        embedding is *used*, so one embedding works at any precision.
        """
        cache = {}
        def embed(elt):
            prec = mpmath.mp.prec
            y = cache.get(prec)
            if y is None:
                y = cache[prec] = self.value()
            acc = mpmath.mpc(0)
            for c in reversed(elt):
                acc = acc * y + bigfloat.to_mpf(c)
            return acc
        return embed

    def __repr__(self):
        return self.label or "AlgebraicPoint(%s near %s)" % (list(self.minpoly), self.hint)


@dataclass
class LocalizedOp:
    """Operator recentred at a point: u = 0 is the point of interest."""

    field: object                 # constant field (QQ or a QuotientField)
    polys: list                   # polynomial coefficients in the local variable
    point: object                 # original point spec
    embed: object                 # callable field elt -> mpc (None for QQ identity)

    def symbol_polys(self):
        return symbol_polys(self.field, self.polys)


def _rational_embed(elt):
    return bigfloat.to_mpf(elt)


def localize(op, point):
    """Recenter `op` at `point`; see module docstring for point specs."""
    F = op.field
    if point == "inf":
        u = RatFun.x(F)
        phi = u.inverse()                       # x = 1/u
        moved = op.change_variable(phi, newvar="u")
        polys, _ = moved.cleared()
        return LocalizedOp(F, polys, point, _rational_embed)
    if isinstance(point, AlgebraicPoint):
        K = point.quotient_field()
        gen = K.gen()
        shifted = []
        for c in op.coeffs:
            num = _poly_to_field(c.num, K).shift(gen)
            den = _poly_to_field(c.den, K).shift(gen)
            shifted.append(RatFun(num, den))
        moved = DiffOp(shifted, var="u", field=K)
        polys, _ = moved.cleared()
        return LocalizedOp(K, polys, point, point.embedding())
    a = mpq(point)
    if a == 0:
        polys, _ = op.cleared()
        return LocalizedOp(F, polys, a, _rational_embed)
    moved = op.shift_point(a)
    polys, _ = moved.cleared()
    return LocalizedOp(F, polys, a, _rational_embed)


def _poly_to_field(p, K):
    return Poly(K, [K.from_rat(c) for c in p.coeffs])


def falling_factorial_poly(field, i):
    """s(s-1)...(s-i+1) as a Poly in s."""
    out = Poly.constant(field, field.one())
    for t in range(i):
        out = out * Poly(field, [field.neg(field.from_int(t)), field.one()])
    return out


def symbol_polys(field, polys):
    """Symbols b_j(s) with  L(u^s) = sum_j b_j(s) u^(s+j).

    Returns (w, symbols) where w is the minimal j with b_j nonzero and
    symbols is a dict {j: Poly in s}; b_w is the indicial polynomial.
    """
    r = len(polys) - 1
    ffs = [falling_factorial_poly(field, i) for i in range(r + 1)]
    max_deg = max((p.degree for p in polys if not p.is_zero()), default=0)
    symbols = {}
    for j in range(-r, max_deg + 1):
        b = Poly.zero(field)
        for i in range(r + 1):
            k = j + i
            if 0 <= k <= polys[i].degree:
                c = polys[i][k]
                if not field.is_zero(c):
                    b = b + ffs[i].scale(c)
        if not b.is_zero():
            symbols[j] = b
    if not symbols:
        raise ValueError("zero operator")
    w = min(symbols)
    return w, symbols


def indicial_polynomial(op, point):
    """The indicial polynomial (in s) of `op` at `point`."""
    loc = localize(op, point)
    w, symbols = loc.symbol_polys()
    return symbols[w]


def _rational_roots_over(field, poly):
    """Rational roots (with multiplicity) of a poly over QQ or a QuotientField."""
    if field is QQ:
        return poly.rational_roots()
    # components: poly has tuple coefficients; take gcd over QQ[s] of components
    comps = []
    for j in range(field.degree):
        comp = Poly(QQ, [c[j] for c in poly.coeffs])
        if not comp.is_zero():
            comps.append(comp)
    if not comps:
        raise ValueError("zero polynomial")
    g = comps[0]
    for c in comps[1:]:
        g = g.gcd(c)
    return g.rational_roots()


def local_exponents(op, point):
    """Sorted [(exponent, multiplicity)] at `point`; rational exponents only.

    Raises ValueError if the exponent sum does not reach the operator order
    (irrational or irregular exponents are out of scope here).
    """
    loc = localize(op, point)
    w, symbols = loc.symbol_polys()
    ind = symbols[w]
    roots = _rational_roots_over(loc.field, ind)
    if sum(m for _, m in roots) != ind.degree:
        raise ValueError("indicial polynomial at %s has non-rational roots" % (point,))
    return roots


def singular_points(op):
    """Zeros of the cleared leading coefficient, split into rational points
    and algebraic ones (quadratics only), plus "inf" when singular there.

    Returns a list of (point, label) pairs.
    """
    polys, _ = op.cleared()
    lead = polys[-1]
    sq = lead.squarefree_part()
    pts = []
    for root, _ in sq.rational_roots():
        pts.append(root)
        lin = Poly(QQ, [-root, mpq(1)])
        while True:
            q, r = sq.divmod(lin)
            if not r.is_zero():
                break
            sq = q
    if sq.degree == 2:
        ints = sq.integer_coeffs()
        c, b, a = ints[0], ints[1], ints[2]
        disc = b * b - 4 * a * c
        import math as _m
        x0 = (-b) / (2.0 * a)
        y0 = _m.sqrt(abs(disc)) / (2.0 * a)
        if disc < 0:
            pts.append(AlgebraicPoint(tuple(ints), complex(x0, y0)))
            pts.append(AlgebraicPoint(tuple(ints), complex(x0, -y0)))
        else:
            pts.append(AlgebraicPoint(tuple(ints), complex(x0 + y0, 0)))
            pts.append(AlgebraicPoint(tuple(ints), complex(x0 - y0, 0)))
    elif sq.degree > 2:
        raise NotImplementedError("leading coefficient with a factor of degree %d" % sq.degree)
    # infinity is singular unless exponents there are plain 0..r-1 -- callers
    # usually just ask for the table; we always include it
    pts.append("inf")
    return pts
