"""Differential operators sum c_i(x) D^i with rational-function coefficients.

The ring law is the Leibniz twist D*f = f*D + f'.  Operators are immutable;
the coefficient list runs from c_0 (order zero) upward and the top entry is
nonzero.  Most structural work happens on the "cleared" form: coefficients
multiplied by their common denominator, giving polynomial coefficients that
share no content.
"""

from __future__ import annotations

import math

from gmpy2 import mpq

from ..exactcore import QQ, Poly, RatFun, ExactSeries
from ..exactcore.fields import QuotientField


def _binomial(n, k):
    return math.comb(n, k)


class DiffOp:
    __slots__ = ("field", "var", "coeffs")

    def __init__(self, coeffs, var="x", field=None, normalized=False):
        coeffs = list(coeffs)
        if field is None:
            field = coeffs[0].field if coeffs else QQ
        if not normalized:
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
        self.field = field
        self.var = var
        self.coeffs = tuple(coeffs)

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def from_poly_lists(lists, var="x", field=QQ):
        """Operator with polynomial coefficients given as integer lists."""
        return DiffOp([RatFun(Poly.from_ints(field, c)) for c in lists], var=var, field=field)

    @staticmethod
    def from_ratfuns(ratfuns, var="x", field=None):
        return DiffOp(list(ratfuns), var=var, field=field)

    @staticmethod
    def derivation(field=QQ, var="x"):
        return DiffOp([RatFun.zero(field), RatFun.constant(field, field.one())], var=var, field=field)

    @staticmethod
    def identity(field=QQ, var="x"):
        return DiffOp([RatFun.constant(field, field.one())], var=var, field=field)

    @staticmethod
    def multiplication(f, var="x"):
        """The order-zero operator 'multiply by f' for a RatFun f."""
        return DiffOp([f], var=var, field=f.field)

    # -- basics ------------------------------------------------------------------

    @property
    def order(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFun.zero(self.field)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((len(self.coeffs), self.var))

    def __repr__(self):
        if self.is_zero():
            return "DiffOp(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append("(%r)" % c)
            else:
                parts.append("(%r)*D%s^%d" % (c, self.var, i))
        return "DiffOp(%s)" % " + ".join(parts)

    # -- ring structure -------------------------------------------------------------

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.coeff(i) + other.coeff(i) for i in range(n)]
        return DiffOp(out, var=self.var, field=self.field)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.coeff(i) - other.coeff(i) for i in range(n)]
        return DiffOp(out, var=self.var, field=self.field)

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs], var=self.var, field=self.field, normalized=True)

    def lmul_ratfun(self, f):
        """f * self (multiply every coefficient on the left by f)."""
        return DiffOp([f * c for c in self.coeffs], var=self.var, field=self.field)

    def scale(self, scalar):
        f = RatFun.constant(self.field, scalar)
        return self.lmul_ratfun(f)

    def __mul__(self, other):
        """Operator composition self . other (apply `other` first)."""
        if not isinstance(other, DiffOp):
            raise TypeError("use lmul_ratfun/scale for coefficient multiples")
        if self.is_zero() or other.is_zero():
            return DiffOp([], var=self.var, field=self.field)
        # precompute derivatives of other's coefficients up to self.order
        derivs = [list(other.coeffs)]
        for _ in range(self.order):
            derivs.append([c.derivative() for c in derivs[-1]])
        out = [RatFun.zero(self.field) for _ in range(self.order + other.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for k in range(i + 1):
                bin_ik = self.field.from_int(_binomial(i, k))
                for j, bjk in enumerate(derivs[k]):
                    if bjk.is_zero():
                        continue
                    # a * C(i,k) * b_j^(k) * D^(i-k+j)
                    term = (a * bjk).scale(bin_ik)
                    out[i - k + j] = out[i - k + j] + term
        return DiffOp(out, var=self.var, field=self.field)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative operator power")
        result = DiffOp.identity(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def adjoint(self):
        """Formal adjoint sum (-D)^i . c_i."""
        F = self.field
        out = [RatFun.zero(F) for _ in range(len(self.coeffs))]
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            sign = F.one() if i % 2 == 0 else F.neg(F.one())
            d = c
            for k in range(i + 1):
                # (-1)^i * C(i,k) * c^(k) * D^(i-k)
                coeff = d.scale(F.mul(sign, F.from_int(_binomial(i, k))))
                out[i - k] = out[i - k] + coeff
                if k < i:
                    d = d.derivative()
        return DiffOp(out, var=self.var, field=self.field)

    # -- division ----------------------------------------------------------------------

    def right_divide(self, other):
        """(quotient, remainder) with self = quotient * other + remainder."""
        if other.is_zero():
            raise ZeroDivisionError("right division by the zero operator")
        F = self.field
        rem = self
        q_coeffs = {}
        rb = other.order
        lead_b = other.coeffs[-1]
        while not rem.is_zero() and rem.order >= rb:
            k = rem.order - rb
            factor = rem.coeffs[-1] / lead_b
            q_coeffs[k] = q_coeffs.get(k, RatFun.zero(F)) + factor
            mono = DiffOp([RatFun.zero(F)] * k + [factor], var=self.var, field=F)
            rem = rem - mono * other
        if q_coeffs:
            qn = max(q_coeffs)
            q = DiffOp([q_coeffs.get(i, RatFun.zero(F)) for i in range(qn + 1)],
                       var=self.var, field=F)
        else:
            q = DiffOp([], var=self.var, field=F)
        return q, rem

    def is_right_divisible_by(self, other):
        return self.right_divide(other)[1].is_zero()

    # -- application --------------------------------------------------------------------

    def apply_to_series(self, s, cleared=True):
        """Apply to an ExactSeries.

        With cleared=True (default) uses the polynomial form, i.e. computes
        (den * self)(s); annihilation tests are unaffected and no series
        division by the denominator is needed.
        """
        if cleared:
            polys, _ = self.cleared()
            out = None
            ds = s
            for i, p in enumerate(polys):
                if i > 0:
                    ds = ds.derivative()
                if p.is_zero():
                    continue
                term = _poly_times_series(p, ds)
                out = term if out is None else out + term
            return out
        out = None
        ds = s
        for i, c in enumerate(self.coeffs):
            if i > 0:
                ds = ds.derivative()
            if c.is_zero():
                continue
            num_s = _poly_times_series(c.num, ds)
            den_s = _poly_to_series(c.den, num_s.order + 1, self.field)
            term = num_s / den_s
            out = term if out is None else out + term
        return out

    def annihilates(self, s, slack=None):
        """True when apply_to_series(s) vanishes to its known order.

        `slack` optionally requires at least that many surviving checked
        coefficients (guards against vacuous truncation).
        """
        img = self.apply_to_series(s, cleared=True)
        if slack is not None and img.order < slack:
            raise ValueError("series too short: only %d coefficients checked" % img.order)
        return img.is_zero_to_known_order()

    def apply_to_ratfun(self, f):
        out = RatFun.zero(self.field)
        d = f
        for i, c in enumerate(self.coeffs):
            if i > 0:
                d = d.derivative()
            if not c.is_zero():
                out = out + c * d
        return out

    # -- change of variable ------------------------------------------------------------

    def change_variable(self, phi, newvar="t"):
        """Pullback along x = phi(t): solutions y(x) become y(phi(t)).

        D_x maps to (1/phi'(t)) D_t and x maps to phi(t).
        """
        F = self.field
        dphi = phi.derivative()
        if dphi.is_zero():
            raise ValueError("constant substitution")
        inv_dphi = dphi.inverse()
        # E_i = image of D_x^i as an operator in t
        E = DiffOp.identity(F, newvar)
        Dt = DiffOp.derivation(F, newvar)
        result = DiffOp([self.coeffs[0].compose(phi)], var=newvar, field=F) \
            if not self.coeffs[0].is_zero() else DiffOp([], var=newvar, field=F)
        for i in range(1, self.order + 1):
            E = DiffOp([RatFun.zero(F), inv_dphi], var=newvar, field=F) * E
            ci = self.coeffs[i]
            if not ci.is_zero():
                result = result + E.lmul_ratfun(ci.compose(phi))
        return result

    def shift_point(self, a):
        """Recenter: returns the operator in u where x = a + u (a rational)."""
        F = self.field
        a = F.from_int(int(a)) if isinstance(a, int) else a
        out = []
        for c in self.coeffs:
            num = c.num.shift(a)
            den = c.den.shift(a)
            out.append(RatFun(num, den))
        return DiffOp(out, var="u", field=F)

    # -- normal forms ----------------------------------------------------------------------

    def cleared(self):
        """(poly_coeffs, common_den): coefficients times their common denominator."""
        F = self.field
        den = Poly.constant(F, F.one())
        for c in self.coeffs:
            g = den.gcd(c.den)
            den = den * c.den.exact_div(g)
        polys = [c.num * den.exact_div(c.den) for c in self.coeffs]
        return polys, den

    def normalized(self):
        """Primitive form: polynomial coefficients, no common factor, and a
        sign convention (positive leading integer content on the top
        coefficient).  Two operators are equal up to a left rational-function
        factor iff their normalized forms are identical."""
        F = self.field
        polys, _ = self.cleared()
        g = None
        for p in polys:
            if p.is_zero():
                continue
            g = p if g is None else g.gcd(p)
        if g is not None and g.degree > 0:
            polys = [p.exact_div(g) if not p.is_zero() else p for p in polys]
        if F is QQ:
            num_gcd = 0
            den_lcm = 1
            for p in polys:
                if p.is_zero():
                    continue
                c, _ = p.content_and_primitive()
                num_gcd = math.gcd(num_gcd, int(c.numerator))
                den_lcm = den_lcm * int(c.denominator) // math.gcd(den_lcm, int(c.denominator))
            scale = mpq(den_lcm, num_gcd) if num_gcd else mpq(1)
            if polys and not polys[-1].is_zero() and polys[-1].lead() * scale < 0:
                scale = -scale
            polys = [p.scale(scale) for p in polys]
        else:
            top = polys[-1]
            polys = [p.scale(F.inv(top.lead())) for p in polys]
        return DiffOp([RatFun(p) for p in polys], var=self.var, field=F)

    def equals_up_to_left_factor(self, other):
        return self.normalized() == other.normalized()

    @property
    def poly_degree(self):
        """Max coefficient degree of the cleared form."""
        polys, _ = self.cleared()
        return max((p.degree for p in polys if not p.is_zero()), default=-1)

    # -- serialization --------------------------------------------------------------------

    def to_dict(self, name=None):
        d = {"variable": self.var, "coeffs": []}
        if name is not None:
            d["name"] = name
        for c in self.coeffs:
            num_c, num_p = (c.num.content_and_primitive() if not c.num.is_zero()
                            else (mpq(0), c.num))
            den_c, den_p = c.den.content_and_primitive()
            # fold the rational content into integer num/den lists
            ratio = num_c / den_c if num_c else mpq(0)
            # big coefficients are stored as decimal strings: every JSON
            # reader round-trips them bit-exactly, unlike 64-bit numbers
            num_ints = [str(int(x * ratio.numerator)) for x in num_p.coeffs]
            den_ints = [str(int(x * ratio.denominator)) for x in den_p.coeffs]
            if not num_ints:
                num_ints, den_ints = ["0"], ["1"]
            d["coeffs"].append({"num": num_ints, "den": den_ints})
        return d

    @staticmethod
    def from_dict(d, field=QQ):
        coeffs = []
        for entry in d["coeffs"]:
            coeffs.append(RatFun.from_ints(field, entry["num"], entry.get("den", [1])))
        return DiffOp(coeffs, var=d.get("variable", "x"), field=field)


def _poly_to_series(p, nterms, field):
    coeffs = list(p.coeffs) + [field.zero()] * max(0, nterms - len(p.coeffs))
    return ExactSeries(field, 0, coeffs[:nterms])


def _poly_times_series(p, s):
    """Multiply a series by a polynomial without losing known terms.

    A polynomial is exactly known, so the product is known through
    s.trunc_exp + valuation(p); using series-mul on a truncated polynomial
    series would clip it."""
    F = s.field
    out = None
    for k, c in enumerate(p.coeffs):
        if F.is_zero(c):
            continue
        term = ExactSeries(F, s.expo + k, [F.mul(c, a) for a in s.coeffs])
        out = term if out is None else out + term
    if out is None:
        return ExactSeries(F, s.expo, [F.zero()] * len(s.coeffs))
    return out
