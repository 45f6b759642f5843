"""Dense univariate polynomials and rational functions over a field object.

Both types carry their field explicitly; coefficients are opaque field
elements.  Over QQ a few extra services exist (integer content, rational
roots, primitive-PRS gcd) because that is where all the heavy operator
algebra happens.
"""

from __future__ import annotations

import math

from gmpy2 import mpq, mpz

from .fields import QQ
from . import bigfloat


class Poly:
    """Dense polynomial; ``coeffs[k]`` multiplies x^k, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, normalized=False):
        self.field = field
        if not normalized:
            coeffs = list(coeffs)
            while coeffs and field.is_zero(coeffs[-1]):
                coeffs.pop()
        self.coeffs = tuple(coeffs)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_ints(field, ints):
        return Poly(field, [field.from_int(int(c)) for c in ints])

    @staticmethod
    def constant(field, c):
        return Poly(field, [c])

    @staticmethod
    def x(field):
        return Poly(field, [field.zero(), field.one()])

    @staticmethod
    def zero(field):
        return Poly(field, [])

    # -- basics ------------------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        F = self.field
        return all(F.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(len(self.coeffs))

    def __repr__(self):
        F = self.field
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if F.is_zero(c):
                continue
            s = F.repr_elt(c)
            if k == 0:
                terms.append(s)
            elif k == 1:
                terms.append("(%s)*x" % s)
            else:
                terms.append("(%s)*x^%d" % (s, k))
        return "Poly(%s)" % " + ".join(terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs], normalized=True)

    def __mul__(self, other):
        F = self.field
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, [])
        out = [F.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if F.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        if F.is_zero(c):
            return Poly(F, [])
        return Poly(F, [F.mul(c, a) for a in self.coeffs], normalized=True)

    def shift_up(self, k):
        """Multiply by x^k."""
        if not self.coeffs or k == 0:
            return self
        return Poly(self.field, [self.field.zero()] * k + list(self.coeffs), normalized=True)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.field, self.field.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        q = [F.zero()] * max(0, len(rem) - db)
        inv_lead = F.inv(other.lead())
        while rem and len(rem) - 1 >= db:
            k = len(rem) - 1 - db
            c = F.mul(rem[-1], inv_lead)
            q[k] = c
            for i, bc in enumerate(other.coeffs):
                rem[k + i] = F.sub(rem[k + i], F.mul(c, bc))
            while rem and F.is_zero(rem[-1]):
                rem.pop()
        return Poly(F, q), Poly(F, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("exact_div with nonzero remainder")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead()))

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(k), c) for k, c in enumerate(self.coeffs)][1:])

    # -- evaluation / composition -------------------------------------------

    def evaluate(self, x):
        """Horner evaluation at a field element."""
        F = self.field
        acc = F.zero()
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def evalf(self, x):
        """Horner evaluation at an mpf/mpc point (QQ coefficients)."""
        conv = bigfloat.to_mpc if isinstance(x, (bigfloat.mpc, complex)) else bigfloat.to_mpf
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + conv(c)
        return acc

    def compose(self, inner):
        """self(inner(x)) by Horner in the polynomial ring."""
        F = self.field
        acc = Poly(F, [])
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(F, c)
        return acc

    def compose_fraction(self, num, den):
        """Numerator of self(num/den) * den^degree (a polynomial)."""
        F = self.field
        d = self.degree
        if d < 0:
            return Poly(F, [])
        acc = Poly.constant(F, self.coeffs[-1])
        for k in range(d - 1, -1, -1):
            acc = acc * num + Poly.constant(F, self.coeffs[k]) * den ** (d - k)
        return acc

    def shift(self, a):
        """self(x + a) for a field element a (Taylor shift)."""
        return self.compose(Poly(self.field, [a, self.field.one()]))

    def reverse(self, to_degree=None):
        """Reversal x^d * self(1/x); pad to `to_degree` first if given."""
        d = self.degree if to_degree is None else int(to_degree)
        if d < self.degree:
            raise ValueError("to_degree below actual degree")
        padded = list(self.coeffs) + [self.field.zero()] * (d - self.degree)
        return Poly(self.field, list(reversed(padded)))

    # -- gcd and friends -----------------------------------------------------

    def gcd(self, other):
        """Monic gcd.  Over QQ uses the primitive PRS to tame blowup."""
        F = self.field
        a, b = self, other
        if F is QQ:
            if not a.is_zero():
                a = a.content_and_primitive()[1]
            if not b.is_zero():
                b = b.content_and_primitive()[1]
        while not b.is_zero():
            r = a % b
            if F is QQ and not r.is_zero():
                r = r.content_and_primitive()[1]
            a, b = b, r
        if a.is_zero():
            return a
        return a.monic()

    def squarefree_part(self):
        """Monic product of the distinct irreducible factors."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        if self.degree == 0:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self.monic()
        return self.exact_div(g.scale(self.field.div(self.lead(), g.lead()))).monic()

    # -- QQ-specific services -------------------------------------------------

    def content_and_primitive(self):
        """(content, primitive): primitive has coprime integer coefficients
        and positive leading coefficient; content * primitive == self."""
        if self.field is not QQ:
            raise TypeError("content_and_primitive needs QQ coefficients")
        if self.is_zero():
            return mpq(0), self
        den_lcm = 1
        for c in self.coeffs:
            d = int(c.denominator)
            den_lcm = den_lcm * d // math.gcd(den_lcm, d)
        ints = [int(c.numerator) * (den_lcm // int(c.denominator)) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        prim = Poly(QQ, [mpq(v // g) for v in ints], normalized=True)
        return mpq(g, den_lcm), prim

    def integer_coeffs(self):
        """Coefficients as coprime ints after clearing denominators."""
        _, prim = self.content_and_primitive()
        return [int(c) for c in prim.coeffs]

    def rational_roots(self):
        """All rational roots with multiplicities, sorted, as (mpq, mult)."""
        if self.field is not QQ:
            raise TypeError("rational_roots needs QQ coefficients")
        if self.is_zero():
            raise ValueError("zero polynomial")
        _, p = self.content_and_primitive()
        roots = []
        v = 0
        while p.coeffs and p.coeffs[0] == 0:
            p = Poly(QQ, p.coeffs[1:], normalized=True)
            v += 1
        if v:
            roots.append((mpq(0), v))
        while p.degree >= 1:
            a0 = abs(int(p.coeffs[0].numerator))
            an = abs(int(p.coeffs[-1].numerator))
            found = None
            for num in _divisors(a0):
                for den in _divisors(an):
                    if math.gcd(num, den) != 1:
                        continue
                    for cand in (mpq(num, den), mpq(-num, den)):
                        if p.evaluate(cand) == 0:
                            found = cand
                            break
                    if found is not None:
                        break
                if found is not None:
                    break
            if found is None:
                break
            mult = 0
            lin = Poly(QQ, [-found, mpq(1)])
            while True:
                q, r = p.divmod(lin)
                if not r.is_zero():
                    break
                p = q
                mult += 1
            roots.append((found, mult))
            if p.degree >= 1:
                p = p.content_and_primitive()[1]
        return sorted(roots)


def _divisors(n):
    n = abs(int(n))
    if n == 0:
        raise ValueError("divisors of zero requested")
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


class RatFun:
    """Reduced fraction of two Polys; denominator monic, gcd removed."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num, den=None, reduce=True):
        F = num.field
        if den is None:
            den = Poly.constant(F, F.one())
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and not num.is_zero():
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if num.is_zero():
            den = Poly.constant(F, F.one())
        else:
            lead_inv = F.inv(den.lead())
            num = num.scale(lead_inv)
            den = den.scale(lead_inv)
        self.field = F
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_ints(field, num_ints, den_ints=(1,)):
        return RatFun(Poly.from_ints(field, num_ints), Poly.from_ints(field, den_ints))

    @staticmethod
    def constant(field, c):
        return RatFun(Poly.constant(field, c))

    @staticmethod
    def x(field):
        return RatFun(Poly.x(field))

    @staticmethod
    def zero(field):
        return RatFun(Poly.zero(field))

    # -- basics ---------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %r" % self)
        return self.num

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((len(self.num.coeffs), len(self.den.coeffs)))

    def __repr__(self):
        if self.den.degree == 0:
            return "RatFun(%r)" % (self.num,)
        return "RatFun(%r / %r)" % (self.num, self.den)

    # -- field operations -------------------------------------------------------

    def __add__(self, other):
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return RatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        if not isinstance(other, RatFun):
            return self.scale(other)
        return RatFun(self.num * other.num, self.den * other.den)

    def scale(self, c):
        return RatFun(self.num.scale(c), self.den, reduce=False)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.num ** n, self.den ** n, reduce=False)

    def derivative(self):
        n, d = self.num, self.den
        return RatFun(n.derivative() * d - n * d.derivative(), d * d)

    # -- evaluation / composition -------------------------------------------------

    def evaluate(self, x):
        dv = self.den.evaluate(x)
        F = self.field
        if F.is_zero(dv):
            raise ZeroDivisionError("pole at evaluation point")
        return F.div(self.num.evaluate(x), dv)

    def evalf(self, x):
        return self.num.evalf(x) / self.den.evalf(x)

    def compose(self, inner):
        """self(inner) for `inner` a RatFun; exact substitution."""
        n, d = self.num, self.den
        dmax = max(n.degree, d.degree)
        if dmax < 0:
            return RatFun.zero(self.field)
        # pad both to the same degree so the den^k weights line up
        def comp(p):
            F = self.field
            acc = Poly.zero(F)
            for k in range(dmax, -1, -1):
                acc = acc * inner.num + Poly.constant(F, p[k]) * inner.den ** (dmax - k)
            return acc
        return RatFun(comp(n), comp(d))

    def valuation_at_zero(self):
        """Order of vanishing at x = 0 (negative for a pole)."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        vn = next(i for i, c in enumerate(self.num.coeffs) if not self.field.is_zero(c))
        vd = next(i for i, c in enumerate(self.den.coeffs) if not self.field.is_zero(c))
        return vn - vd
