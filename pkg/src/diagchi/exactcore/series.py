"""Truncated power series with a rational leading exponent.

An ExactSeries represents

    x^expo * (c[0] + c[1]*x + c[2]*x^2 + ... + c[n-1]*x^(n-1)) + O(x^(expo+n))

with `expo` an exact rational and coefficients in an explicit field.
Exponents within one series step by integers; series whose exponents
differ by a non-integer cannot be added (they live in different classes).

Truncation is tracked honestly through every operation: the result of an
operation is exactly as long as the inputs justify, no longer.
"""

from __future__ import annotations

from gmpy2 import mpq

from .fields import QQ
from . import bigfloat


def field_from_rat(field, q):
    """Image of an exact rational in an arbitrary field."""
    q = mpq(q)
    if field is QQ:
        return q
    if hasattr(field, "from_rat"):
        return field.from_rat(q)
    num = field.from_int(int(q.numerator))
    if q.denominator == 1:
        return num
    return field.div(num, field.from_int(int(q.denominator)))


def _integer_nth_root(n, k):
    """Exact k-th root of a nonnegative int, or None."""
    n, k = int(n), int(k)
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    return None


class ExactSeries:
    __slots__ = ("field", "expo", "coeffs")

    def __init__(self, field, expo, coeffs):
        self.field = field
        self.expo = mpq(expo)
        self.coeffs = list(coeffs)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_ints(field, ints, expo=0):
        return ExactSeries(field, expo, [field.from_int(int(c)) for c in ints])

    @staticmethod
    def from_rats(rats, expo=0):
        return ExactSeries(QQ, expo, [mpq(c) for c in rats])

    @staticmethod
    def one(field, nterms):
        return ExactSeries(field, 0, [field.one()] + [field.zero()] * (nterms - 1))

    @staticmethod
    def x_power(field, expo, nterms):
        return ExactSeries(field, expo, [field.one()] + [field.zero()] * (nterms - 1))

    @staticmethod
    def zero(field, nterms, expo=0):
        return ExactSeries(field, expo, [field.zero()] * nterms)

    # -- structure --------------------------------------------------------------

    @property
    def order(self):
        """Number of known coefficients."""
        return len(self.coeffs)

    @property
    def trunc_exp(self):
        """First unknown exponent: the error term is O(x^trunc_exp)."""
        return self.expo + len(self.coeffs)

    def valuation(self):
        """Exponent of the first nonzero known coefficient, else None."""
        for k, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return self.expo + k
        return None

    def coefficient(self, exponent):
        """Coefficient of x^exponent; zero inside the known window."""
        d = mpq(exponent) - self.expo
        if d.denominator != 1:
            return self.field.zero()
        k = int(d)
        if k < 0:
            return self.field.zero()
        if k >= len(self.coeffs):
            raise IndexError("coefficient of x^%s beyond truncation O(x^%s)"
                             % (exponent, self.trunc_exp))
        return self.coeffs[k]

    def truncate(self, nterms):
        return ExactSeries(self.field, self.expo, self.coeffs[: int(nterms)])

    def truncate_at_exponent(self, exponent):
        """Drop all terms with exponent >= `exponent`."""
        d = mpq(exponent) - self.expo
        if d <= 0:
            return ExactSeries(self.field, self.expo, [])
        n = int(d) if d.denominator == 1 else int(d) + 1
        return ExactSeries(self.field, self.expo, self.coeffs[: min(n, len(self.coeffs))])

    def normalized(self):
        """Strip leading known zeros (keeps the truncation point)."""
        k = 0
        while k < len(self.coeffs) and self.field.is_zero(self.coeffs[k]):
            k += 1
        if k == 0:
            return self
        return ExactSeries(self.field, self.expo + k, self.coeffs[k:])

    def is_zero_to_known_order(self):
        return all(self.field.is_zero(c) for c in self.coeffs)

    def eq_known(self, other):
        """Equal on the overlap of the known windows (which must be nonempty)."""
        lo = min(self.expo, other.expo)
        hi = min(self.trunc_exp, other.trunc_exp)
        if hi <= lo:
            raise ValueError("series windows do not overlap")
        d = hi - lo
        if (self.expo - other.expo).denominator != 1:
            return self.is_zero_to_known_order() and other.is_zero_to_known_order()
        k = lo
        F = self.field
        while k < hi:
            a = self._coeff_or_zero(k)
            b = other._coeff_or_zero(k)
            if not F.eq(a, b):
                return False
            k += 1
        return True

    def _coeff_or_zero(self, exponent):
        d = mpq(exponent) - self.expo
        if d.denominator != 1 or d < 0 or int(d) >= len(self.coeffs):
            return self.field.zero()
        return self.coeffs[int(d)]

    def __repr__(self):
        F = self.field
        shown = []
        for k, c in enumerate(self.coeffs[:8]):
            if not F.is_zero(c):
                shown.append("(%s)*x^%s" % (F.repr_elt(c), self.expo + k))
        body = " + ".join(shown) if shown else "0"
        return "ExactSeries(%s + O(x^%s))" % (body, self.trunc_exp)

    # -- ring operations -----------------------------------------------------------

    def _aligned(self, other):
        d = other.expo - self.expo
        if d.denominator != 1:
            raise ValueError("cannot combine series with exponents differing by %s" % d)
        lo = min(self.expo, other.expo)
        hi = min(self.trunc_exp, other.trunc_exp)
        n = int(hi - lo)
        F = self.field
        def window(s):
            off = int(s.expo - lo)
            out = [F.zero()] * n
            for k, c in enumerate(s.coeffs):
                if 0 <= off + k < n:
                    out[off + k] = c
            return out
        return lo, window(self), window(other)

    def __add__(self, other):
        lo, a, b = self._aligned(other)
        F = self.field
        return ExactSeries(F, lo, [F.add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other):
        lo, a, b = self._aligned(other)
        F = self.field
        return ExactSeries(F, lo, [F.sub(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        F = self.field
        return ExactSeries(F, self.expo, [F.neg(c) for c in self.coeffs])

    def scale(self, c):
        F = self.field
        return ExactSeries(F, self.expo, [F.mul(c, a) for a in self.coeffs])

    def scale_rat(self, q):
        return self.scale(field_from_rat(self.field, q))

    def __mul__(self, other):
        if not isinstance(other, ExactSeries):
            return self.scale(other)
        F = self.field
        a, b = self.normalized(), other.normalized()
        if not a.coeffs or not b.coeffs:
            # zero to known order: result known through min(t_a + v_b, t_b + v_a)
            va = a.expo if not a.coeffs else a.expo
            vb = b.expo if not b.coeffs else b.expo
            t = min(a.trunc_exp + vb, b.trunc_exp + va)
            e = a.expo + b.expo
            return ExactSeries(F, e, [F.zero()] * max(0, int(t - e)))
        t = min(a.trunc_exp + b.expo, b.trunc_exp + a.expo)
        e = a.expo + b.expo
        n = int(t - e)
        out = [F.zero()] * n
        for i, ai in enumerate(a.coeffs):
            if i >= n:
                break
            if F.is_zero(ai):
                continue
            jmax = min(len(b.coeffs), n - i)
            for j in range(jmax):
                bj = b.coeffs[j]
                if not F.is_zero(bj):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return ExactSeries(F, e, out)

    def shift_exponent(self, delta):
        return ExactSeries(self.field, self.expo + mpq(delta), self.coeffs)

    def inverse(self):
        F = self.field
        s = self.normalized()
        if not s.coeffs or F.is_zero(s.coeffs[0]):
            raise ZeroDivisionError("inverse of a series that is zero to known order")
        n = len(s.coeffs)
        inv0 = F.inv(s.coeffs[0])
        out = [F.zero()] * n
        out[0] = inv0
        for k in range(1, n):
            acc = F.zero()
            for j in range(1, k + 1):
                acc = F.add(acc, F.mul(s.coeffs[j], out[k - j]))
            out[k] = F.neg(F.mul(inv0, acc))
        return ExactSeries(F, -s.expo, out)

    def __truediv__(self, other):
        return self * other.inverse()

    def pow_int(self, n):
        n = int(n)
        if n < 0:
            return self.inverse().pow_int(-n)
        F = self.field
        result = ExactSeries(F, 0, [F.one()] + [F.zero()] * (len(self.coeffs) - 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def pow_rat(self, alpha):
        """self**alpha for rational alpha via the binomial series.

        Needs the leading coefficient to be an exact alpha-th power; in
        practice it is 1 (or the exponent is an integer).
        """
        alpha = mpq(alpha)
        if alpha.denominator == 1:
            return self.pow_int(int(alpha))
        F = self.field
        s = self.normalized()
        if not s.coeffs or F.is_zero(s.coeffs[0]):
            raise ZeroDivisionError("rational power of a series with no known leading term")
        c0 = s.coeffs[0]
        if F.eq(c0, F.one()):
            lead_pow = F.one()
        elif F is QQ:
            b = int(alpha.denominator)
            rn = _integer_nth_root(c0.numerator, b)
            rd = _integer_nth_root(c0.denominator, b)
            if rn is None or rd is None:
                raise ValueError("leading coefficient %s is not a perfect %d-th power" % (c0, b))
            lead_pow = mpq(rn, rd) ** int(alpha.numerator)
        else:
            raise ValueError("rational power needs unit leading coefficient over %s" % F.name)
        n = len(s.coeffs)
        w = ExactSeries(F, 0, [F.div(c, c0) for c in s.coeffs])  # 1 + tail
        tail = ExactSeries(F, 0, [F.zero()] + w.coeffs[1:])
        result = ExactSeries(F, 0, [F.one()] + [F.zero()] * (n - 1))
        term = ExactSeries(F, 0, [F.one()] + [F.zero()] * (n - 1))
        coeff = F.one()
        for k in range(1, n):
            term = term * tail
            coeff = F.mul(coeff, field_from_rat(F, (alpha - (k - 1)) / k))
            if term.is_zero_to_known_order():
                break
            result = result + term.scale(coeff)
        return result.scale(lead_pow).shift_exponent(alpha * s.expo)

    def derivative(self):
        F = self.field
        out = []
        for k, c in enumerate(self.coeffs):
            e = self.expo + k
            out.append(F.mul(field_from_rat(F, e), c))
        if self.expo == 0:
            return ExactSeries(F, 0, out[1:])
        return ExactSeries(F, self.expo - 1, out)

    def compose(self, inner):
        """self(inner(x)); inner must have valuation >= 1, self integer expo >= 0."""
        F = self.field
        if self.expo.denominator != 1 or self.expo < 0:
            raise ValueError("compose needs a power-series outer factor")
        inner_n = inner.normalized()
        v = inner_n.expo
        if v < 1 or v.denominator != 1:
            raise ValueError("compose needs inner valuation >= 1")
        nterms_out = min(int(len(self.coeffs) * v + self.expo * v), int(inner_n.trunc_exp))
        one = ExactSeries(F, 0, [F.one()] + [F.zero()] * (nterms_out - 1))
        inner_t = ExactSeries(F, inner_n.expo, inner_n.coeffs[: max(0, nterms_out - int(inner_n.expo))])
        acc = ExactSeries(F, 0, [F.zero()] * nterms_out)
        for c in reversed(self.coeffs):
            acc = acc * inner_t + one.scale(c)
        if self.expo:
            acc = acc * inner_t.pow_int(int(self.expo))
        return acc.truncate_at_exponent(nterms_out)

    def scale_argument(self, c):
        """x -> c*x for a field element c (integer exponent offset only)."""
        if self.expo.denominator != 1:
            raise ValueError("scale_argument needs an integer leading exponent")
        F = self.field
        out = []
        e = int(self.expo)
        if e >= 0:
            p = F.one()
            for _ in range(e):
                p = F.mul(p, c)
        else:
            ci = F.inv(c)
            p = F.one()
            for _ in range(-e):
                p = F.mul(p, ci)
        for k, a in enumerate(self.coeffs):
            out.append(F.mul(p, a))
            p = F.mul(p, c)
        return ExactSeries(F, self.expo, out)

    # -- numerics ---------------------------------------------------------------

    def evalf(self, x, embed=None):
        """Numerical sum at point x (mpf/mpc); x^expo via the principal branch.

        `embed` maps a field element to a number; defaults to the QQ embedding.
        """
        import mpmath
        if embed is None:
            embed = bigfloat.to_mpf
        xx = bigfloat.to_mpc(x) if isinstance(x, (complex, bigfloat.mpc)) else bigfloat.to_mpf(x)
        acc = xx * 0
        for c in reversed(self.coeffs):
            acc = acc * xx + embed(c)
        if self.expo != 0:
            acc = acc * mpmath.power(xx, bigfloat.to_mpf(self.expo))
        return acc

    def map_coeffs(self, fn, new_field=None):
        return ExactSeries(new_field or self.field, self.expo, [fn(c) for c in self.coeffs])
