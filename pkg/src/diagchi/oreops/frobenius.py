"""Frobenius bases at regular (or ordinary) points.

The solutions attached to one congruence class of indicial roots are built
by running the coefficient recurrence over Laurent jets in a deformation
parameter eps: the exponent is taken as sigma + eps, divisions by the
indicial polynomial at later roots introduce controlled poles in eps, and
the Taylor/principal coefficients in eps of the deformed series are
solutions with log terms, since

    u^(sigma+eps) = u^sigma * sum_j eps^j ln(u)^j / j! .

Per root we launch the recurrence at that root and harvest every eps
coefficient that annihilation guarantees; the union over all roots spans
the class, and a final echelonization over the (exponent, log-power)
monomials produces a canonical triangular basis.  The construction is
verified at runtime: the basis must have full rank, and `verify=True`
additionally applies the operator to every element.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from gmpy2 import mpq

from ..exactcore import QQ, ExactSeries, Poly
from ..exactcore.series import field_from_rat
from ..exactcore import bigfloat
from .indicial import localize, _rational_roots_over


# --------------------------------------------------------------------------
# Laurent jets in eps over an arbitrary field
#
# Representation: (val, coeffs, exact)
#   coeffs[k] multiplies eps^(val+k); exact=True means the jet is the full
#   Laurent polynomial; otherwise it carries an O(eps^(val+len)) error.
#   Empty coeffs: exact zero if exact else "zero through O(eps^val)".


class JetRing:
    def __init__(self, field):
        self.F = field

    def zero(self):
        return (0, (), True)

    def one(self):
        return (0, (self.F.one(),), True)

    def from_poly_coeffs(self, coeffs):
        """Exact jet from a dense eps-polynomial coefficient list."""
        F = self.F
        val = 0
        coeffs = list(coeffs)
        while coeffs and F.is_zero(coeffs[0]):
            coeffs.pop(0)
            val += 1
        while coeffs and F.is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            return (0, (), True)
        return (val, tuple(coeffs), True)

    def trunc_of(self, a):
        return None if a[2] else a[0] + len(a[1])

    def is_zero_known(self, a):
        return not a[1]

    def valuation(self, a):
        """Valuation of a nonzero(-known) jet."""
        if not a[1]:
            raise ValueError("valuation of zero jet")
        return a[0]

    def _window(self, a, lo, hi):
        F = self.F
        out = []
        for k in range(lo, hi):
            i = k - a[0]
            out.append(a[1][i] if 0 <= i < len(a[1]) else F.zero())
        return out

    def add(self, a, b):
        F = self.F
        ta, tb = self.trunc_of(a), self.trunc_of(b)
        exact = ta is None and tb is None
        if not a[1] and a[2]:
            return b if exact or ta is None else b  # exact zero: b unchanged
        if not b[1] and b[2]:
            return a
        vals = []
        if a[1]:
            vals.append(a[0])
        else:
            vals.append(a[0])  # zero-known-through marker participates
        if b[1]:
            vals.append(b[0])
        else:
            vals.append(b[0])
        lo = min(vals)
        if exact:
            hi = max((a[0] + len(a[1])) if a[1] else a[0],
                     (b[0] + len(b[1])) if b[1] else b[0])
        else:
            hi = min(t for t in (ta, tb) if t is not None)
        if hi <= lo:
            return (hi, (), exact)
        wa = self._window(a, lo, hi)
        wb = self._window(b, lo, hi)
        out = [F.add(x, y) for x, y in zip(wa, wb)]
        return self._normal(lo, out, exact)

    def _normal(self, val, coeffs, exact):
        F = self.F
        while coeffs and F.is_zero(coeffs[0]):
            coeffs.pop(0)
            val += 1
        while exact and coeffs and F.is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            return (0, (), True) if exact else (val, (), False)
        return (val, tuple(coeffs), exact)

    def neg(self, a):
        F = self.F
        return (a[0], tuple(F.neg(c) for c in a[1]), a[2])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        F = self.F
        if (not a[1] and a[2]) or (not b[1] and b[2]):
            return (0, (), True)
        if not a[1] or not b[1]:
            # zero-known times something: O(eps^(val_a + val_b))
            va = a[0]
            vb = b[0]
            return (va + vb, (), a[2] and b[2])
        exact = a[2] and b[2]
        if exact:
            hi = (a[0] + len(a[1])) + (b[0] + len(b[1])) - 1
        else:
            ta = self.trunc_of(a)
            tb = self.trunc_of(b)
            cands = []
            if ta is not None:
                cands.append(ta + b[0])
            if tb is not None:
                cands.append(tb + a[0])
            hi = min(cands)
        lo = a[0] + b[0]
        n = hi - lo + (1 if exact else 0)
        if n <= 0:
            return (hi, (), False)
        out = [F.zero()] * n
        for i, ai in enumerate(a[1]):
            if F.is_zero(ai):
                continue
            for j, bj in enumerate(b[1]):
                k = i + j
                if k < n and not F.is_zero(bj):
                    out[k] = F.add(out[k], F.mul(ai, bj))
        return self._normal(lo, out, exact)

    def inv(self, a, length):
        """Inverse of a nonzero jet to `length` known coefficients."""
        F = self.F
        if not a[1]:
            raise ZeroDivisionError("inverse of (known-)zero jet")
        c0 = a[1][0]
        inv0 = F.inv(c0)
        out = [F.zero()] * length
        out[0] = inv0
        for k in range(1, length):
            acc = F.zero()
            for j in range(1, k + 1):
                aj = a[1][j] if j < len(a[1]) else F.zero()
                if not F.is_zero(aj):
                    acc = F.add(acc, F.mul(aj, out[k - j]))
            out[k] = F.neg(F.mul(inv0, acc))
        ta = self.trunc_of(a)
        if ta is not None:
            length = min(length, ta - a[0])
        return self._normal(-a[0], out[:length], False)

    def div(self, a, b, length):
        return self.mul(a, self.inv(b, length))

    def coeff(self, a, k):
        """Coefficient of eps^k; raises if k is beyond the known window."""
        F = self.F
        t = self.trunc_of(a)
        if t is not None and k >= t:
            raise IndexError("jet coefficient beyond truncation")
        i = k - a[0]
        if not a[1]:
            if a[2] or k < a[0]:
                return F.zero()
            raise IndexError("jet coefficient beyond truncation")
        if i < 0 or i >= len(a[1]):
            return F.zero()
        return a[1][i]

    def scale(self, a, c):
        F = self.F
        if F.is_zero(c):
            return (0, (), True) if a[2] else (self.trunc_of(a), (), False)
        return self._normal(a[0], [F.mul(c, x) for x in a[1]], a[2])


# --------------------------------------------------------------------------


@dataclass
class LogSeries:
    """sum_j parts[j] * ln(u)^j / j!  -- a local solution at u = 0.

    parts[j] is an ExactSeries in u (rational leading exponent); the list
    has no trailing all-zero entries.  `embed` maps coefficient-field
    elements to numbers (None means QQ).
    """

    field: object
    parts: list
    embed: object = None

    def log_degree(self):
        return len(self.parts) - 1

    def trimmed(self):
        parts = list(self.parts)
        while parts and parts[-1].is_zero_to_known_order():
            parts.pop()
        return LogSeries(self.field, parts, self.embed)

    def valuation(self):
        vals = [p.valuation() for p in self.parts if p.valuation() is not None]
        return min(vals) if vals else None

    def derivative(self):
        """d/du, using (ln^j/j!)' = ln^(j-1)/(j-1)! * (1/u)."""
        F = self.field
        out = []
        for j, p in enumerate(self.parts):
            d = p.derivative()
            if j + 1 < len(self.parts):
                nxt = self.parts[j + 1]
                d = d + ExactSeries(F, nxt.expo - 1, nxt.coeffs)
            out.append(d)
        return LogSeries(self.field, out, self.embed)

    def add(self, other):
        n = max(len(self.parts), len(other.parts))
        out = []
        for j in range(n):
            if j < len(self.parts) and j < len(other.parts):
                out.append(self.parts[j] + other.parts[j])
            elif j < len(self.parts):
                out.append(self.parts[j])
            else:
                out.append(other.parts[j])
        return LogSeries(self.field, out, self.embed)

    def scale(self, c):
        return LogSeries(self.field, [p.scale(c) for p in self.parts], self.embed)

    def scale_rat(self, q):
        return self.scale(field_from_rat(self.field, q))

    def evalf(self, uval):
        """Numerical value at u = uval (principal branch of the log)."""
        embed = self.embed or bigfloat.to_mpf
        u = bigfloat.to_mpc(uval) if isinstance(uval, (complex, mpmath.mpc)) else bigfloat.to_mpf(uval)
        lg = mpmath.log(u)
        acc = mpmath.mpc(0)
        fact = mpmath.mpf(1)
        lp = mpmath.mpc(1)
        for j, p in enumerate(self.parts):
            if j:
                lp = lp * lg
                fact = fact * j
            acc = acc + p.evalf(u, embed=embed) * lp / fact
        return acc

    def eval_jet(self, uval, depth):
        """[y(u), y'(u), ..., y^(depth-1)(u)] numerically."""
        out = []
        cur = self
        for k in range(depth):
            if k:
                cur = cur.derivative()
            out.append(cur.evalf(uval))
        return out

    def leading_monomials(self):
        """All (exponent, logpow) with nonzero coefficient, sorted."""
        mono = []
        F = self.field
        for j, p in enumerate(self.parts):
            for k, c in enumerate(p.coeffs):
                if not F.is_zero(c):
                    mono.append((p.expo + k, j))
        return sorted(mono)


def _class_key(expo):
    """Key identifying the congruence class of an exponent mod 1."""
    f = expo - int(expo)
    if f < 0:
        f += 1
    return f


def local_basis(op, point, nterms=40, verify=False):
    """Canonical Frobenius basis of `op` at `point`.

    Returns a list of LogSeries ordered by (valuation, log degree); each
    element is monic in its pivot monomial and reduced against the others.
    Exponents must be rational and the point regular (possibly ordinary).
    """
    loc = localize(op, point)
    K = loc.field
    w, symbols = loc.symbol_polys()
    ind = symbols[w]
    r = len(loc.polys) - 1
    if ind.degree != r:
        raise ValueError("point %s is an irregular singularity (indicial degree %d < order %d)"
                         % (point, ind.degree, r))
    roots = _rational_roots_over(K, ind)
    if sum(m for _, m in roots) != r:
        raise ValueError("non-rational local exponents at %s" % (point,))

    classes = {}
    for root, mult in roots:
        classes.setdefault(_class_key(root), []).append((root, mult))

    solutions = []
    for cls in classes.values():
        cls.sort()
        solutions.extend(_class_solutions(K, symbols, w, cls, nterms, loc.embed))

    basis = _echelonize(K, solutions)
    if len(basis) != r:
        raise RuntimeError("Frobenius construction found %d < %d independent solutions"
                           % (len(basis), r))
    if verify:
        for sol in basis:
            img = apply_local(loc, sol)
            for p in img.parts:
                if not p.is_zero_to_known_order():
                    raise RuntimeError("basis element not annihilated")
    return basis


def _class_solutions(K, symbols, w, cls, nterms, embed):
    """All candidate solutions of one congruence class of exponents."""
    jr = JetRing(K)
    mults = [m for _, m in cls]
    total = sum(mults)
    out = []
    for t, (root, mult) in enumerate(cls):
        budget = sum(mults[t + 1:])
        # inverse length with a wide margin: jets are tiny, margin is cheap
        jetlen = 4 * (budget + total + 2)
        # recurrence launched at this root: exponent root + eps
        length = nterms
        u = [jr.zero()] * length
        u[0] = jr.one()
        for n in range(1, length):
            acc = jr.zero()
            for m in range(n):
                if jr.is_zero_known(u[m]):
                    continue
                j = n - m
                b = symbols.get(w + j)
                if b is None:
                    continue
                bval = _poly_at_shift(jr, b, root + m)
                acc = jr.add(acc, jr.mul(u[m], bval))
            if jr.is_zero_known(acc) and acc[2]:
                u[n] = jr.zero()
                continue
            b0 = _poly_at_shift(jr, symbols[w], root + n)
            u[n] = jr.neg(jr.div(acc, b0, jetlen))
        pole = 0
        for n in range(length):
            if u[n][1]:
                pole = max(pole, -jr.valuation(u[n]))
        for q in range(pole + mult):
            parts = []
            maxlog = q
            for j in range(maxlog + 1):
                coeffs = []
                for n in range(length):
                    try:
                        c = jr.coeff(u[n], q - pole - j)
                    except IndexError:
                        break
                    coeffs.append(c)
                parts.append(ExactSeries(K, root, coeffs))
            sol = LogSeries(K, parts, embed).trimmed()
            if sol.parts:
                out.append(sol)
    return out


def _poly_at_shift(jr, poly, a):
    """Exact jet of poly(a + eps) for rational a."""
    K = jr.F
    shifted = poly.shift(field_from_rat(K, a))
    return jr.from_poly_coeffs(list(shifted.coeffs))


def _echelonize(K, solutions):
    """Echelon form over the (exponent, logpow) monomials.

    Pivot = earliest monomial in (exponent asc, logpow asc) order; returns
    basis sorted by pivot, each monic at its pivot and reduced against the
    later pivots.
    """
    work = [s.trimmed() for s in solutions if s.parts]
    basis = []  # list of (pivot, LogSeries)
    for sol in sorted(work, key=lambda s: s.leading_monomials()[0]):
        cur = sol
        changed = True
        while changed:
            changed = False
            monos = cur.leading_monomials()
            if not monos:
                break
            for piv, b in basis:
                c = _mono_coeff(cur, piv)
                if not K.is_zero(c):
                    cur = cur.add(b.scale(K.neg(c)))
                    changed = True
            monos = cur.leading_monomials()
            if not monos:
                break
        monos = cur.leading_monomials()
        if not monos:
            continue
        piv = monos[0]
        cur = cur.scale(K.inv(_mono_coeff(cur, piv)))
        # reduce existing basis against the new pivot
        newbasis = []
        for p2, b2 in basis:
            c = _mono_coeff(b2, piv)
            if not K.is_zero(c):
                b2 = b2.add(cur.scale(K.neg(c)))
            newbasis.append((p2, b2))
        newbasis.append((piv, cur))
        basis = newbasis
    basis.sort(key=lambda pb: pb[0])
    return [b.trimmed() for _, b in basis]


def _mono_coeff(sol, mono):
    expo, logpow = mono
    K = sol.field
    if logpow >= len(sol.parts):
        return K.zero()
    p = sol.parts[logpow]
    d = mpq(expo) - p.expo
    if d.denominator != 1 or d < 0 or int(d) >= len(p.coeffs):
        return K.zero()
    return p.coeffs[int(d)]


def apply_local(loc, sol):
    """Apply the localized operator (poly coefficients) to a LogSeries."""
    K = loc.field
    out = None
    cur = sol
    for i, p in enumerate(loc.polys):
        if i > 0:
            cur = cur.derivative()
        if p.is_zero():
            continue
        term_parts = []
        for part in cur.parts:
            term_parts.append(_poly_times(p, part))
        term = LogSeries(K, term_parts, sol.embed)
        out = term if out is None else out.add(term)
    return out


def _poly_times(p, s):
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
