"""Exact scalar domains.

All higher layers (polynomials, series, differential operators) are generic
over a tiny "field protocol": an object exposing

    zero() one() from_int(n) add(a,b) sub(a,b) neg(a) mul(a,b)
    inv(a) div(a,b) is_zero(a) eq(a,b) repr_elt(a)

whose elements are otherwise opaque.  Four domains are provided:

* ``QQ`` -- arbitrary-precision rationals (gmpy2.mpq elements),
* ``PrimeField(p)`` -- Z/pZ with int elements in [0, p),
* ``QuotientField(mod)`` -- Q[y]/(m(y)) for monic squarefree m, elements are
  coefficient tuples; used for expansions around algebraic points,
* ``DualField(base)`` -- base[eps]/(eps^2), elements are (value, derivative)
  pairs; used to differentiate closed formulas with respect to a parameter
  without symbolic machinery.

The module also hosts the two number-theoretic helpers used by the modular
ODE-fitting pipeline: Chinese remaindering and rational reconstruction.
"""

from __future__ import annotations

import math

from gmpy2 import mpq, mpz

#: exact rational scalar type used everywhere
Rat = type(mpq(1))


def rat(p, q=1):
    """Build an exact rational from ints or a string like '3/4'."""
    return mpq(p, q) if q != 1 else mpq(p)


class RationalField:
    """Field protocol wrapper around gmpy2 rationals."""

    name = "QQ"

    def zero(self):
        return mpq(0)

    def one(self):
        return mpq(1)

    def from_int(self, n):
        return mpq(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def repr_elt(self, a):
        return str(a)


QQ = RationalField()


class PrimeField:
    """Z/pZ for an odd prime p, elements plain ints in [0, p)."""

    def __init__(self, p):
        self.p = int(p)
        self.name = "GF(%d)" % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return int(n) % self.p

    def from_rat(self, q):
        """Image of an exact rational; raises ZeroDivisionError on bad primes."""
        return self.from_int(q.numerator) * self.inv(self.from_int(q.denominator)) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero mod %d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def repr_elt(self, a):
        return str(a % self.p)


# --- tiny list-based polynomial helpers over QQ, local to this module ------
# (polys.Poly depends on fields, so QuotientField keeps its own minimal kit)


def _pstrip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b):
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pstrip(out)


def _psub(a, b):
    out = [mpq(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _pstrip(out)


def _pdivmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [mpq(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] * inv_lead
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        _pstrip(a)
        if not a:
            break
    return _pstrip(q), a


class QuotientField:
    """Q[y]/(m(y)) for a monic irreducible m given by its coefficient list.

    Elements are tuples of gmpy2 rationals of length deg(m).  Only the
    operations required by the series/operator layers are implemented;
    ``inv`` uses the extended Euclidean algorithm in Q[y].
    """

    def __init__(self, modulus, gen_name="y"):
        mod = [mpq(c) for c in modulus]
        if not mod or mod[-1] == 0:
            raise ValueError("modulus must have nonzero leading coefficient")
        lead = mod[-1]
        self.modulus = tuple(c / lead for c in mod)
        self.degree = len(self.modulus) - 1
        if self.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        self.gen_name = gen_name
        self.name = "QQ[%s]/(%s)" % (gen_name, self._poly_str(self.modulus))

    def _poly_str(self, coeffs):
        terms = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("%s*%s" % (c, self.gen_name))
            else:
                terms.append("%s*%s^%d" % (c, self.gen_name, k))
        return " + ".join(terms) if terms else "0"

    def zero(self):
        return (mpq(0),) * self.degree

    def one(self):
        return tuple([mpq(1)] + [mpq(0)] * (self.degree - 1))

    def gen(self):
        """The residue class of y."""
        v = [mpq(0)] * self.degree
        if self.degree == 1:
            return (-self.modulus[0],)
        v[1] = mpq(1)
        return tuple(v)

    def from_int(self, n):
        return tuple([mpq(n)] + [mpq(0)] * (self.degree - 1))

    def from_rat(self, q):
        return tuple([mpq(q)] + [mpq(0)] * (self.degree - 1))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def _reduce(self, c):
        # reduce a coefficient list modulo the monic modulus
        c = list(c)
        m = self.modulus
        d = self.degree
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                c[k] = mpq(0)
                for i in range(d):
                    c[k - d + i] -= top * m[i]
        c = c[:d]
        while len(c) < d:
            c.append(mpq(0))
        return tuple(c)

    def mul(self, a, b):
        return self._reduce(_pmul(list(a), list(b)))

    def inv(self, a):
        ap = _pstrip(list(a))
        if not ap:
            raise ZeroDivisionError("inverse of zero in %s" % self.name)
        # extended Euclid: s*a + t*m = gcd
        r0, r1 = list(self.modulus), ap
        s0, s1 = [], [mpq(1)]
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("element not invertible (modulus not irreducible?)")
        c = 1 / r0[0]
        return self._reduce([x * c for x in s0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def eq(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def repr_elt(self, a):
        return self._poly_str(a)


class DualField:
    """base[eps]/(eps^2): elements are (value, derivative) pairs.

    Arithmetic follows the product/quotient rules, so pushing a parameter
    a + eps through a rational computation yields (f(a), f'(a)) exactly.
    """

    def __init__(self, base=QQ):
        self.base = base
        self.name = "Dual(%s)" % base.name

    def lift(self, a, da=None):
        return (a, da if da is not None else self.base.zero())

    def zero(self):
        return (self.base.zero(), self.base.zero())

    def one(self):
        return (self.base.one(), self.base.zero())

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero())

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def sub(self, a, b):
        return (self.base.sub(a[0], b[0]), self.base.sub(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        B = self.base
        return (B.mul(a[0], b[0]), B.add(B.mul(a[0], b[1]), B.mul(a[1], b[0])))

    def inv(self, a):
        B = self.base
        i = B.inv(a[0])
        return (i, B.neg(B.mul(B.mul(i, i), a[1])))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return self.base.is_zero(a[0]) and self.base.is_zero(a[1])

    def eq(self, a, b):
        return self.base.eq(a[0], b[0]) and self.base.eq(a[1], b[1])

    def repr_elt(self, a):
        return "(%s + eps*%s)" % (self.base.repr_elt(a[0]), self.base.repr_elt(a[1]))


# --------------------------------------------------------------------------
# modular <-> rational bridges


def crt_combine(residues, moduli):
    """Combine residues by the Chinese remainder theorem.

    Returns ``(r, M)`` with ``M = prod(moduli)`` and ``r`` in ``[0, M)``
    congruent to each residue modulo its modulus.  Moduli must be pairwise
    coprime (they are distinct primes in this package).
    """
    r, m = 0, 1
    for a, p in zip(residues, moduli):
        a, p = int(a) % int(p), int(p)
        g = math.gcd(m, p)
        if g != 1:
            raise ValueError("moduli not coprime")
        # r' = r + m * ((a - r)/m mod p)
        t = ((a - r) * pow(m, -1, p)) % p
        r = r + m * t
        m = m * p
    return r % m, m


def rational_reconstruct(residue, modulus, bound):
    """Recover p/q with ``q*residue = p (mod modulus)``, ``|p|, q <= bound``.

    Runs the half-extended Euclidean algorithm on (modulus, residue) and
    stops at the first remainder <= bound; returns the corresponding
    fraction as an exact rational, or None when the stopping convergent
    violates the bounds or is degenerate.  When ``2*bound**2 < modulus``
    the answer, if any, is unique; callers working near the boundary must
    verify the congruence themselves (it always holds for non-None results).
    """
    m = int(modulus)
    a = int(residue) % m
    bound = int(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0:
        return None
    p, q = r1, t1
    if q < 0:
        p, q = -p, -q
    if q > bound or abs(p) > bound:
        return None
    if math.gcd(p, q) != 1:
        return None
    if math.gcd(q, m) != 1:
        return None
    return mpq(p, q)
