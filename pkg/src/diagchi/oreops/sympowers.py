"""Symmetric and exterior squares of a differential operator.

The square of an operator of order r annihilates products y*z (resp.
Wronskian-like combinations y*z' - y'*z) of solutions.  We differentiate
the generic monomial repeatedly in the pair algebra -- reducing r-th
derivatives through the operator -- and detect the first linear dependence
over Q(x) with an incremental echelon; the dependence coefficients are the
coefficients of the square.
"""

from __future__ import annotations

from ..exactcore import RatFun
from ..exactcore.linalg import IncrementalKernel
from .diffops import DiffOp


class _RatFunField:
    """Field protocol adapter for Q(x) with RatFun elements."""

    def __init__(self, base):
        self.base = base
        self.name = "Frac(%s[x])" % base.name

    def zero(self):
        return RatFun.zero(self.base)

    def one(self):
        return RatFun.constant(self.base, self.base.one())

    def from_int(self, n):
        return RatFun.constant(self.base, self.base.from_int(n))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return a == b

    def repr_elt(self, a):
        return repr(a)


def _pair_basis(r, anti):
    if anti:
        return [(i, j) for i in range(r) for j in range(i + 1, r)]
    return [(i, j) for i in range(r) for j in range(i, r)]


class _SquareAlgebra:
    """Vectors over pair monomials y^(i) z^(j) (symmetrized or antisymmetrized)."""

    def __init__(self, op, anti):
        self.anti = anti
        self.r = op.order
        self.F = _RatFunField(op.field)
        self.basis = _pair_basis(self.r, anti)
        self.index = {b: k for k, b in enumerate(self.basis)}
        lead = op.coeffs[-1]
        self.red = [(-(op.coeff(i) / lead)) for i in range(self.r)]

    def dim(self):
        return len(self.basis)

    def _insert(self, vec, i, j, coeff):
        """Add coeff * (the pair y^(i) z^(j) + y^(j) z^(i), resp. the
        antisymmetric pair), reducing indices >= r through the operator.

        Basis convention: M_{ij} (i<j) is the symmetrized pair, M_{ii} is the
        single monomial y^(i) z^(i) -- so inserting the pair (a, a) lands as
        2 * M_{aa}.
        """
        F = self.F
        if F.is_zero(coeff):
            return
        if self.anti:
            if i == j:
                return
            if i > j:
                i, j = j, i
                coeff = -coeff
        else:
            if i > j:
                i, j = j, i
        if j >= self.r:
            # reduce z^(j): j can be at most r here (single-step reductions)
            for k, ck in enumerate(self.red):
                self._insert(vec, i, k, coeff * ck)
            return
        if not self.anti and i == j:
            coeff = coeff + coeff
        idx = self.index[(i, j)]
        vec[idx] = vec[idx] + coeff

    def start_vector(self):
        vec = [self.F.zero()] * self.dim()
        if self.anti:
            vec[self.index[(0, 1)]] = self.F.one()
        else:
            vec[self.index[(0, 0)]] = self.F.one()
        return vec

    def derivative(self, vec):
        """d/dx in the pair algebra."""
        F = self.F
        out = [c.derivative() for c in vec]
        for k, (i, j) in enumerate(self.basis):
            c = vec[k]
            if F.is_zero(c):
                continue
            if self.anti or i != j:
                self._insert(out, i + 1, j, c)
                self._insert(out, i, j + 1, c)
            else:
                # m_ii: d(y^(i) z^(i)) = m_{i,i+1} (already counts both terms)
                self._insert(out, i, i + 1, c)
        return out


def _square(op, anti):
    if op.order < (2 if anti else 1):
        raise ValueError("operator order too small")
    alg = _SquareAlgebra(op, anti)
    F = alg.F
    kern = IncrementalKernel(F, alg.dim())
    vec = alg.start_vector()
    vectors = [vec]
    combo = kern.add(vec)
    while combo is None:
        vec = alg.derivative(vectors[-1])
        vectors.append(vec)
        combo = kern.add(vec)
    out = DiffOp(list(combo), var=op.var, field=op.field)
    return out.normalized()


def symmetric_square(op):
    """Minimal operator annihilating products of pairs of solutions."""
    return _square(op, anti=False)


def exterior_square(op):
    """Minimal operator annihilating the 2x2 Wronskians y z' - y' z."""
    return _square(op, anti=True)
