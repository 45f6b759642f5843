"""Intertwiners between differential operators.

An intertwiner from B to A is an operator P with A*P right-divisible by B:
it maps every solution of B to a solution of A.  We search for P by an
ansatz with undetermined numerator coefficients over a prescribed
denominator, turn annihilation of a Taylor solution basis of B into an
exact linear system, and verify any candidate by exact right division.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..exactcore import QQ, ExactSeries, Poly, RatFun
from ..exactcore.linalg import nullspace_field
from .diffops import DiffOp
from .frobenius import local_basis


def _ordinary_rational_point(*ops):
    """A small rational point ordinary for every operator given."""
    candidates = [mpq(0)] + [mpq(s, d) for d in (1, 2, 3, 5, 7) for s in
                             (1, -1, 2, -2, 3, -3, 5, -5)]
    for a in candidates:
        ok = True
        for op in ops:
            polys, _ = op.cleared()
            if QQ.is_zero(polys[-1].evaluate(a)):
                ok = False
                break
        if ok:
            return a
    raise RuntimeError("no small ordinary point found")


def find_intertwiner(A, B, order=None, max_degree=16, denominator=None,
                     base_point=None):
    """Find P (order < order of B unless overridden) with A*P = Q*B.

    Returns (P, Q) or None when no intertwiner exists within the bounds.
    The search is series-based but every candidate is certified by exact
    right division, so a non-None result is proof.
    """
    if order is None:
        order = B.order - 1
    if denominator is None:
        polysA, _ = A.cleared()
        polysB, _ = B.cleared()
        denominator = (polysA[-1] * polysB[-1]).squarefree_part()
    a = base_point if base_point is not None else _ordinary_rational_point(A, B)
    A0 = A.shift_point(a) if a != 0 else A
    B0 = B.shift_point(a) if a != 0 else B
    den0 = denominator if a == 0 else denominator.shift(a)

    ncols = (order + 1) * (max_degree + 1)
    nterms = ncols + A0.order + B0.order + 12
    sols = local_basis(B0, 0, nterms=nterms)
    den_series = ExactSeries(QQ, 0, list(den0.coeffs)
                             + [QQ.zero()] * (nterms - len(den0.coeffs)))
    invden = den_series.inverse()
    rows = []
    for sol in sols:
        if sol.log_degree() != 0:
            raise RuntimeError("expansion point unexpectedly singular for B")
        y = sol.parts[0]
        derivs = [y]
        for _ in range(order):
            derivs.append(derivs[-1].derivative())
        cols = []
        for i in range(order + 1):
            base = derivs[i] * invden
            for k in range(max_degree + 1):
                img = A0.apply_to_series(base.shift_exponent(k))
                cols.append(img)
        lo = min(c.expo for c in cols)
        hi = min(c.trunc_exp for c in cols)
        for m in range(int(lo), int(hi)):
            rows.append([c._coeff_or_zero(m) for c in cols])
    kernel = nullspace_field(QQ, rows, ncols=ncols)
    for vec in kernel:
        coeffs = []
        for i in range(order + 1):
            chunk = vec[i * (max_degree + 1): (i + 1) * (max_degree + 1)]
            num = Poly(QQ, chunk)
            if a != 0:
                num = num.shift(-a)  # back to the original coordinate
            coeffs.append(RatFun(num, denominator))
        P = DiffOp(coeffs, var=A.var, field=QQ)
        if P.is_zero():
            continue
        Q, R = (A * P).right_divide(B)
        if R.is_zero():
            return P, Q
    return None


def verify_intertwiner(A, P, B):
    """Exact check that A*P is right-divisible by B; returns the cofactor."""
    Q, R = (A * P).right_divide(B)
    if not R.is_zero():
        raise ValueError("A*P is not right-divisible by B")
    return Q
