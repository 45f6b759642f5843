"""Linear algebra: vectorized Gauss-Jordan mod p and exact elimination.

The modular side works on numpy int64 arrays with p < 2^31 so products
never overflow; it is the workhorse of the ODE-guessing pipeline where
matrices reach a few hundred columns by a couple thousand rows.

The exact side is a small dense row-reduction over any field object; it
is used for intertwiner ansatz solving and symmetric-power computations
where dimensions stay modest.
"""

from __future__ import annotations

import numpy as np

_INT64_SAFE_P = 1 << 31


def _check_p(p):
    if not (2 < p < _INT64_SAFE_P):
        raise ValueError("prime must satisfy 2 < p < 2^31 for int64 safety")


def modp_rref(mat, p, max_pivots=None):
    """Reduced row echelon form of an int64 matrix mod p.

    Returns ``(rref, pivot_cols)``; the input is not modified.
    """
    _check_p(p)
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    limit = nrows if max_pivots is None else min(nrows, max_pivots)
    for c in range(ncols):
        if r >= limit:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def modp_rank(mat, p):
    _, piv = modp_rref(mat, p)
    return len(piv)


def modp_nullspace(mat, p):
    """Basis of the right kernel of `mat` over GF(p), as int64 row vectors."""
    a, pivots = modp_rref(mat, p)
    ncols = a.shape[1]
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-a[r, fc]) % p
        basis.append(v)
    return basis


def modp_nullity(mat, p):
    a = np.asarray(mat)
    return a.shape[1] - modp_rank(a, p)


# --------------------------------------------------------------------------
# exact elimination over a field object


def rref_field(field, rows):
    """Reduced row echelon form over an arbitrary field.

    `rows` is a list of lists of field elements; returns (rref_rows, pivots).
    """
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(a):
            break
        pr = None
        for i in range(r, len(a)):
            if not field.is_zero(a[i][c]):
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace_field(field, rows, ncols=None):
    """Basis of the right kernel over `field`; vectors are lists."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty system")
        basis = []
        for c in range(ncols):
            v = [field.zero()] * ncols
            v[c] = field.one()
            basis.append(v)
        return basis
    ncols = len(rows[0])
    a, pivots = rref_field(field, rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(a[r][fc])
        basis.append(v)
    return basis


def solve_field(field, rows, rhs):
    """One solution of A x = b over `field`, or None if inconsistent.

    Under-determined systems return the solution with free variables zero.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    a, pivots = rref_field(field, aug)
    ncols = len(rows[0]) if rows else 0
    if ncols in pivots:
        return None  # pivot in the rhs column: inconsistent
    x = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][ncols]
    return x


class IncrementalKernel:
    """Feed vectors one at a time; reports the first linear dependence.

    Maintains an echelonized basis of the span.  ``add(v)`` returns None
    while vectors stay independent; when a dependence appears it returns
    the coefficients c_0..c_k (field elements, c_k = 1 for the newest
    vector) with sum_i c_i v_i = 0, and does not insert the vector.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []        # echelon rows
        self.pivots = []      # pivot column of each row
        self.history = []     # expression of each echelon row in inputs
        self.count = 0

    def add(self, v):
        F = self.field
        v = list(v)
        combo = [F.zero()] * self.count + [F.one()]
        self.count += 1
        for row, pc, hist in zip(self.rows, self.pivots, self.history):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
                combo = _combo_sub(F, combo, c, hist)
        pc = None
        for j, x in enumerate(v):
            if not F.is_zero(x):
                pc = j
                break
        if pc is None:
            return combo
        inv = F.inv(v[pc])
        v = [F.mul(inv, x) for x in v]
        combo = [F.mul(inv, c) for c in combo]
        self.rows.append(v)
        self.pivots.append(pc)
        self.history.append(combo)
        return None


def _combo_sub(field, a, c, b):
    """a - c*b with ragged coefficient lists."""
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero()
        y = b[i] if i < len(b) else field.zero()
        out.append(field.sub(x, field.mul(c, y)))
    return out
