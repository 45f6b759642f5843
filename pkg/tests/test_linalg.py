import numpy as np
from gmpy2 import mpq

from diagchi.exactcore import QQ
from diagchi.exactcore.linalg import (
    IncrementalKernel,
    modp_nullspace,
    modp_rank,
    nullspace_field,
    rref_field,
    solve_field,
)

P = (1 << 31) - 1


def test_modp_rank_and_nullspace():
    # rank-2 matrix with a known kernel vector (1, 1, -1)
    m = np.array([[1, 2, 3], [4, 5, 9], [5, 7, 12]], dtype=np.int64)
    assert modp_rank(m, P) == 2
    basis = modp_nullspace(m, P)
    assert len(basis) == 1
    v = basis[0]
    assert ((m @ v) % P == 0).all()


def test_modp_nullspace_vectors_satisfy_system():
    rng = np.random.default_rng(7)
    a = rng.integers(0, P, size=(6, 9)).astype(np.int64)
    basis = modp_nullspace(a, P)
    assert len(basis) == 3
    for v in basis:
        prod = np.zeros(6, dtype=object)
        for j in range(9):
            prod = (prod + a[:, j].astype(object) * int(v[j])) % P
        assert (prod == 0).all()


def test_rref_field_identity():
    rows = [[mpq(2), mpq(0)], [mpq(0), mpq(5)]]
    r, piv = rref_field(QQ, rows)
    assert piv == [0, 1]
    assert r[0] == [1, 0] and r[1] == [0, 1]


def test_solve_field():
    rows = [[mpq(1), mpq(2)], [mpq(3), mpq(4)]]
    x = solve_field(QQ, rows, [mpq(5), mpq(6)])
    assert x == [mpq(-4), mpq(9, 2)]
    # inconsistent
    rows = [[mpq(1), mpq(1)], [mpq(2), mpq(2)]]
    assert solve_field(QQ, rows, [mpq(1), mpq(3)]) is None


def test_nullspace_field():
    rows = [[mpq(1), mpq(1), mpq(1)]]
    basis = nullspace_field(QQ, rows)
    assert len(basis) == 2
    for v in basis:
        assert sum(v, mpq(0)) == 0


def test_incremental_kernel_reports_first_dependence():
    ik = IncrementalKernel(QQ, 3)
    assert ik.add([mpq(1), mpq(0), mpq(2)]) is None
    assert ik.add([mpq(0), mpq(1), mpq(3)]) is None
    combo = ik.add([mpq(2), mpq(3), mpq(13)])  # = 2*v0 + 3*v1
    assert combo is not None
    c0, c1, c2 = combo
    assert c2 == 1
    # check the reported relation
    v0 = [mpq(1), mpq(0), mpq(2)]
    v1 = [mpq(0), mpq(1), mpq(3)]
    v2 = [mpq(2), mpq(3), mpq(13)]
    for i in range(3):
        assert c0 * v0[i] + c1 * v1[i] + c2 * v2[i] == 0
