from gmpy2 import mpq

import pytest
from hypothesis import given, settings, strategies as st

from diagchi.exactcore import QQ, ExactSeries, Poly, RatFun
from diagchi.oreops import DiffOp


def op_from(*poly_lists):
    return DiffOp.from_poly_lists(poly_lists)


D = DiffOp.derivation()
X = DiffOp.multiplication(RatFun.x(QQ))


def test_leibniz_rule():
    # D * x = x*D + 1
    left = D * X
    expect = op_from([0], [0, 1]) + op_from([1])
    assert left == expect


def test_mul_associative_small():
    a = op_from([1, 2], [0, 1])
    b = op_from([0, 0, 1], [3])
    c = op_from([1], [1, 1], [0, 2])
    assert (a * b) * c == a * (b * c)


def test_adjoint_is_an_involution():
    L = op_from([1, 2, 3], [0, 1], [5, 0, 1])
    assert L.adjoint().adjoint() == L


def test_adjoint_antihomomorphism():
    a = op_from([1, 1], [0, 2])
    b = op_from([2], [1, 0, 1])
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()


def test_apply_to_series_annihilation():
    # (1-x) y' - y annihilates 1/(1-x)
    L = DiffOp([RatFun.from_ints(QQ, [-1]), RatFun.from_ints(QQ, [1, -1])])
    geo = ExactSeries.from_ints(QQ, [1] * 10)
    assert L.annihilates(geo)
    not_sol = ExactSeries.from_ints(QQ, [1, 1, 2, 3] + [0] * 4)
    assert not L.annihilates(not_sol)


def test_right_division_roundtrip():
    A = op_from([1, 3], [2, 0, 1], [0, 1], [1])
    B = op_from([5, 1], [1, 2])
    Q, R = A.right_divide(B)
    assert R.order < B.order
    assert Q * B + R == A


def test_right_divisible_after_composition():
    A = op_from([1, 1], [3])
    B = op_from([0, 2], [1], [1, 1])
    assert (A * B).is_right_divisible_by(B)
    q, r = (A * B).right_divide(B)
    assert q == A and r.is_zero()


def test_change_variable_square():
    # y'' = 0 has solutions 1, x; under x = t^2 they become 1, t^2,
    # annihilated by t y'' - y'
    L = op_from([0], [0], [1])
    phi = RatFun.x(QQ) * RatFun.x(QQ)
    M = L.change_variable(phi)
    t2 = ExactSeries.from_ints(QQ, [0, 0, 1] + [0] * 5)
    one = ExactSeries.from_ints(QQ, [1] + [0] * 7)
    assert M.annihilates(t2)
    assert M.annihilates(one)
    expect = DiffOp([RatFun.zero(QQ), RatFun.from_ints(QQ, [-1]), RatFun.from_ints(QQ, [0, 1])])
    assert M.equals_up_to_left_factor(expect)


def test_change_variable_mobius_on_geometric():
    # 1/(1-x) with x = t/(1+t) gives 1+t: check the pulled-back operator kills it
    L = DiffOp([RatFun.from_ints(QQ, [-1]), RatFun.from_ints(QQ, [1, -1])])
    t = RatFun.x(QQ)
    one = RatFun.constant(QQ, mpq(1))
    M = L.change_variable(t / (one + t))
    s = ExactSeries.from_ints(QQ, [1, 1] + [0] * 6)
    assert M.annihilates(s)


def test_normalized_strips_left_factor():
    L = op_from([1, 2], [0, 0, 3], [4])
    f = RatFun.from_ints(QQ, [2, 5], [7])
    scaled = L.lmul_ratfun(f)
    assert scaled.equals_up_to_left_factor(L)
    assert L.normalized() == scaled.normalized()


def test_shift_point():
    # y' - y at x = 1+u is unchanged (constant coefficients)
    L = op_from([-1], [1])
    assert L.shift_point(mpq(1)).normalized() == L.normalized()
    # x y' shifted to 1+u: (1+u) y'
    L2 = DiffOp([RatFun.zero(QQ), RatFun.x(QQ)])
    M2 = L2.shift_point(mpq(1))
    assert M2.coeffs[1] == RatFun.from_ints(QQ, [1, 1])


def test_serialization_roundtrip():
    L = DiffOp([
        RatFun.from_ints(QQ, [1, -3], [2]),
        RatFun.from_ints(QQ, [0, 5], [1, 7]),
        RatFun.from_ints(QQ, [11]),
    ])
    d = L.to_dict(name="sample")
    assert d["name"] == "sample"
    L2 = DiffOp.from_dict(d)
    assert L2.equals_up_to_left_factor(L)
    # bit-exact once normalized the same way
    assert L2.to_dict(name="sample") == d


coef_strategy = st.lists(
    st.lists(st.integers(-6, 6), min_size=1, max_size=3),
    min_size=1, max_size=3,
).map(lambda ls: DiffOp.from_poly_lists(ls))


@settings(max_examples=40, deadline=None)
@given(coef_strategy, coef_strategy)
def test_right_divide_property(a, b):
    if b.is_zero():
        return
    q, r = a.right_divide(b)
    assert q * b + r == a
    if not r.is_zero():
        assert r.order < b.order
