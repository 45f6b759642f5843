from gmpy2 import mpq

import pytest
from hypothesis import given, strategies as st

from diagchi.exactcore import QQ, Poly, RatFun, PrimeField


def P(*ints):
    return Poly.from_ints(QQ, ints)


def test_mul_divmod_roundtrip():
    a = P(1, 0, -3, 2)
    b = P(-1, 1)
    q, r = (a * b).divmod(b)
    assert q == a
    assert r.is_zero()


def test_divmod_remainder():
    a = P(1, 2, 3)
    b = P(1, 1)
    q, r = a.divmod(b)
    assert (q * b + r) == a
    assert r.degree < b.degree


def test_gcd_common_factor():
    g = P(-1, 0, 1)  # x^2 - 1
    a = g * P(3, 1)
    b = g * P(5, 0, 7)
    assert a.gcd(b) == g.monic()


def test_gcd_coprime():
    assert P(1, 1).gcd(P(2, 1)).degree == 0


def test_rational_roots_with_multiplicity():
    # x^2 (x - 1)^3 (2x + 1)
    p = P(0, 0, 1) * P(-1, 1) ** 3 * P(1, 2)
    roots = p.rational_roots()
    assert (mpq(0), 2) in roots
    assert (mpq(1), 3) in roots
    assert (mpq(-1, 2), 1) in roots


def test_shift_and_compose():
    p = P(1, 2, 1)  # (x+1)^2
    assert p.shift(mpq(-1)) == P(0, 0, 1)
    inner = P(0, 0, 1)
    assert P(0, 1).compose(inner) == inner


def test_squarefree_part():
    p = P(-1, 1) ** 3 * P(1, 1)
    sq = p.squarefree_part()
    assert sq == (P(-1, 1) * P(1, 1)).monic()


def test_integer_coeffs_clears_denominators():
    p = Poly(QQ, [mpq(1, 2), mpq(1, 3)])
    assert p.integer_coeffs() == [3, 2]


def test_poly_over_prime_field():
    F = PrimeField(7)
    a = Poly.from_ints(F, [1, 2, 3])
    b = Poly.from_ints(F, [6, 5, 4])
    assert (a + b).is_zero()  # 7, 7, 7 -> identically zero mod 7


def test_ratfun_arithmetic():
    x = RatFun.x(QQ)
    one = RatFun.constant(QQ, mpq(1))
    f = one / (one - x)
    g = one / (one + x)
    h = f + g
    # 2/(1-x^2)
    expect = RatFun.from_ints(QQ, [2], [1, 0, -1])
    assert h == expect


def test_ratfun_derivative():
    x = RatFun.x(QQ)
    one = RatFun.constant(QQ, mpq(1))
    f = one / (one - x)
    assert f.derivative() == (one / ((one - x) * (one - x)))


def test_ratfun_compose():
    x = RatFun.x(QQ)
    one = RatFun.constant(QQ, mpq(1))
    f = (one - x).inverse()          # 1/(1-x)
    g = x * x                        # x^2
    assert f.compose(g) == (one - x * x).inverse()
    # and a genuinely rational inner map
    inner = x / (one + x)
    h = f.compose(inner)             # 1/(1 - x/(1+x)) = 1+x
    assert h == one + x


def test_ratfun_evaluate_and_pole():
    f = RatFun.from_ints(QQ, [1], [(-1), 1])  # 1/(x-1)
    assert f.evaluate(mpq(3)) == mpq(1, 2)
    with pytest.raises(ZeroDivisionError):
        f.evaluate(mpq(1))


small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(lambda c: P(*c))


@given(small_polys, small_polys, small_polys)
def test_poly_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(small_polys, small_polys)
def test_gcd_divides_both(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = a.gcd(b)
    if g.is_zero():
        return
    assert (a % g).is_zero()
    assert (b % g).is_zero()
