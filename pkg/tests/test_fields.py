"""Scalar domains: rationals, prime fields, quotient rings, dual numbers."""

from gmpy2 import mpq

import pytest
from hypothesis import given, strategies as st

from diagchi.exactcore import (
    QQ,
    DualField,
    PrimeField,
    QuotientField,
    crt_combine,
    rational_reconstruct,
)


def test_rational_field_basics():
    assert QQ.add(mpq(1, 2), mpq(1, 3)) == mpq(5, 6)
    assert QQ.inv(mpq(-3, 7)) == mpq(-7, 3)
    assert QQ.is_zero(QQ.sub(mpq(2, 4), mpq(1, 2)))


def test_prime_field():
    F = PrimeField(101)
    assert F.mul(50, 50) == 2500 % 101
    assert F.mul(F.inv(37), 37) == 1
    assert F.from_rat(mpq(1, 2)) == 51  # 2*51 = 102 = 1 mod 101
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_quotient_field_omega():
    # Q[y]/(y^2+y+1): a primitive cube root of unity
    K = QuotientField([1, 1, 1])
    w = K.gen()
    w2 = K.mul(w, w)
    assert K.is_zero(K.add(K.add(w2, w), K.one()))
    assert K.eq(K.mul(w, w2), K.one())  # w^3 = 1
    inv_w = K.inv(w)
    assert K.eq(inv_w, w2)


def test_quotient_field_inverse_random():
    K = QuotientField([-2, 0, 1])  # Q(sqrt(2))
    r2 = K.gen()
    x = K.add(K.from_rat(mpq(3, 5)), K.mul(K.from_rat(mpq(7, 2)), r2))
    assert K.eq(K.mul(x, K.inv(x)), K.one())


def test_dual_field_derivative_of_rational_function():
    # f(a) = (a^2 + 1)/(a - 2) at a = 3: f = 10, f' = (2a(a-2) - (a^2+1))/(a-2)^2 = -4
    D = DualField(QQ)
    a = D.lift(mpq(3), mpq(1))
    num = D.add(D.mul(a, a), D.one())
    den = D.sub(a, D.from_int(2))
    f = D.div(num, den)
    assert f[0] == mpq(10)
    assert f[1] == mpq(-4)


def test_crt_combine():
    r, m = crt_combine([2, 3, 2], [3, 5, 7])
    assert m == 105
    assert r % 3 == 2 and r % 5 == 3 and r % 7 == 2


def test_rational_reconstruct_congruence_and_bounds():
    # residue of 14 mod 101 with bound 20: several fractions qualify;
    # the contract is congruence + bounds, not a particular representative.
    got = rational_reconstruct(14, 101, 20)
    assert got is not None
    p, q = int(got.numerator), int(got.denominator)
    assert abs(p) <= 20 and 0 < q <= 20
    assert (q * 14 - p) % 101 == 0


def test_rational_reconstruct_unique_small():
    # 2*50 = 100 = -1 mod 101, and 2*3^2 < 101 makes -1/2 the unique answer
    assert rational_reconstruct(50, 101, 3) == mpq(-1, 2)


def test_rational_reconstruct_none_when_nothing_fits():
    # mod 2^31-1, a residue engineered to have no tiny representative
    p = (1 << 31) - 1
    assert rational_reconstruct(123456789, p, 5) is None


@given(st.integers(-999, 999), st.integers(1, 999))
def test_rational_reconstruct_roundtrip(num, den):
    from math import gcd

    g = gcd(abs(num), den)
    num, den = num // g, den // g
    m = (1 << 61) - 1  # prime, comfortably above 2*999^2
    if den % m == 0:
        return
    residue = (num * pow(den, -1, m)) % m
    got = rational_reconstruct(residue, m, 1000)
    assert got == mpq(num, den)
