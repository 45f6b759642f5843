from gmpy2 import mpq

import pytest
from hypothesis import given, strategies as st

from diagchi.exactcore import QQ, ExactSeries
from diagchi.exactcore.bigfloat import working_digits, almost_equal


def geometric(n):
    return ExactSeries.from_ints(QQ, [1] * n)


def test_mul_truncation_is_honest():
    a = ExactSeries.from_ints(QQ, [1, 1, 1])            # known to O(x^3)
    b = ExactSeries.from_ints(QQ, [1, 2], expo=2)       # x^2(1+2x), O(x^4)
    c = a * b
    assert c.expo == 2
    # knowledge: min(3 + 2, 4 + 0) = 4 -> only x^2 and x^3 are certain
    assert c.trunc_exp == 4
    assert [int(x) for x in c.coeffs] == [1, 3]


def test_inverse_of_one_minus_x():
    one_minus_x = ExactSeries.from_ints(QQ, [1, -1] + [0] * 8)
    inv = one_minus_x.inverse()
    assert [int(c) for c in inv.coeffs] == [1] * 10


def test_division_with_valuation_shift():
    # x^2/(x - x^2) = x * 1/(1-x)
    num = ExactSeries.from_ints(QQ, [1] + [0] * 7, expo=2)
    den = ExactSeries.from_ints(QQ, [1, -1] + [0] * 6, expo=1)
    q = num / den
    assert q.expo == 1
    assert all(int(c) == 1 for c in q.coeffs)


def test_pow_rat_binomial():
    # (1 - 4x)^(-1/2) = sum binom(2n, n) x^n
    base = ExactSeries.from_ints(QQ, [1, -4] + [0] * 8)
    s = base.pow_rat(mpq(-1, 2))
    assert [int(c) for c in s.coeffs[:6]] == [1, 2, 6, 20, 70, 252]


def test_pow_rat_with_fractional_exponent_leading_term():
    # (x^2*(1+x))^(1/2) = x*(1+x)^(1/2)
    base = ExactSeries.from_ints(QQ, [1, 1] + [0] * 6, expo=2)
    s = base.pow_rat(mpq(1, 2))
    assert s.expo == 1
    assert s.coeffs[0] == 1 and s.coeffs[1] == mpq(1, 2)


def test_compose_exp_log():
    # log(1/(1-x)) has coefficients 1/n; plug into exp: back to 1/(1-x)
    n = 12
    log_s = ExactSeries(QQ, 1, [mpq(1, k) for k in range(1, n)])
    exp_s = ExactSeries(QQ, 0, [mpq(1)] + [mpq(1)] * 0)
    # build exp series sum x^k/k!
    fact = [mpq(1)]
    for k in range(1, n):
        fact.append(fact[-1] * k)
    exp_s = ExactSeries(QQ, 0, [1 / f for f in fact])
    composed = exp_s.compose(log_s)
    assert [int(c) for c in composed.coeffs[: n - 1]] == [1] * (n - 1)


def test_derivative_rational_exponent():
    # d/dx x^(1/2)(1 + x) = (1/2)x^(-1/2) + (3/2) x^(1/2)
    s = ExactSeries(QQ, mpq(1, 2), [mpq(1), mpq(1)])
    d = s.derivative()
    assert d.expo == mpq(-1, 2)
    assert d.coeffs[0] == mpq(1, 2) and d.coeffs[1] == mpq(3, 2)


def test_coefficient_access_and_truncation_guard():
    s = ExactSeries.from_ints(QQ, [5, 7], expo=-1)
    assert s.coefficient(-1) == 5
    assert s.coefficient(mpq(-3)) == 0      # below the window: exact zero
    assert s.coefficient(mpq(1, 2)) == 0    # off-lattice exponent
    with pytest.raises(IndexError):
        s.coefficient(1)                    # beyond O(x^1)


def test_scale_argument():
    s = ExactSeries.from_ints(QQ, [1, 1, 1, 1])
    t = s.scale_argument(mpq(4))
    assert [int(c) for c in t.coeffs] == [1, 4, 16, 64]


def test_evalf_matches_exact_geometric():
    s = geometric(40)
    with working_digits(30):
        v = s.evalf(mpq(1, 3))
        assert almost_equal(v, mpq(3, 2), 15)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6),
       st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_mul_commutes(a, b):
    sa = ExactSeries.from_ints(QQ, a)
    sb = ExactSeries.from_ints(QQ, b)
    left = sa * sb
    right = sb * sa
    assert left.expo == right.expo
    assert left.coeffs == right.coeffs


@given(st.lists(st.integers(-5, 5).filter(lambda v: v != 0), min_size=1, max_size=5)
       .map(lambda c: ExactSeries.from_ints(QQ, c)))
def test_series_inverse_roundtrip(s):
    inv = s.inverse()
    prod = s * inv
    nz = [c for c in prod.coeffs if c != 0]
    assert prod.valuation() == 0
    assert prod.coeffs[0] == 1
    assert all(c == 0 for c in prod.coeffs[1:])
