"""Local bases: ordinary points, logarithmic cases, algebraic points."""

import mpmath
from gmpy2 import mpq

import pytest

from diagchi.exactcore import QQ, ExactSeries, RatFun
from diagchi.exactcore.bigfloat import working_digits, almost_equal
from diagchi.oreops import DiffOp, local_basis, local_exponents, AlgebraicPoint
from diagchi.oreops.indicial import indicial_polynomial


def op_from(*poly_lists):
    return DiffOp.from_poly_lists(poly_lists)


def test_ordinary_point_taylor_basis():
    # y'' + y: basis cos-like (1 - x^2/2 + ...) and sin-like (x - x^3/6 + ...)
    L = op_from([1], [0], [1])
    basis = local_basis(L, 0, nterms=8, verify=True)
    assert len(basis) == 2
    cosl, sinl = basis
    assert cosl.parts[0].coefficient(0) == 1
    assert cosl.parts[0].coefficient(1) == 0
    assert cosl.parts[0].coefficient(2) == mpq(-1, 2)
    assert sinl.parts[0].coefficient(1) == 1
    assert sinl.parts[0].coefficient(3) == mpq(-1, 6)


def test_pure_log_pair():
    # x y'' + y' has solutions 1 and ln(x)
    L = op_from([0], [1], [0, 1])
    basis = local_basis(L, 0, nterms=6, verify=True)
    assert len(basis) == 2
    const, logsol = basis
    assert const.log_degree() == 0
    assert const.parts[0].coefficient(0) == 1
    assert logsol.log_degree() == 1
    assert logsol.parts[1].coefficient(0) == 1
    assert logsol.parts[0].is_zero_to_known_order()


def test_exponent_three_halves():
    # 2x y'' - y' has solutions 1 and x^(3/2)
    L = op_from([0], [-1], [0, 2])
    expo = local_exponents(L, 0)
    assert expo == [(mpq(0), 1), (mpq(3, 2), 1)]
    basis = local_basis(L, 0, nterms=6, verify=True)
    vals = sorted(b.valuation() for b in basis)
    assert vals == [0, mpq(3, 2)]


def test_gauss_log_case_at_origin():
    # hypergeometric(1/2,1/2;1): x(1-x) y'' + (1-2x) y' - (1/4) y
    L = DiffOp([
        RatFun.from_ints(QQ, [-1], [4]),
        RatFun.from_ints(QQ, [1, -2]),
        RatFun.from_ints(QQ, [0, 1, -1]),
    ])
    basis = local_basis(L, 0, nterms=8, verify=True)
    assert len(basis) == 2
    analytic, logged = basis
    # analytic one is 2F1(1/2,1/2;1;x) = 1 + x/4 + 9x^2/64 + 25 x^3/256...
    p = analytic.parts[0]
    assert p.coefficient(0) == 1
    assert p.coefficient(1) == mpq(1, 4)
    assert p.coefficient(2) == mpq(9, 64)
    assert p.coefficient(3) == mpq(25, 256)
    assert analytic.log_degree() == 0
    assert logged.log_degree() == 1
    assert logged.parts[1].coefficient(0) == 1


def test_integer_separated_exponents_with_log():
    # Bessel-like: x y'' + y, exponents 0 and 1, log appears
    L = op_from([1], [0], [0, 1])
    basis = local_basis(L, 0, nterms=8, verify=True)
    assert len(basis) == 2
    logdegs = sorted(b.log_degree() for b in basis)
    assert logdegs == [0, 1]
    # the no-log solution has valuation 1: y = x - x^2/2 + x^3/12 - ...
    nolog = [b for b in basis if b.log_degree() == 0][0]
    assert nolog.valuation() == 1
    assert nolog.parts[0].coefficient(2) == mpq(-1, 2)
    assert nolog.parts[0].coefficient(3) == mpq(1, 12)


def test_no_spurious_log_when_resonance_cancels():
    # Euler operator with exponents 0,2 and no log: x^2 y'' - 2x y' + 2 y
    # (solutions x and x^2 -- wait, exponents 1 and 2; use x^2 y'' - 2 y:
    #  exponents -1 and 2, integer-separated, pure powers, no logs)
    L = op_from([2], [0], [0, 0, -1]).scale(mpq(-1))
    basis = local_basis(L, 0, nterms=6, verify=True)
    assert all(b.log_degree() == 0 for b in basis)
    vals = sorted(b.valuation() for b in basis)
    assert vals == [mpq(-1), mpq(2)]


def test_local_basis_at_one():
    # geometric: (1-x) y' - y, at the singular point x=1 exponent is -1
    L = DiffOp([RatFun.from_ints(QQ, [-1]), RatFun.from_ints(QQ, [1, -1])])
    expo = local_exponents(L, 1)
    assert expo == [(mpq(-1), 1)]
    basis = local_basis(L, 1, nterms=5, verify=True)
    assert basis[0].valuation() == -1


def test_local_basis_at_infinity():
    # y' - y/x^2: solution exp(-1/x) -- irregular at 0; but at infinity
    # substitute and check a plain case instead: x y' - 2 y has solution x^2,
    # at infinity exponent becomes -2 in u = 1/x... i.e. u^(-2)
    L = DiffOp([RatFun.from_ints(QQ, [-2]), RatFun.from_ints(QQ, [0, 1])])
    expo = local_exponents(L, "inf")
    assert expo == [(mpq(-2), 1)]


def test_algebraic_point_basis():
    # (1+x+x^2) y' - (1+2x) y annihilates 1+x+x^2; at a root of 1+x+x^2
    # the local exponent is 1
    L = DiffOp([RatFun.from_ints(QQ, [-1, -2]), RatFun.from_ints(QQ, [1, 1, 1])])
    pt = AlgebraicPoint((1, 1, 1), complex(-0.5, 0.8660254))
    expo = local_exponents(L, pt)
    assert expo == [(mpq(1), 1)]
    basis = local_basis(L, pt, nterms=5, verify=True)
    sol = basis[0]
    assert sol.valuation() == 1
    # numeric check: the solution must be proportional to 1+x+x^2 near the
    # root, with one u-independent (complex) proportionality constant
    with working_digits(30):
        x0 = pt.value()
        ratios = []
        for u in (mpmath.mpf(1) / 64, mpmath.mpf(1) / 128):
            got = sol.evalf(u)
            ref = 1 + (x0 + u) + (x0 + u) ** 2
            ratios.append(got / ref)
        assert almost_equal(ratios[0], ratios[1], 20)


def test_indicial_polynomial_direct():
    # x y'' + y': indicial s^2
    L = op_from([0], [1], [0, 1])
    ind = indicial_polynomial(L, 0)
    assert ind.monic().coeffs == (mpq(0), mpq(0), mpq(1))


def test_eval_jet_consistency():
    # for y'' + y, jet of cos-like solution at small x matches cos numerically
    L = op_from([1], [0], [1])
    basis = local_basis(L, 0, nterms=25)
    cosl = basis[0]
    with working_digits(25):
        jet = cosl.eval_jet(mpmath.mpf(1) / 10, 2)
        assert almost_equal(jet[0], mpmath.cos(mpmath.mpf(1) / 10), 18)
        assert almost_equal(jet[1], -mpmath.sin(mpmath.mpf(1) / 10), 16)
