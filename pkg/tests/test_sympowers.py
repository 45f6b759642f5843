from gmpy2 import mpq

from diagchi.exactcore import QQ, Poly, RatFun
from diagchi.oreops import DiffOp, symmetric_square, exterior_square


def op_from(*coeff_lists):
    return DiffOp.from_poly_lists(list(coeff_lists))


def test_sym_square_of_d2_is_d3():
    # solutions of y''=0 are 1, x; products span 1, x, x^2 -> y'''=0
    L = op_from([0], [0], [1])
    S = symmetric_square(L)
    assert S.order == 3
    expected = op_from([0], [0], [0], [1])
    assert S.equals_up_to_left_factor(expected)


def test_sym_square_annihilates_squared_solution():
    # Gauss operator for 2F1(1/2,1/2;1;x)
    B = DiffOp([
        RatFun.from_ints(QQ, [-1], [4]),
        RatFun.from_ints(QQ, [1, -2]),
        RatFun.from_ints(QQ, [0, 1, -1]),
    ])
    from diagchi.oreops import local_basis
    y = local_basis(B, 0, nterms=30)[0].parts[0]
    S = symmetric_square(B)
    assert S.order == 3
    assert S.annihilates(y * y)


def test_exterior_square_order2_is_wronskian_equation():
    # for c2 y'' + c1 y' + c0 y the Wronskian satisfies c2 W' + c1 W = 0
    L = op_from([5, 1], [3], [2, 7])
    E = exterior_square(L)
    assert E.order == 1
    expected = op_from([3], [2, 7])
    assert E.equals_up_to_left_factor(expected)


def test_exterior_square_order3():
    # order-3 operator with solutions 1, x, x^2: wronskians of pairs are
    # spanned by 1, x, x^2 again, so ext^2 should be D^3 (up to left factor)
    L = op_from([0], [0], [0], [1])
    E = exterior_square(L)
    assert E.order == 3
    assert E.equals_up_to_left_factor(L)


def test_sym_square_of_euler_operator():
    # x^2 y'' + x y' - y/4 has solutions x^(1/2), x^(-1/2); their pairwise
    # products x, 1, 1/x solve the Euler operator with exponents {1,0,-1}
    L = DiffOp([
        RatFun.from_ints(QQ, [-1], [4]),
        RatFun.from_ints(QQ, [0, 1]),
        RatFun.from_ints(QQ, [0, 0, 1]),
    ])
    S = symmetric_square(L)
    expected = op_from([0], [0], [0, 0, 3], [0, 0, 0, 1])
    assert S.equals_up_to_left_factor(expected)
