from fractions import Fraction as F

import pytest

from powersums.engine import A_POLY, B_POLY, ConsistencyError
from powersums.exact_poly import BiPoly, X, Y, bipoly_substitute, poly_eval
from powersums.resultant import (
    bareiss_determinant,
    primitive_integer,
    raw_resultant,
    relation_polynomial,
    sylvester_matrix,
)

# 8x^3 + x^2 - 9y^2: with u = n + 1/2, A = (u^2 - 1/4)/2 and
# 9B^2 = u^2 (u^2 - 1/4)^2 = (2A + 1/4)(2A)^2, eliminated by hand
T12 = BiPoly({(3, 0): 8, (2, 0): 1, (0, 2): -9})

FROZEN = {
    (1, 2): T12,
    (1, 3): BiPoly({(2, 0): 1, (0, 1): -1}),
    (1, 4): BiPoly({(5, 0): 288, (4, 0): -60, (3, 0): -4, (2, 0): 1, (0, 2): -225}),
    (2, 3): BiPoly({(4, 0): 81, (2, 1): -18, (0, 3): -64, (0, 2): 1}),
    (2, 4): BiPoly({(5, 0): 972, (3, 0): -7, (2, 1): -90, (1, 2): -375, (0, 3): -500}),
    (3, 4): BiPoly(
        {(5, 0): 82944, (4, 0): -5904, (3, 0): 136, (2, 2): -27000, (2, 0): -1, (1, 2): 450, (0, 4): -50625}
    ),
}

PAIRS = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]


def const(c):
    return BiPoly.constant(c)


def test_bareiss_matches_cofactor_on_numbers():
    m = [[const(2), const(-1), const(0)], [const(1), const(3), const(4)], [const(0), const(5), const(-2)]]
    # cofactor expansion: 2*(-6-20) - (-1)*(-2-0) + 0 = -54
    assert bareiss_determinant(m) == const(-54)


def test_bareiss_needs_pivoting():
    m = [[const(0), const(1)], [const(1), const(0)]]
    assert bareiss_determinant(m) == const(-1)


def test_bareiss_symbolic_2x2():
    m = [[X, Y], [Y, X]]
    assert bareiss_determinant(m) == X * X - Y * Y


def test_sylvester_shape():
    f = [const(1), const(2), const(3)]  # 3n^2 + 2n + 1
    g = [const(-1), const(1)]  # n - 1
    rows = sylvester_matrix(f, g)
    assert len(rows) == 3 and all(len(r) == 3 for r in rows)
    # Res(3n^2+2n+1, n-1) = f(1) = 6
    assert bareiss_determinant(rows) == const(6)


def test_relation_1_3_is_cube_identity():
    assert relation_polynomial(1, 3) == X * X - Y


def test_relation_1_2_hand_oracle():
    assert relation_polynomial(1, 2) == T12


def test_unreduced_1_3_is_square():
    raw = primitive_integer(raw_resultant(1, 3))
    assert raw == (X * X - Y) ** 2


@pytest.mark.parametrize("pair", PAIRS)
def test_frozen(pair):
    assert relation_polynomial(*pair) == FROZEN[pair]


@pytest.mark.parametrize("pair", PAIRS)
def test_vanishes_on_curve(half, pair):
    i, j = pair
    si, sj = half.closed_form(i), half.closed_form(j)
    t = relation_polynomial(i, j, half)
    assert not t.is_zero()
    assert bipoly_substitute(t, si, sj).is_zero()
    for n in range(0, 101):
        assert t(poly_eval(si, n), poly_eval(sj, n)) == 0


@pytest.mark.parametrize("pair", PAIRS)
def test_integer_primitive(pair):
    t = relation_polynomial(*pair)
    from math import gcd

    vals = list(t.terms.values())
    assert all(v.denominator == 1 for v in vals)
    assert gcd(*(int(v) for v in vals)) == 1
    assert t.lex_leading()[1] > 0


def test_swapped_order_is_transpose():
    t = relation_polynomial(3, 1)
    assert t == primitive_integer(BiPoly({(b, a): c for (a, b), c in relation_polynomial(1, 3).terms.items()}))


def test_matches_sympy_up_to_scalar():
    sp = pytest.importorskip("sympy")
    n, x, y = sp.symbols("n x y")
    m = sp.Symbol("m")
    for i, j in PAIRS:
        si = sp.expand(sp.summation(m**i, (m, 1, n)))
        sj = sp.expand(sp.summation(m**j, (m, 1, n)))
        theirs = sp.expand(sp.resultant(si - x, sj - y, n))
        mine = sum(
            sp.Rational(c.numerator, c.denominator) * x**a * y**b
            for (a, b), c in raw_resultant(i, j).terms.items()
        )
        ratio = sp.simplify(theirs / mine)
        assert ratio.is_number and ratio != 0


def test_errors():
    with pytest.raises(ValueError):
        relation_polynomial(2, 2)
    with pytest.raises(ValueError):
        relation_polynomial(0, 2)


def test_ab_relation_via_substitution():
    assert bipoly_substitute(T12, A_POLY, B_POLY).is_zero()
