from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import charpoly_oracle, det_oracle, is_square_oracle, laplace_det
from strategies import antisymmetric_matrices, nonzero_polys, polys, small_rats, square_matrices

from prym_hitchin.errors import NonSquareMatrix, NotAntisymmetric, NotASquare, OddDimension
from prym_hitchin.exact_algebra import (
    INFINITE,
    BiPoly,
    Poly,
    PolyMatrix,
    as_rat,
    char_poly,
    determinant,
    evaluate_at_matrix,
    hitchin_coefficients,
    is_even,
    is_odd,
    parity_decompose,
    pfaffian,
    poly_gcd,
    poly_square_root,
    radical,
    rational_det,
    rational_inverse,
    squarefree,
    sylvester_resultant,
    vanishing_order,
)

T = Poly([0, 1])


def xpoly(*coeffs):
    """Polynomial in x given in ascending order, as a BiPoly with constant coefficients."""
    return BiPoly([Poly([c]) for c in coeffs])


# ---- Poly basics

def test_poly_is_canonical():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([Fraction(2, 4)]) == Poly([Fraction(1, 2)])
    assert Poly([0, 0]).is_zero
    assert Poly().degree == -INFINITE
    assert hash(Poly([1, 2])) == hash(Poly([Fraction(2, 2), 2]))


def test_poly_rejects_floats():
    with pytest.raises(TypeError):
        Poly([0.5])
    with pytest.raises(TypeError):
        as_rat(1.0)


def test_poly_arithmetic_and_format():
    p = Poly([1, 0, 1])
    assert (p * p) == Poly([1, 0, 2, 0, 1])
    assert p - 1 == T * T
    assert 2 - p == Poly([1, 0, -1])
    assert p / 2 == Poly([Fraction(1, 2), 0, Fraction(1, 2)])
    assert (T + 1) ** 3 == Poly([1, 3, 3, 1])
    assert p(2) == 5
    assert p.derivative() == 2 * T
    assert Poly([1, 2, 3]).reflected() == Poly([1, -2, 3])
    assert Poly([1, -2, 1]).format("x") == "x^2 - 2*x + 1"
    assert str(Poly()) == "0"


def test_divmod():
    q, r = Poly([-1, 0, 1]).divmod(Poly([-1, 1]))
    assert q == Poly([1, 1]) and r.is_zero
    with pytest.raises(ZeroDivisionError):
        Poly([1]).divmod(Poly())


@given(polys(5), nonzero_polys(3))
def test_divmod_reconstructs(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


# ---- char_poly

def test_char_poly_examples():
    assert char_poly(PolyMatrix.identity(2)) == xpoly(1, -2, 1)
    assert char_poly(PolyMatrix.from_rows([[0, 1], [T, 0]])) == BiPoly([-T, 0, 1])
    companion = PolyMatrix.from_rows([[0, -5], [1, -3]])
    assert char_poly(companion) == xpoly(5, 3, 1)


def test_char_poly_requires_square():
    with pytest.raises(NonSquareMatrix):
        char_poly(PolyMatrix.zeros(2, 3))


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_dim=4))
def test_char_poly_matches_symbolic_oracle(m):
    cp = char_poly(m)
    assert cp == charpoly_oracle(m)
    assert cp.is_monic and cp.degree_x == m.rows


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_dim=5))
def test_cayley_hamilton(m):
    assert evaluate_at_matrix(char_poly(m), m).is_zero


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_dim=4))
def test_determinant_matches_cofactor_expansion(m):
    assert determinant(m) == laplace_det(m.to_rows())


def test_hitchin_coefficients_signs():
    m = PolyMatrix.from_rows([[T * T, 1], [1, 0]])
    assert hitchin_coefficients(m) == (-(T * T), Poly([-1]))


# ---- pfaffian

def test_pfaffian_examples():
    a = T + 1
    assert pfaffian(PolyMatrix.from_rows([[0, a], [-a, 0]])) == a
    m = PolyMatrix.from_rows([
        [0, 1, -T, 0],
        [-1, 0, 0, -T],
        [T, 0, 0, 1],
        [0, T, -1, 0],
    ])
    pf = pfaffian(m)
    assert pf == 1 - T * T
    assert pf * pf == det_oracle(m)
    assert pfaffian(PolyMatrix.zeros(4)).is_zero


def test_pfaffian_errors():
    with pytest.raises(NotAntisymmetric):
        pfaffian(PolyMatrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(OddDimension):
        pfaffian(PolyMatrix.zeros(3))
    with pytest.raises(NonSquareMatrix):
        pfaffian(PolyMatrix.zeros(2, 4))


@settings(max_examples=30, deadline=None)
@given(antisymmetric_matrices(max_half=3))
def test_pfaffian_squares_to_determinant(m):
    pf = pfaffian(m)
    assert pf * pf == determinant(m) == det_oracle(m)


# ---- square roots

def test_square_root_examples():
    assert poly_square_root(Poly([1, 2, 1])) == Poly([1, 1])
    assert poly_square_root(Poly([1, 0, 4, 0, 4])) == Poly([1, 0, 2])
    with pytest.raises(NotASquare):
        poly_square_root(Poly([1, 0, 1]))
    assert poly_gcd(Poly([1, 0, 1]), Poly([1, 0, 1]).derivative()) == Poly([1])


def test_square_root_rational_and_bivariate():
    assert poly_square_root(Poly([Fraction(1, 4)])) == Poly([Fraction(1, 2)])
    with pytest.raises(NotASquare):
        poly_square_root(Poly([2]))
    q = BiPoly([T, Poly([1]), Poly([1])])
    assert poly_square_root(q * q) == q
    with pytest.raises(NotASquare):
        poly_square_root(BiPoly([T, Poly([0]), Poly([1])]))


@given(nonzero_polys(5))
def test_square_root_round_trip(p):
    root = poly_square_root(p * p)
    assert root * root == p * p
    assert root.leading > 0


@given(nonzero_polys(5))
def test_square_detection_agrees_with_factorization(p):
    try:
        poly_square_root(p)
        found = True
    except NotASquare:
        found = False
    assert found == is_square_oracle(p)


# ---- gcd, orders, parity

def test_gcd_examples():
    assert poly_gcd(Poly([-1, 0, 1]), Poly([-1, 1])) == Poly([-1, 1])
    assert poly_gcd(Poly([1, -2, 1]), Poly([-2, 2])) == Poly([-1, 1])
    assert poly_gcd(Poly([1, 0, 1]), Poly([0, 2])) == Poly([1])
    assert poly_gcd(Poly(), Poly()).is_zero


@given(nonzero_polys(3), nonzero_polys(3), nonzero_polys(2))
def test_gcd_divides_and_is_monic(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.leading == 1
    assert (a * c).divmod(g)[1].is_zero and (b * c).divmod(g)[1].is_zero
    assert c.divmod(g)[1].is_zero or c.degree <= g.degree


def test_vanishing_order_examples():
    assert vanishing_order(Poly([0, 0, 0, 1, 1])) == 3
    assert vanishing_order(Poly([1, 1])) == 0
    assert vanishing_order(Poly()) == INFINITE


def test_parity_decompose_examples():
    assert parity_decompose(T * T + T) == (T * T, T)
    assert parity_decompose(Poly([5])) == (Poly([5]), Poly())
    assert parity_decompose(T ** 3) == (Poly(), T ** 3)


@given(polys(6))
def test_parity_decompose_properties(p):
    even, odd = parity_decompose(p)
    assert even + odd == p
    assert is_even(even) and is_odd(odd)
    assert even.reflected() == even and odd.reflected() == -odd


def test_squarefree_and_radical():
    p = Poly([-1, 1]) ** 2 * Poly([1, 1])
    assert not squarefree(p)
    assert radical(p) == Poly([-1, 0, 1])
    assert squarefree(Poly([1, 0, 1]))


# ---- rational linear algebra

@given(st.lists(small_rats, min_size=9, max_size=9))
def test_rational_det_matches_cofactors(vals):
    m = PolyMatrix(3, 3, vals)
    assert Poly([rational_det(m)]) == laplace_det(m.to_rows())


def test_rational_inverse():
    m = PolyMatrix.from_rows([[2, 1], [1, 1]])
    assert m @ rational_inverse(m) == PolyMatrix.identity(2)


def test_resultant_detects_common_root():
    a = Poly([-1, 0, 1])
    assert sylvester_resultant(a, Poly([-1, 1])) == 0
    assert sylvester_resultant(a, Poly([-2, 1])) != 0
    # Res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
    assert sylvester_resultant(a, Poly([-2, 1])) == 3


def test_matrix_operations():
    m = PolyMatrix.from_rows([[0, 1], [T, 0]])
    assert m @ m == PolyMatrix.diagonal([T, T])
    assert m ** 2 == m @ m
    assert m.T.T == m
    assert m.reflected() == PolyMatrix.from_rows([[0, 1], [-T, 0]])
    assert PolyMatrix.identity(3).trace() == 3
