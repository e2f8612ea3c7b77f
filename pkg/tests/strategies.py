"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from prym_hitchin.exact_algebra import Poly, PolyMatrix

small_rats = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 1, 2, 3]))


def polys(max_degree=4):
    return st.lists(small_rats, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree=4):
    return polys(max_degree).filter(lambda p: not p.is_zero)


@st.composite
def square_matrices(draw, min_dim=1, max_dim=4, max_degree=2):
    n = draw(st.integers(min_dim, max_dim))
    return PolyMatrix(n, n, [draw(polys(max_degree)) for _ in range(n * n)])


@st.composite
def antisymmetric_matrices(draw, max_half=3, max_degree=2):
    n = 2 * draw(st.integers(1, max_half))
    entries = [[Poly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p = draw(polys(max_degree))
            entries[i][j] = p
            entries[j][i] = -p
    return PolyMatrix.from_rows(entries)
