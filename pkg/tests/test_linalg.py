from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcx.linalg import (
    GaussianRational,
    Matrix,
    Subspace,
    as_scalar,
    commutant,
    contains,
    kernel,
    rref,
    solve,
    span_intersect,
    span_sum,
)

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return Matrix([[draw(small_ints) for _ in range(c)] for _ in range(r)])


def test_rref_examples():
    assert rref(Matrix.identity(3)) == (Matrix.identity(3), 3)
    assert rref(Matrix.zeros(2, 2)) == (Matrix.zeros(2, 2), 0)
    assert rref(Matrix([[1, 2], [2, 4]])) == (Matrix([[1, 2], [0, 0]]), 1)


def test_kernel_examples():
    assert kernel(Matrix.identity(2)).dim == 0
    assert kernel(Matrix.zeros(2, 2)) == Subspace.full(2)
    assert kernel(Matrix([[1, 1]])) == Subspace(2, [[1, -1]])


def test_lattice_examples():
    x, y = Subspace(2, [[1, 0]]), Subspace(2, [[0, 1]])
    assert span_sum(x, y) == Subspace.full(2)
    assert span_intersect(x, y).dim == 0
    assert contains(x, (3, 0))
    assert not contains(x, (3, 1))
    with pytest.raises(ValueError):
        span_sum(x, Subspace.full(3))


def test_commutant_examples():
    assert commutant([], 2).dim == 4
    assert commutant([Matrix.identity(2)], 2).dim == 4
    so3 = [
        Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]]),
        Matrix([[0, 0, -1], [0, 0, 0], [1, 0, 0]]),
        Matrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]]),
    ]
    c = commutant(so3, 3)
    assert c == Subspace(9, [Matrix.identity(3).flatten()])
    with pytest.raises(ValueError):
        commutant([Matrix.identity(2)], 3)


def test_commutant_so3_against_sympy_nullspace():
    # independent route: write X symbolically and let sympy solve XM = MX
    xs = sympy.symbols("x0:9")
    X = sympy.Matrix(3, 3, xs)
    gens = [
        sympy.Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]]),
        sympy.Matrix([[0, 0, -1], [0, 0, 0], [1, 0, 0]]),
        sympy.Matrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]]),
    ]
    eqs = [e for M in gens for e in (X * M - M * X)]
    sol = sympy.solve(eqs, xs, dict=True)[0]
    free = set().union(*(sympy.sympify(v).free_symbols for v in sol.values())) | (set(xs) - set(sol))
    assert len(free) == 1


def test_scalars_are_exact():
    assert as_scalar("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_gaussian_rational_field_ops():
    i = GaussianRational(0, 1)
    assert i * i == -1
    z = GaussianRational(Fraction(1, 2), 3)
    assert (z / z) == 1
    assert z * z.conjugate() == Fraction(1, 4) + 9
    assert z - z == 0


def test_inverse_and_solve():
    M = Matrix([[2, 1], [1, 1]])
    assert M @ M.inverse() == Matrix.identity(2)
    with pytest.raises(ValueError):
        Matrix([[1, 2], [2, 4]]).inverse()
    assert solve(Matrix([[1, 1]]), (2,)) == (2, 0)
    assert solve(Matrix([[1, 1], [1, 1]]), (1, 2)) is None


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent_and_matches_sympy(m):
    red, rank = rref(m)
    assert rref(red) == (red, rank)
    ref, _ = sympy.Matrix(m.tolist()).rref()
    assert red.tolist() == [[Fraction(int(x.p), int(x.q)) for x in ref.row(i)] for i in range(ref.rows)]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert m.rank() + kernel(m).dim == m.cols
    for v in kernel(m).vectors():
        assert all(x == 0 for x in m @ v)


@st.composite
def subspace_pairs(draw):
    n = draw(st.integers(1, 5))
    def sub():
        k = draw(st.integers(0, n))
        return Subspace(n, [[draw(small_ints) for _ in range(n)] for _ in range(k)])
    return sub(), sub()


@settings(max_examples=60, deadline=None)
@given(subspace_pairs())
def test_modular_law(pair):
    a, b = pair
    s, i = a + b, a & b
    assert a.dim + b.dim == s.dim + i.dim
    assert i.is_subspace_of(a) and i.is_subspace_of(b)
    assert a.is_subspace_of(s) and b.is_subspace_of(s)


@given(st.fractions(), st.fractions())
def test_addition_round_trip(a, b):
    assert (a + b) - b == a


@given(st.fractions(), st.fractions(), st.fractions(), st.fractions())
def test_gaussian_round_trip(a, b, c, d):
    x, y = GaussianRational(a, b), GaussianRational(c, d)
    assert (x + y) - y == x
    if y != 0:
        assert (x * y) / y == x
