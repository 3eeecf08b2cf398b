import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcx import catalog
from abelcx.lie import (
    LieAlgebra,
    NotAnIdealError,
    abelian,
    ad,
    bracket,
    center,
    change_basis,
    commutator_subalgebra,
    is_homomorphism,
    is_ideal,
    is_isomorphism,
    is_nilpotent,
    is_solvable,
    nilpotency_class,
    quotient,
    series,
    validate,
)
from abelcx.linalg import Matrix, Subspace

from conftest import random_invertible


@pytest.fixture
def affR():
    return catalog.aff_reals()[0]


@pytest.fixture
def rxh1():
    return catalog.heisenberg_example(1).algebra


def test_validate_examples(affR):
    assert validate(abelian(4)).ok
    assert validate(affR).ok
    n = 3
    z = [Fraction(0)] * n
    c = [[list(z) for _ in range(n)] for _ in range(n)]
    c[1][2] = [1, 0, 0]
    c[2][1] = [1, 0, 0]
    rep = validate(LieAlgebra(["e0", "e1", "e2"], c))
    assert [(i, j) for i, j, _ in rep.skew_violations] == [(1, 2)]


def test_validate_reports_jacobi_failure():
    # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 breaks Jacobi
    g = LieAlgebra.from_brackets(
        ["e1", "e2", "e3"],
        {("e1", "e2"): {"e3": 1}, ("e2", "e3"): {"e1": 1}, ("e3", "e1"): {"e1": 1}},
    )
    rep = validate(g)
    assert not rep.skew_violations
    assert [t for t, _ in rep.jacobi_violations] == [(0, 1, 2)]


def test_bracket_examples(affR, rxh1):
    assert bracket(affR, affR.vector({"x": 1}), affR.vector({"y": 1})) == affR.vector({"x": 1})
    assert bracket(rxh1, rxh1.vector({"x1": 1}), rxh1.vector({"y1": 1})) == rxh1.vector({"z": 1})
    v = (1, 2, 3, 4)
    assert all(x == 0 for x in bracket(rxh1, v, v))
    with pytest.raises(ValueError):
        bracket(rxh1, (1, 2), (1, 2))


def test_ad_examples(affR):
    assert ad(affR, (0, 0)).is_zero()
    # ad(y): x -> -x, y -> 0
    assert ad(affR, affR.vector({"y": 1})) == Matrix([[-1, 0], [0, 0]])
    assert all(ad(abelian(3), v).is_zero() for v in [(1, 0, 0), (1, 2, 3)])


def test_center_and_commutator(affR, rxh1):
    assert center(rxh1) == Subspace(4, [rxh1.vector({"w": 1}), rxh1.vector({"z": 1})])
    assert commutator_subalgebra(affR) == Subspace(2, [affR.vector({"x": 1})])
    g = abelian(3)
    assert commutator_subalgebra(g).dim == 0 and center(g) == Subspace.full(3)
    for h in (affR, rxh1):
        assert is_ideal(h, center(h)) and is_ideal(h, commutator_subalgebra(h))


def test_series_examples(affR, rxh1):
    g = abelian(3)
    assert is_solvable(g) and is_nilpotent(g) and nilpotency_class(g) == 1
    assert nilpotency_class(abelian(0)) == 0
    assert nilpotency_class(rxh1) == 2
    assert is_solvable(affR) and not is_nilpotent(affR) and nilpotency_class(affR) is None
    lc = series(affR, "lower-central")
    assert lc.dims == [2, 1] and lc.stabilized_at == 1
    assert series(rxh1, "derived").dims == [4, 1, 0]


def test_quotient_examples(rxh1):
    q, p = quotient(rxh1, Subspace.zero(4))
    assert q == rxh1 and p == Matrix.identity(4)
    q, p = quotient(rxh1, Subspace.full(4))
    assert q.dim == 0
    q, p = quotient(rxh1, center(rxh1))
    assert q.dim == 2 and not q.nonzero_brackets()
    assert is_homomorphism(p, rxh1, q)
    with pytest.raises(NotAnIdealError):
        quotient(rxh1, Subspace(4, [rxh1.vector({"x1": 1})]))


def test_quotient_pullback_reproduces_bracket():
    g = catalog.entry("family-1-2").algebra
    ideal = commutator_subalgebra(g)
    q, p = quotient(g, ideal)
    rng = random.Random(5)
    for _ in range(20):
        x = [rng.randint(-3, 3) for _ in range(g.dim)]
        y = [rng.randint(-3, 3) for _ in range(g.dim)]
        assert p @ bracket(g, x, y) == bracket(q, p @ x, p @ y)
    assert kernel_of(p) == ideal


def kernel_of(m):
    from abelcx.linalg import kernel

    return kernel(m)


def test_change_basis_examples(affR):
    assert change_basis(affR, Matrix.identity(2)) == affR
    assert is_isomorphism(Matrix.identity(2), affR, affR)
    scale = Matrix([[2, 0], [0, 1]])
    assert is_isomorphism(scale, affR, affR)
    assert not is_isomorphism(Matrix([[1, 0], [0, 2]]), affR, affR)
    with pytest.raises(ValueError):
        change_basis(affR, Matrix([[1, 1], [1, 1]]))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["S1", "S9", "S11", "family-1-1", "RxH2"]), st.integers(0, 10_000))
def test_ad_is_a_homomorphism(cid, seed):
    g = catalog.entry(cid).algebra
    rng = random.Random(seed)
    x = [rng.randint(-3, 3) for _ in range(g.dim)]
    y = [rng.randint(-3, 3) for _ in range(g.dim)]
    lhs = ad(g, bracket(g, x, y))
    rhs = ad(g, x) @ ad(g, y) - ad(g, y) @ ad(g, x)
    assert lhs == rhs


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["S2", "S10", "RxH1", "affR"]), st.integers(0, 10_000))
def test_change_basis_gives_isomorphic_valid_algebra(cid, seed):
    g = catalog.entry(cid).algebra
    P = random_invertible(g.dim, random.Random(seed))
    h = change_basis(g, P)
    assert validate(h).ok
    assert is_isomorphism(P, g, h)
    assert center(h).dim == center(g).dim
    assert nilpotency_class(h) == nilpotency_class(g)


def test_every_catalog_algebra_validates():
    for cid in catalog.catalog_ids():
        g = catalog.entry(cid).algebra
        assert validate(g).ok, cid
