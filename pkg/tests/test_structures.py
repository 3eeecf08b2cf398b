import random

import pytest
import sympy

from abelcx import affine, catalog
from abelcx.lie import LieAlgebra, bracket, change_basis, commutator_subalgebra, is_solvable
from abelcx.linalg import Matrix, Subspace, commutant
from abelcx.structures import (
    NotAComplexStructureError,
    adjoint_holomorphy,
    check_complex_structure,
    coadjoint_holomorphy,
    gl_algebra,
    gl_with_structure,
    is_abelian,
    is_abelian_hypercomplex,
    is_complex_bilinear,
    is_complex_bilinear_on,
    is_hypercomplex,
    is_integrable,
    key_characterizations,
    nijenhuis_defect,
    splitting,
    subalgebras_abelian,
)

from conftest import random_invertible

ROT = Matrix([[0, -1], [1, 0]])


def _affR_complexified():
    """aff(R) tensor C as a real algebra on x, y, ix, iy with J = multiplication by i."""
    g = LieAlgebra.from_brackets(
        ["x", "y", "ix", "iy"],
        {("x", "y"): {"x": 1}, ("x", "iy"): {"ix": 1}, ("ix", "y"): {"ix": 1}, ("ix", "iy"): {"x": -1}},
    )
    J = Matrix.from_columns([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]], rows=4)
    return g, J


def test_check_complex_structure():
    assert check_complex_structure(ROT) == ROT
    with pytest.raises(NotAComplexStructureError):
        check_complex_structure(Matrix.identity(2))
    with pytest.raises(NotAComplexStructureError):
        check_complex_structure(ROT, 4)


def test_simple_verdicts():
    g = LieAlgebra.from_brackets(["a", "b"])
    assert is_integrable(g, ROT) and is_abelian(g, ROT)
    affR, J = catalog.aff_reals()
    assert is_integrable(affR, J) and is_abelian(affR, J)
    e = catalog.heisenberg_example(1)
    assert is_abelian(e.algebra, e.structures["J"])


def test_non_integrable_structure_has_nonzero_defect():
    g = catalog.heisenberg_example(1).algebra  # basis w, z, x1, y1
    # J x1 = z, J y1 = w
    J = Matrix.from_columns([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], rows=4)
    check_complex_structure(J)
    assert not is_integrable(g, J)
    assert any(nijenhuis_defect(g, J, g.basis_vector(2), g.basis_vector(3)))


def _upper2_oracle():
    """aff(upper2) realised as 4x4 real matrices [[a, b], [0, 0]] with a, b upper triangular."""
    units = [sympy.Matrix([[1, 0], [0, 0]]), sympy.Matrix([[0, 1], [0, 0]]), sympy.Matrix([[0, 0], [0, 1]])]
    Z = sympy.zeros(2, 2)

    def embed(v):
        a = sum((c * u for c, u in zip(v[:3], units)), Z)
        b = sum((c * u for c, u in zip(v[3:], units)), Z)
        return sympy.Matrix(sympy.BlockMatrix([[a, b], [Z, Z]]))

    def unembed(M):
        a, b = M[:2, :2], M[:2, 2:]
        return (a[0, 0], a[0, 1], a[1, 1], b[0, 0], b[0, 1], b[1, 1])

    return embed, unembed


def test_aff_upper2_integrable_not_abelian_against_matrix_oracle():
    A = affine.small_algebra("upper2")
    g = affine.aff(A)
    J = affine.standard_J(A)
    embed, unembed = _upper2_oracle()
    units = [g.basis_vector(k) for k in range(6)]
    for x in units:
        for y in units:
            X, Y = embed(x), embed(y)
            assert tuple(unembed(X * Y - Y * X)) == bracket(g, x, y)
    # oracle for abelian: [Jx, Jy] - [x, y] on the basis, computed with matrices
    failures = 0
    for x in units:
        for y in units:
            JX, JY = embed(J @ x), embed(J @ y)
            X, Y = embed(x), embed(y)
            if JX * JY - JY * JX != X * Y - Y * X:
                failures += 1
    assert failures > 0
    assert is_integrable(g, J) and not is_abelian(g, J)
    assert key_characterizations(g, J) == {
        "abelian": False, "subalgebras_abelian": False,
        "adjoint_holomorphic": False, "coadjoint_holomorphic": False,
    }


def test_rearranged_identity_has_plus_sign():
    g, J = _affR_complexified()
    assert is_complex_bilinear(g, J) and is_integrable(g, J)
    units = [g.basis_vector(k) for k in range(4)]
    plus_ok, minus_ok = True, True
    for x in units:
        for y in units:
            Jx, Jy = J @ x, J @ y
            lhs = J @ tuple(p - q for p, q in zip(bracket(g, x, y), bracket(g, Jx, Jy)))
            a, b = bracket(g, Jx, y), bracket(g, x, Jy)
            plus_ok &= lhs == tuple(p + q for p, q in zip(a, b))
            minus_ok &= lhs == tuple(p - q for p, q in zip(a, b))
    assert plus_ok and not minus_ok


def test_complex_lie_algebra_is_not_abelian():
    g, J = _affR_complexified()
    assert not is_abelian(g, J)
    assert not any(key_characterizations(g, J).values())


def test_splitting_of_abelian_structure():
    affR, J = catalog.aff_reals()
    sp = splitting(affR, J)
    assert sp.g10.dim == 1 and sp.g01.dim == 1
    assert sp.g10.conjugate() == sp.g01
    assert subalgebras_abelian(affR, J) == (True, True)
    g = LieAlgebra.from_brackets(["a", "b"])
    assert subalgebras_abelian(g, ROT) == (True, True)


def test_holomorphy_examples():
    g = LieAlgebra.from_brackets(["a", "b", "c", "d"])
    for J in (catalog.rotation(2), Matrix.block_diag(ROT, -ROT)):
        assert adjoint_holomorphy(g, J) and coadjoint_holomorphy(g, J)
    e = catalog.heisenberg_example(1)
    assert adjoint_holomorphy(e.algebra, e.structures["J"])
    assert coadjoint_holomorphy(e.algebra, e.structures["J"])


def test_hypercomplex():
    e = catalog.entry("toeplitz-2")
    g, J, K = e.algebra, e.structures["J"], e.structures["K"]
    assert is_hypercomplex(g, J, K) and is_abelian_hypercomplex(g, J, K)
    assert not is_hypercomplex(g, J, J)
    assert not is_abelian_hypercomplex(g, J, -J)


def test_gl2_structures():
    g = gl_algebra(2)
    assert g.dim == 4
    for side in ("left", "right"):
        h, J = gl_with_structure(2, ROT, side)
        assert h == g and is_integrable(h, J)
        # gl(2) is not solvable, so no abelian structure can live on it
        assert not is_abelian(h, J) and not is_solvable(h)
        assert not is_complex_bilinear(h, J)
        glC = commutant([ROT], 2)
        assert glC.dim == 2
        assert is_complex_bilinear_on(h, J, glC)
    with pytest.raises(NotAComplexStructureError):
        gl_with_structure(3, Matrix.identity(3))
    with pytest.raises(NotAComplexStructureError):
        gl_with_structure(2, Matrix.identity(2))


def test_gl2_commutant_oracle():
    # the commutant of I in gl(2) is span{1, I} = {{a, -b}, {b, a}}
    glC = commutant([ROT], 2)
    assert glC == Subspace(4, [Matrix.identity(2).flatten(), ROT.flatten()])


def test_conjugation_covariance(corpus):
    rng = random.Random(11)
    for label, g, J in corpus:
        if g.dim > 8:
            continue
        P = random_invertible(g.dim, rng)
        g2, J2 = change_basis(g, P), P @ J @ P.inverse()
        assert is_abelian(g, J) == is_abelian(g2, J2), label
        assert is_integrable(g, J) == is_integrable(g2, J2), label


def test_one_dimensional_commutator_rule():
    """On algebras with dim [g, g] = 1, every integrable J that turns up is abelian."""
    rng = random.Random(3)
    tested = 0
    ids = [
        cid for cid in catalog.catalog_ids()
        if catalog.entry(cid).structures and commutator_subalgebra(catalog.entry(cid).algebra).dim == 1
    ]
    assert {"S1", "S2", "affR", "RxH1", "RxH2"} <= set(ids)
    for cid in ids:
        e = catalog.entry(cid)
        g = e.algebra
        J0 = next(iter(e.structures.values()))
        for _ in range(40):
            P = random_invertible(g.dim, rng, -1, 1)
            J = P @ J0 @ P.inverse()
            if is_integrable(g, J):
                tested += 1
                assert is_abelian(g, J), cid
    assert tested >= len(ids)


def test_one_dimensional_commutator_instances():
    for n in (1, 2, 3):
        e = catalog.heisenberg_example(n)
        assert e.algebra.dim == 2 * n + 2
        assert commutator_subalgebra(e.algebra).dim == 1
        assert is_abelian(e.algebra, e.structures["J"])
    e = catalog.entry("S2")
    assert commutator_subalgebra(e.algebra).dim == 1 and is_abelian(e.algebra, e.structures["J"])
