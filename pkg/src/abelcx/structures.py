"""Complex structures on Lie algebras.

A complex structure is an endomorphism ``J`` with ``J^2 = -1``, given as a
:class:`~abelcx.linalg.Matrix` whose column ``j`` is ``J(e_j)``.

All identities below are bilinear in ``(x, y)``, so checking them on pairs
of basis vectors is enough; every check here does exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lie import LieAlgebra, ad, bracket
from .linalg import GaussianRational, Matrix, Subspace, as_vector

__all__ = [
    "NotAComplexStructureError",
    "Splitting",
    "adjoint_holomorphy",
    "check_complex_structure",
    "coadjoint_holomorphy",
    "gl_algebra",
    "gl_with_structure",
    "is_abelian",
    "is_abelian_hypercomplex",
    "is_complex_bilinear",
    "is_complex_bilinear_on",
    "is_hypercomplex",
    "is_integrable",
    "key_characterizations",
    "nijenhuis_defect",
    "splitting",
    "subalgebras_abelian",
]

ComplexStructure = Matrix


class NotAComplexStructureError(ValueError):
    pass


def check_complex_structure(J: Matrix, n: int | None = None) -> Matrix:
    if not J.is_square() or (n is not None and J.rows != n):
        raise NotAComplexStructureError(f"expected a {n}x{n} matrix, got {J.shape}")
    if J @ J != -Matrix.identity(J.rows):
        raise NotAComplexStructureError("J^2 != -I")
    return J


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def nijenhuis_defect(g: LieAlgebra, J: Matrix, x, y) -> tuple:
    """``J[x,y] - [Jx,y] - [x,Jy] - J[Jx,Jy]``."""
    check_complex_structure(J, g.dim)
    x, y = as_vector(x), as_vector(y)
    Jx, Jy = J @ x, J @ y
    t = _sub(J @ bracket(g, x, y), bracket(g, Jx, y))
    t = _sub(t, bracket(g, x, Jy))
    return _sub(t, J @ bracket(g, Jx, Jy))


def _pairs(n):
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


def _integrable(g, J):
    cols = J.columns()
    for i, j in _pairs(g.dim):
        lhs = J @ _sub(g.c[i][j], bracket(g, cols[i], cols[j]))
        rhs = _add(bracket(g, cols[i], g.basis_vector(j)), bracket(g, g.basis_vector(i), cols[j]))
        if lhs != rhs:
            return False
    return True


def is_integrable(g: LieAlgebra, J: Matrix) -> bool:
    """Vanishing of the Nijenhuis-type expression on all basis pairs.

    Checked in the rearranged form ``J([x,y] - [Jx,Jy]) = [Jx,y] + [x,Jy]``,
    which is equivalent because ``J`` is invertible.
    """
    check_complex_structure(J, g.dim)
    return _integrable(g, J)


def is_abelian(g: LieAlgebra, J: Matrix) -> bool:
    """``[Jx, Jy] = [x, y]`` for all basis pairs."""
    check_complex_structure(J, g.dim)
    cols = J.columns()
    ok = all(bracket(g, cols[i], cols[j]) == g.c[i][j] for i, j in _pairs(g.dim))
    if ok:
        assert _integrable(g, J), "abelian complex structure failed integrability"
    return ok


def is_complex_bilinear(g: LieAlgebra, J: Matrix) -> bool:
    """``J[x, y] = [x, Jy]``: ``(g, J)`` is a complex Lie algebra."""
    check_complex_structure(J, g.dim)
    return is_complex_bilinear_on(g, J, Subspace.full(g.dim))


def is_complex_bilinear_on(g: LieAlgebra, J: Matrix, s: Subspace) -> bool:
    """Same identity restricted to a ``J``-stable subalgebra ``s``."""
    vs = s.vectors()
    if not all(s.contains(J @ v) for v in vs):
        return False
    for x in vs:
        for y in vs:
            if J @ bracket(g, x, y) != bracket(g, x, J @ y):
                return False
    if s.dim == g.dim:
        assert _integrable(g, J), "complex bilinear structure failed integrability"
    return True


def _anticommute(J: Matrix, K: Matrix) -> bool:
    return J @ K == -(K @ J)


def is_hypercomplex(g: LieAlgebra, J: Matrix, K: Matrix) -> bool:
    check_complex_structure(J, g.dim)
    check_complex_structure(K, g.dim)
    return _anticommute(J, K) and is_integrable(g, J) and is_integrable(g, K)


def is_abelian_hypercomplex(g: LieAlgebra, J: Matrix, K: Matrix) -> bool:
    check_complex_structure(J, g.dim)
    check_complex_structure(K, g.dim)
    return _anticommute(J, K) and is_abelian(g, J) and is_abelian(g, K)


@dataclass(frozen=True)
class Splitting:
    """The ``+i`` and ``-i`` eigenspaces of ``J`` in the complexification."""

    g10: Subspace
    g01: Subspace


def splitting(g: LieAlgebra, J: Matrix) -> Splitting:
    check_complex_structure(J, g.dim)
    i = GaussianRational(0, 1)
    n = g.dim
    cols = J.columns()
    g10 = Subspace(n, [[GaussianRational(int(a == k)) - i * cols[k][a] for a in range(n)] for k in range(n)])
    g01 = Subspace(n, [[GaussianRational(int(a == k)) + i * cols[k][a] for a in range(n)] for k in range(n)])
    return Splitting(g10, g01)


def _subalgebra_status(g: LieAlgebra, s: Subspace) -> tuple[bool, bool]:
    vs = s.vectors()
    closed, commuting = True, True
    for a, x in enumerate(vs):
        for y in vs[a + 1:]:
            z = bracket(g, x, y)
            if any(t != 0 for t in z):
                commuting = False
            if not s.contains(z):
                closed = False
    return closed, commuting


def subalgebras_abelian(g: LieAlgebra, J: Matrix) -> tuple[bool, bool]:
    """Whether ``g^{1,0}`` and ``g^{0,1}`` are abelian subalgebras of ``g^C``."""
    sp = splitting(g, J)
    c10, a10 = _subalgebra_status(g, sp.g10)
    c01, a01 = _subalgebra_status(g, sp.g01)
    return (c10 and a10, c01 and a01)


def adjoint_holomorphy(g: LieAlgebra, J: Matrix) -> bool:
    """``ad(Jx) = R_{-J}(ad x) = -ad(x) J`` for every basis vector ``x``."""
    check_complex_structure(J, g.dim)
    minus_J = -J
    for k in range(g.dim):
        e = g.basis_vector(k)
        if ad(g, J @ e) != ad(g, e) @ minus_J:
            return False
    return True


def coadjoint_holomorphy(g: LieAlgebra, J: Matrix) -> bool:
    """``ad*(Jx) = L_J(ad* x)`` with ``J`` acting on the dual as ``-J^T``.

    In the dual basis ``ad*(x) = -ad(x)^T``.
    """
    check_complex_structure(J, g.dim)
    J_dual = -J.T
    for k in range(g.dim):
        e = g.basis_vector(k)
        if -ad(g, J @ e).T != J_dual @ (-ad(g, e).T):
            return False
    return True


def key_characterizations(g: LieAlgebra, J: Matrix) -> dict[str, bool]:
    """The four equivalent ways of saying ``J`` is abelian, evaluated independently."""
    s10, s01 = subalgebras_abelian(g, J)
    return {
        "abelian": is_abelian(g, J),
        "subalgebras_abelian": s10 and s01,
        "adjoint_holomorphic": adjoint_holomorphy(g, J),
        "coadjoint_holomorphic": coadjoint_holomorphy(g, J),
    }


def gl_algebra(n: int) -> LieAlgebra:
    """``gl(n)`` with basis ``E_ij`` at index ``i*n + j`` and the commutator bracket."""
    names = [f"E{i + 1}_{j + 1}" for i in range(n) for j in range(n)]
    N = n * n
    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = c[i * n + j][k * n + l]
                    # [E_ij, E_kl] = d_jk E_il - d_li E_kj
                    if j == k:
                        v[i * n + l] += 1
                    if l == i:
                        v[k * n + j] -= 1
    return LieAlgebra(names, c)


def multiplication_operator(I: Matrix, side: str) -> Matrix:
    """Matrix of ``u -> I u`` (``side="left"``) or ``u -> u I`` on row-major ``vec(u)``."""
    n = I.rows
    N = n * n
    cols = []
    for k in range(n):
        for l in range(n):
            col = [Fraction(0)] * N
            if side == "left":
                # I E_kl = sum_i I_ik E_il
                for i in range(n):
                    col[i * n + l] += I[i, k]
            elif side == "right":
                # E_kl I = sum_j I_lj E_kj
                for j in range(n):
                    col[k * n + j] += I[l, j]
            else:
                raise ValueError(f"side must be 'left' or 'right', not {side!r}")
            cols.append(col)
    return Matrix.from_columns(cols, rows=N)


def gl_with_structure(n: int, I: Matrix, side: str = "left") -> tuple[LieAlgebra, Matrix]:
    """``gl(n)`` with the complex structure ``L_I`` or ``R_I``."""
    if n % 2:
        raise NotAComplexStructureError("n must be even")
    check_complex_structure(I, n)
    g = gl_algebra(n)
    J = multiplication_operator(I, side)
    if not is_integrable(g, J):
        raise AssertionError(f"{side} multiplication by I is not integrable")
    return g, J
