"""Affine quotients and flags of J-stable ideals for abelian complex structures.

Given an abelian complex structure ``J`` on ``s`` and an abelian ideal ``u``
with ``s = u + Ju``, the map ``f(x + Jy) = (ad(Jy), ad(Jx))`` identifies
``s / z(s)`` with ``aff(A)``, where ``A = {ad(Jx) : x in u}`` under matrix
composition.  Iterating this on quotients gives a flag of ``J``-stable ideals
whose successive quotients are central extensions of affine algebras.

Every claim along the way is checked and recorded; a failed check raises
:class:`CertificateError` instead of being smoothed over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import AssociativeAlgebra, aff, check_algebra, standard_J
from .lie import (
    LieAlgebra,
    ad,
    bracket_space,
    center,
    derived_length,
    is_homomorphism,
    is_ideal,
    is_solvable,
    lift,
    quotient,
    series,
    subalgebra,
)
from .linalg import Matrix, Subspace, kernel, solve
from .structures import check_complex_structure, is_abelian

__all__ = [
    "AffineCertificate",
    "CertificateError",
    "FlagDecomposition",
    "FlagStep",
    "NotAbelianError",
    "affine_quotient",
    "find_abelian_ideal",
    "flag_decomposition",
    "induced_structure",
    "restrict_structure",
]


class CertificateError(RuntimeError):
    """A check that the theory guarantees has failed."""

    def __init__(self, check: str, detail: str = ""):
        super().__init__(f"certificate check {check!r} failed" + (f": {detail}" if detail else ""))
        self.check = check


class NotAbelianError(ValueError):
    pass


def find_abelian_ideal(s: LieAlgebra) -> Subspace:
    """Last nonzero term of the derived series: a characteristic abelian ideal."""
    if s.dim == 0:
        raise ValueError("the zero algebra has no nonzero ideal")
    rep = series(s, "derived")
    if rep.terms[-1].dim != 0:
        raise ValueError("algebra is not solvable")
    u = rep.terms[-2]
    assert bracket_space(s, u, u).dim == 0 and is_ideal(s, u)
    return u


@dataclass
class AffineCertificate:
    """Evidence that ``(s / z, J)`` is holomorphically isomorphic to ``aff(A)``.

    ``A_basis`` holds the matrices ``ad(Jx)`` spanning ``A`` (in echelon
    order); ``f`` maps ``s`` to ``aff(A)`` in the basis convention of
    :func:`abelcx.affine.aff`.
    """

    u: Subspace
    A: AssociativeAlgebra
    A_basis: list
    f: Matrix
    kernel: Subspace
    aff_algebra: LieAlgebra
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def coordinates(self, m: Matrix) -> tuple:
        """Coordinates of a matrix in ``A_basis``."""
        return Subspace(m.rows * m.cols, [b.flatten() for b in self.A_basis]).coordinates(m.flatten())


def _require(checks: dict, name: str, ok: bool, detail: str = ""):
    checks[name] = bool(ok)
    if not ok:
        raise CertificateError(name, detail)


def affine_quotient(s: LieAlgebra, J: Matrix, u: Subspace) -> AffineCertificate:
    n = s.dim
    check_complex_structure(J, n)
    if not is_abelian(s, J):
        raise NotAbelianError("J is not abelian")
    if not is_ideal(s, u):
        raise ValueError("u is not an ideal")
    if bracket_space(s, u, u).dim:
        raise ValueError("u is not abelian")
    Ju = u.image(J)
    if (u + Ju).dim != n:
        raise ValueError("u + Ju does not span s")
    checks: dict[str, bool] = {}
    z = center(s)
    _require(checks, "u_cap_Ju_central", (u & Ju).is_subspace_of(z))

    uvecs = u.vectors()
    ad_J = [ad(s, J @ x) for x in uvecs]
    A_space = Subspace(n * n, [m.flatten() for m in ad_J])
    A_basis = [Matrix.unflatten(v, n) for v in A_space.vectors()]
    a = len(A_basis)
    names = [f"A{p + 1}" for p in range(a)]
    table = []
    for P in A_basis:
        row = []
        for Q in A_basis:
            prod = (P @ Q).flatten()
            if not A_space.contains(prod):
                _require(checks, "A_closed", False, "product of ad(Jx) leaves span")
            row.append(A_space.coordinates(prod))
        table.append(row)
    checks["A_closed"] = True
    A = AssociativeAlgebra(names, table)
    rep = check_algebra(A)
    _require(checks, "A_associative", rep.associative)
    _require(checks, "A_commutative", rep.commutative, str(rep.commutativity_failures))

    def coords(M: Matrix) -> tuple:
        return A_space.coordinates(M.flatten())

    d = len(uvecs)
    B = Matrix.from_columns(uvecs + [J @ x for x in uvecs], rows=n)

    def split(alpha_beta):
        x = [Fraction(0)] * n
        y = [Fraction(0)] * n
        for c, v in zip(alpha_beta[:d], uvecs):
            x = [p + c * q for p, q in zip(x, v)]
        for c, v in zip(alpha_beta[d:], uvecs):
            y = [p + c * q for p, q in zip(y, v)]
        return tuple(x), tuple(y)

    # f is well defined: x + Jy = 0 forces ad(Jx) = ad(Jy) = 0
    well_defined = True
    for kv in kernel(B).vectors():
        x, y = split(kv)
        if not (ad(s, J @ x).is_zero() and ad(s, J @ y).is_zero()):
            well_defined = False
    _require(checks, "f_well_defined", well_defined)

    cols = []
    for k in range(n):
        sol = solve(B, s.basis_vector(k))
        assert sol is not None
        x, y = split(sol)
        cols.append(coords(ad(s, J @ y)) + coords(ad(s, J @ x)))
    f = Matrix.from_columns(cols, rows=2 * a) if cols else Matrix.zeros(2 * a, 0)

    g_aff = aff(A)
    _require(checks, "f_homomorphism", is_homomorphism(f, s, g_aff))
    ker = kernel(f) if n else Subspace.zero(0)
    _require(checks, "kernel_is_center", ker == z)
    _require(checks, "f_surjective", f.rank() == 2 * a)
    _require(checks, "f_holomorphic", f @ J == standard_J(a) @ f)
    return AffineCertificate(u, A, A_basis, f, ker, g_aff, checks)


def restrict_structure(J: Matrix, s: Subspace) -> Matrix:
    """Matrix of ``J`` on a ``J``-stable subspace, in its echelon basis."""
    cols = []
    for v in s.vectors():
        w = J @ v
        if not s.contains(w):
            raise ValueError("subspace is not J-stable")
        cols.append(s.coordinates(w))
    return Matrix.from_columns(cols, rows=s.dim) if cols else Matrix.zeros(0, 0)


def induced_structure(s: LieAlgebra, J: Matrix, ideal: Subspace) -> tuple[LieAlgebra, Matrix, Matrix]:
    """Quotient ``s / ideal`` with the descended complex structure.

    Returns ``(quotient, J_bar, projection)``.
    """
    check_complex_structure(J, s.dim)
    if not ideal.image(J).is_subspace_of(ideal):
        raise ValueError("ideal is not J-stable")
    q, proj = quotient(s, ideal)
    Jq = proj @ J @ lift(ideal)
    check_complex_structure(Jq, q.dim)
    if is_abelian(s, J) and not is_abelian(q, Jq):
        raise CertificateError("induced_abelian")
    return q, Jq, proj


@dataclass
class FlagStep:
    ideal: Subspace           # s_j, in coordinates of the original algebra
    quotient_dim: int         # dim s_j / s_(j-1)
    certificate: AffineCertificate
    block: LieAlgebra         # s_j / s_(j-1)
    block_J: Matrix


@dataclass
class FlagDecomposition:
    steps: list
    derived_length: int | None = None

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def ok(self) -> bool:
        return all(st.certificate.ok for st in self.steps)

    def to_dict(self, s: LieAlgebra) -> dict:
        from .io import matrix_to_json, subspace_to_json, associative_to_json

        return {
            "length": self.length,
            "derived_length": self.derived_length,
            "steps": [
                {
                    "ideal_dim": st.ideal.dim,
                    "ideal_basis": subspace_to_json(st.ideal),
                    "quotient_dim": st.quotient_dim,
                    "A": associative_to_json(st.certificate.A),
                    "A_dim": st.certificate.A.dim,
                    "kernel_dim": st.certificate.kernel.dim,
                    "f": matrix_to_json(st.certificate.f),
                    "checks": dict(st.certificate.checks),
                }
                for st in self.steps
            ],
        }


def flag_decomposition(s: LieAlgebra, J: Matrix, u: Subspace | None = None) -> FlagDecomposition:
    """Flag ``0 = s_0 < s_1 < ... < s_r = s`` of ``J``-stable ideals with certificates.

    ``u`` optionally fixes the abelian ideal used at the first step.
    """
    check_complex_structure(J, s.dim)
    if not is_abelian(s, J):
        raise NotAbelianError("J is not abelian")
    if not is_solvable(s):
        # cannot happen for an abelian J; surfaced rather than ignored
        raise CertificateError("solvable", "algebra with abelian J is not solvable")
    n = s.dim
    cur, cur_J = s, J
    section = Matrix.identity(n)
    prev = Subspace.zero(n)
    steps = []
    while cur.dim:
        uu = u if (u is not None and not steps) else find_abelian_ideal(cur)
        s1 = uu + uu.image(cur_J)
        if not (is_ideal(cur, s1) and s1.image(cur_J) == s1):
            raise CertificateError("J_stable_ideal", "u + Ju is not a J-stable ideal")
        block, _ = subalgebra(cur, s1)
        block_J = restrict_structure(cur_J, s1)
        u_block = Subspace(s1.dim, [s1.coordinates(v) for v in uu.vectors()])
        cert = affine_quotient(block, block_J, u_block)
        ideal = prev + Subspace(n, [section @ v for v in s1.vectors()])
        if not (is_ideal(s, ideal) and ideal.image(J) == ideal and prev.is_subspace_of(ideal)):
            raise CertificateError("flag_ideal", f"step {len(steps) + 1}")
        if ideal.dim - prev.dim != s1.dim:
            raise CertificateError("flag_dims")
        steps.append(FlagStep(ideal, s1.dim, cert, block, block_J))
        cur, cur_J, _ = induced_structure(cur, cur_J, s1)
        section = section @ lift(s1)
        prev = ideal
    if prev.dim != n:
        raise CertificateError("flag_complete")
    return FlagDecomposition(steps, derived_length(s))
