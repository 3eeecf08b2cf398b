"""Named Lie algebras with complex structures, used as a verified test corpus.

Every constructor attaches an ``expected`` property map and re-checks it
against the computed values before returning; a mismatch raises
:class:`CatalogError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import affine
from .affine import AssociativeAlgebra, aff, small_algebra, standard_J, standard_K
from .lie import (
    LieAlgebra,
    center,
    commutator_subalgebra,
    direct_sum,
    is_solvable,
    nilpotency_class,
    require_valid,
)
from .linalg import Matrix
from .structures import check_complex_structure, is_abelian

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "FOUR_DIM_IDS",
    "aff_reals",
    "catalog_ids",
    "derivation_extension",
    "entry",
    "example_family",
    "four_dim",
    "free_two_step",
    "heisenberg",
    "heisenberg_example",
    "rotation",
]

FOUR_DIM_IDS = ("S0", "S1", "S2", "S8", "S9", "S10", "S11")


class CatalogError(ValueError):
    pass


class FamilyCompatibilityError(ValueError):
    def __init__(self, msg: str, pair: tuple[int, int]):
        super().__init__(msg)
        self.pair = pair


@dataclass
class CatalogEntry:
    id: str
    algebra: LieAlgebra
    structures: dict[str, Matrix] = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    algebra_A: AssociativeAlgebra | None = None
    notes: str = ""

    def measured(self) -> dict:
        g = self.algebra
        out = {
            "solvable": is_solvable(g),
            "nilpotency_class": nilpotency_class(g),
            "dim_center": center(g).dim,
            "dim_commutator": commutator_subalgebra(g).dim,
        }
        for name, J in self.structures.items():
            out[f"abelian_{name}"] = is_abelian(g, J)
        return out

    def verify(self) -> "CatalogEntry":
        require_valid(self.algebra)
        for J in self.structures.values():
            check_complex_structure(J, self.algebra.dim)
        got = self.measured()
        bad = {k: (v, got.get(k)) for k, v in self.expected.items() if got.get(k) != v}
        if bad:
            raise CatalogError(f"{self.id}: expected/measured mismatch {bad}")
        return self


def rotation(m: int = 1) -> Matrix:
    """Block-diagonal ``J`` on ``R^(2m)`` sending ``e_(2k-1) -> e_(2k)``."""
    r = Matrix([[0, -1], [1, 0]])
    return Matrix.block_diag(*([r] * m)) if m else Matrix.zeros(0, 0)


def _pair_structure(n: int, pairs: Sequence[tuple[int, int]]) -> Matrix:
    """``J e_a = e_b``, ``J e_b = -e_a`` for each pair."""
    cols = [[Fraction(0)] * n for _ in range(n)]
    for a, b in pairs:
        cols[a][b] = Fraction(1)
        cols[b][a] = Fraction(-1)
    return Matrix.from_columns(cols, rows=n)


def aff_reals() -> tuple[LieAlgebra, Matrix]:
    """Two-dimensional nonabelian algebra ``[x, y] = x`` with ``Jx = y``."""
    g = LieAlgebra.from_brackets(["x", "y"], {("x", "y"): {"x": 1}})
    return g, _pair_structure(2, [(0, 1)])


def heisenberg(n: int) -> LieAlgebra:
    """``h_n`` on ``x_1..x_n, y_1..y_n, z`` with ``[x_i, y_i] = z``."""
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)] + ["z"]
    return LieAlgebra.from_brackets(names, {(f"x{i}", f"y{i}"): {"z": 1} for i in range(1, n + 1)})


def heisenberg_example(n: int) -> CatalogEntry:
    """``R x h_n`` with ``Jz = w`` and ``Jx_i = y_i``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    names = ["w", "z"] + [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    g = LieAlgebra.from_brackets(names, {(f"x{i}", f"y{i}"): {"z": 1} for i in range(1, n + 1)})
    pairs = [(1, 0)] + [(1 + i, 1 + n + i) for i in range(1, n + 1)]
    J = _pair_structure(g.dim, pairs)
    return CatalogEntry(
        f"RxH{n}",
        g,
        {"J": J},
        {"abelian_J": True, "solvable": True, "nilpotency_class": 2, "dim_center": 2, "dim_commutator": 1},
        algebra_A=affine.trivial(1) if n == 1 else None,
    ).verify()


def _affR_entry() -> CatalogEntry:
    g, J = aff_reals()
    return CatalogEntry(
        "affR",
        g,
        {"J": J},
        {"abelian_J": True, "solvable": True, "nilpotency_class": None, "dim_center": 0, "dim_commutator": 1},
        algebra_A=small_algebra("reals"),
    ).verify()


def four_dim(id: str) -> CatalogEntry:
    """The seven four-dimensional algebras carrying abelian complex structures.

    ``S9``, ``S10`` and ``S11`` are built directly as ``aff(A)`` for their
    algebras ``A`` (these have trivial center, so ``s = s/z``).
    """
    affR, JR = aff_reals()
    if id == "S0":
        g = LieAlgebra.from_brackets(["e1", "e2", "e3", "e4"])
        return CatalogEntry(
            "S0", g, {"J": rotation(2)},
            {"abelian_J": True, "solvable": True, "nilpotency_class": 1, "dim_center": 4, "dim_commutator": 0},
            algebra_A=affine.trivial(0), notes="R^4",
        ).verify()
    if id == "S1":
        e = heisenberg_example(1)
        e.id, e.notes = "S1", "h_1 + R, direct sum of ideals"
        return e
    if id == "S2":
        g = direct_sum(affR, LieAlgebra.from_brackets(["u", "v"]))
        J = Matrix.block_diag(JR, rotation(1))
        return CatalogEntry(
            "S2", g, {"J": J},
            {"abelian_J": True, "solvable": True, "nilpotency_class": None, "dim_center": 2, "dim_commutator": 1},
            algebra_A=small_algebra("reals"), notes="aff(R) + R^2, direct sum of ideals",
        ).verify()
    if id == "S8":
        g = direct_sum(affR, affR, names=["x1", "y1", "x2", "y2"])
        J = Matrix.block_diag(JR, JR)
        return CatalogEntry(
            "S8", g, {"J": J},
            {"abelian_J": True, "solvable": True, "nilpotency_class": None, "dim_center": 0, "dim_commutator": 2},
            algebra_A=small_algebra("diag2"), notes="aff(R) + aff(R), direct sum of ideals",
        ).verify()
    if id in ("S9", "S10", "S11"):
        name = {"S9": "jordan2", "S10": "split2", "S11": "complexes"}[id]
        A = small_algebra(name)
        g = aff(A)
        structures = {"J": standard_J(A)}
        expected = {"abelian_J": True, "solvable": True, "nilpotency_class": None, "dim_center": 0, "dim_commutator": 2}
        if id == "S11":
            structures["K"] = standard_K(affine.complexes_structure())
            expected["abelian_K"] = True
        notes = {
            "S9": "aff(R) + R^2, semidirect sum (adjoint representation)",
            "S10": "aff(R) + aff(R), semidirect product (adjoint representation)",
            "S11": "aff(C)",
        }[id]
        return CatalogEntry(id, g, structures, expected, algebra_A=A, notes=notes).verify()
    raise ValueError(f"unknown four-dimensional id {id!r}")


def toeplitz_entry(k: int) -> CatalogEntry:
    C = affine.toeplitz_algebra(k)
    g = aff(C.base)
    return CatalogEntry(
        f"toeplitz-{k}", g,
        {"J": standard_J(C.base), "K": standard_K(C)},
        {"abelian_J": True, "abelian_K": True, "solvable": True, "nilpotency_class": k,
         "dim_center": 4, "dim_commutator": 2 * (k - 1)},
        algebra_A=C.base,
    ).verify()


def example_family(k: int, n: int, T: Sequence[Matrix], Jv: Matrix) -> CatalogEntry:
    """Algebra on ``x_1..x_k, y_1..y_k`` plus ``v`` (dim ``2n``) with
    ``[x_j, v] = T_j Jv v`` and ``[y_j, v] = T_j v``; ``J x_j = y_j``, ``J|v = Jv``.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if len(T) != k:
        raise ValueError(f"need {k} endomorphisms, got {len(T)}")
    d = 2 * n
    check_complex_structure(Jv, d)
    for t in T:
        if t.shape != (d, d):
            raise ValueError("T_i must act on v")
    for i in range(k):
        for j in range(k):
            if T[i] @ T[j] != T[j] @ T[i]:
                raise FamilyCompatibilityError(f"T_{i + 1} and T_{j + 1} do not commute", (i, j))
            if T[i] @ T[j] != -(T[i] @ Jv @ T[j] @ Jv):
                raise FamilyCompatibilityError(
                    f"T_{i + 1} T_{j + 1} != -T_{i + 1} J T_{j + 1} J", (i, j)
                )
    names = [f"x{j}" for j in range(1, k + 1)] + [f"y{j}" for j in range(1, k + 1)] + [
        f"v{a}" for a in range(1, d + 1)
    ]
    N = 2 * k + d
    off = 2 * k
    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for j in range(k):
        TJ = T[j] @ Jv
        for a in range(d):
            xv = [Fraction(0)] * off + list(TJ.col(a))
            yv = [Fraction(0)] * off + list(T[j].col(a))
            c[j][off + a] = xv
            c[off + a][j] = [-x for x in xv]
            c[k + j][off + a] = yv
            c[off + a][k + j] = [-x for x in yv]
    g = require_valid(LieAlgebra(names, c))
    J = Matrix.block_diag(_pair_structure(2 * k, [(j, k + j) for j in range(k)]), Jv)
    entry = CatalogEntry(
        f"family-{k}-{n}", g, {"J": J}, {"abelian_J": True, "solvable": True}
    ).verify()
    if g.dim - commutator_subalgebra(g).dim < 2 * k:
        raise CatalogError("commutator has codimension below 2k")
    return entry


def _default_family(k: int, n: int) -> CatalogEntry:
    Jv = rotation(n)
    d = 2 * n
    if (k, n) == (1, 1):
        T = [Matrix.identity(2)]
    elif (k, n) == (2, 1):
        T = [Matrix.identity(2), Jv]
    elif (k, n) == (1, 2):
        T = [Matrix.block_diag(Matrix.identity(2), 2 * Matrix.identity(2))]
    else:
        T = [Matrix.identity(d) for _ in range(k)]
    return example_family(k, n, T, Jv)


def free_two_step(n: int) -> CatalogEntry:
    """Free two-step nilpotent algebra on ``v_1..v_n`` with ``[v_i, v_j] = z_ij``."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    vs = [f"v{i}" for i in range(1, n + 1)]
    zs = [f"z{i}{j}" if n < 10 else f"z{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    br = {}
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            br[(vs[i], vs[j])] = {zs[t]: 1}
            t += 1
    g = LieAlgebra.from_brackets(vs + zs, br)
    m = n * (n - 1) // 2
    return CatalogEntry(
        f"free2step-{n}", g, {},
        {"solvable": True, "nilpotency_class": 2, "dim_center": m, "dim_commutator": m},
    ).verify()


def is_derivation(g: LieAlgebra, D: Matrix) -> bool:
    from .lie import bracket

    cols = D.columns()
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = D @ g.c[i][j]
            rhs = tuple(
                p + q for p, q in zip(bracket(g, cols[i], g.basis_vector(j)), bracket(g, g.basis_vector(i), cols[j]))
            )
            if lhs != rhs:
                return False
    return True


def derivation_extension(n_alg: LieAlgebra, D: Matrix, id: str = "derivation-ext", a_name: str = "a") -> CatalogEntry:
    """``s = R a + n`` with ``[a, x] = D x``."""
    if D.shape != (n_alg.dim, n_alg.dim):
        raise ValueError("D must be an endomorphism of n")
    if not is_derivation(n_alg, D):
        raise ValueError("D is not a derivation")
    m = n_alg.dim
    N = m + 1
    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for i in range(m):
        for j in range(m):
            c[1 + i][1 + j] = [Fraction(0)] + list(n_alg.c[i][j])
        col = [Fraction(0)] + list(D.col(i))
        c[0][1 + i] = col
        c[1 + i][0] = [-x for x in col]
    s = require_valid(LieAlgebra([a_name] + list(n_alg.basis_names), c))
    nonsingular = D.det() != 0
    expected = {"solvable": True}
    if nonsingular and m > 0:
        expected["dim_commutator"] = m
    return CatalogEntry(id, s, {}, expected, notes="nonsingular derivation" if nonsingular else "").verify()


def _dext(id: str) -> CatalogEntry:
    if id == "dext-R2":
        return derivation_extension(LieAlgebra.from_brackets(["e1", "e2"]), Matrix.identity(2), id)
    if id == "dext-h1":
        return derivation_extension(heisenberg(1), Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]]), id)
    if id == "dext-h2":
        D = Matrix.block_diag(Matrix.identity(4), Matrix([[2]]))
        return derivation_extension(heisenberg(2), D, id)
    raise ValueError(id)


def _affU() -> CatalogEntry:
    A = small_algebra("upper2")
    g = aff(A)
    return CatalogEntry(
        "aff-upper2", g, {"J": standard_J(A)}, {"abelian_J": False, "solvable": True}, algebra_A=A,
        notes="aff of 2x2 upper triangular matrices; J integrable, not abelian",
    ).verify()


def catalog_ids() -> list[str]:
    return (
        list(FOUR_DIM_IDS)
        + ["affR", "RxH1", "RxH2", "aff-upper2"]
        + [f"toeplitz-{k}" for k in range(1, 6)]
        + ["family-1-1", "family-2-1", "family-1-2"]
        + ["free2step-2", "free2step-3", "free2step-4"]
        + ["dext-R2", "dext-h1", "dext-h2"]
    )


def entry(id: str) -> CatalogEntry:
    """Look up any catalog entry by id."""
    if id in FOUR_DIM_IDS:
        return four_dim(id)
    if id == "affR":
        return _affR_entry()
    if id == "aff-upper2":
        return _affU()
    if id.startswith("RxH"):
        return heisenberg_example(int(id[3:]))
    if id.startswith("toeplitz-"):
        return toeplitz_entry(int(id.split("-")[1]))
    if id.startswith("family-"):
        _, k, n = id.split("-")
        return _default_family(int(k), int(n))
    if id.startswith("free2step-"):
        return free_two_step(int(id.split("-")[1]))
    if id.startswith("dext-"):
        return _dext(id)
    raise ValueError(f"unknown catalog id {id!r}")
