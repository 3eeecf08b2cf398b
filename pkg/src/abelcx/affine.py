"""Associative algebras ``A`` and the affine Lie algebras ``aff(A) = A + A``.

Basis convention for ``aff(A)`` with ``dim A = m``: indices ``0..m-1`` are the
first summand (names ``a_<k>``), ``m..2m-1`` the second (``b_<k>``).  The
bracket is ``[(a, b), (a', b')] = (aa' - a'a, ab' - a'b)`` and the standard
complex structure is ``J(a, b) = (b, -a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .lie import LieAlgebra, require_valid
from .linalg import Matrix, as_scalar, as_vector

__all__ = [
    "AffineConnectionReport",
    "AlgebraReport",
    "AssociativeAlgebra",
    "ComplexAlgebraStructure",
    "aff",
    "check_algebra",
    "connection",
    "connection_checks",
    "is_algebra_homomorphism",
    "is_algebra_isomorphism",
    "small_algebra",
    "standard_J",
    "standard_K",
    "toeplitz_algebra",
]

ZERO = Fraction(0)


class AssociativeAlgebra:
    """Finite-dimensional real algebra; ``m[i][j]`` holds the coordinates of ``e_i e_j``."""

    __slots__ = ("basis_names", "m")

    def __init__(self, basis_names: Sequence[str], m: Sequence[Sequence[Sequence]]):
        n = len(basis_names)
        self.basis_names = tuple(basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError("basis names must be unique")
        table = tuple(tuple(as_vector(v) for v in row) for row in m)
        if len(table) != n or any(len(row) != n or any(len(v) != n for v in row) for row in table):
            raise ValueError(f"multiplication table must be {n}x{n}x{n}")
        self.m = table

    @classmethod
    def from_products(cls, basis_names: Sequence[str], products: Mapping[tuple, Mapping] | None = None):
        """Build from nonzero products ``{(name_i, name_j): {name_k: coeff}}``; the rest are zero."""
        names = list(basis_names)
        n = len(names)
        idx = {s: k for k, s in enumerate(names)}
        m = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b), val in (products or {}).items():
            v = m[idx[a]][idx[b]]
            for key, x in val.items():
                v[idx[key]] += as_scalar(x)
        return cls(names, m)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                for k, c in enumerate(self.m[i][j]):
                    if c != 0:
                        out[k] += ab * c
        return tuple(out)

    def left_mult(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x y``."""
        cols = [self.mul(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim)

    def __eq__(self, other):
        if not isinstance(other, AssociativeAlgebra):
            return NotImplemented
        return self.basis_names == other.basis_names and self.m == other.m

    def __hash__(self):
        return hash((self.basis_names, self.m))

    def __repr__(self):
        return f"AssociativeAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


def _unit(n: int, k: int) -> tuple:
    return tuple(Fraction(int(i == k)) for i in range(n))


@dataclass(frozen=True)
class ComplexAlgebraStructure:
    """A real algebra together with multiplication by ``i``."""

    base: AssociativeAlgebra
    i_map: Matrix

    def __post_init__(self):
        A, i = self.base, self.i_map
        if i.shape != (A.dim, A.dim) or i @ i != -Matrix.identity(A.dim):
            raise ValueError("i_map must satisfy i_map^2 = -1")
        for p in range(A.dim):
            for q in range(A.dim):
                ep, eq = _unit(A.dim, p), _unit(A.dim, q)
                prod = i @ A.mul(ep, eq)
                if prod != A.mul(i @ ep, eq) or prod != A.mul(ep, i @ eq):
                    raise ValueError(f"product is not complex bilinear at ({p}, {q})")


@dataclass(frozen=True)
class AlgebraReport:
    associative: bool
    commutative: bool
    associativity_failures: tuple = ()
    commutativity_failures: tuple = ()


def check_algebra(A: AssociativeAlgebra) -> AlgebraReport:
    n = A.dim
    units = [_unit(n, k) for k in range(n)]
    assoc_bad = []
    for i in range(n):
        for j in range(n):
            ij = A.m[i][j]
            for k in range(n):
                if A.mul(ij, units[k]) != A.mul(units[i], A.m[j][k]):
                    assoc_bad.append((i, j, k))
    comm_bad = [(i, j) for i in range(n) for j in range(i + 1, n) if A.m[i][j] != A.m[j][i]]
    return AlgebraReport(not assoc_bad, not comm_bad, tuple(assoc_bad), tuple(comm_bad))


def is_algebra_homomorphism(f: Matrix, A: AssociativeAlgebra, B: AssociativeAlgebra) -> bool:
    """``f(xy) = f(x) f(y)`` on basis pairs; ``f`` is ``dim B x dim A``."""
    if f.shape != (B.dim, A.dim):
        raise ValueError("map has the wrong shape")
    cols = f.columns()
    return all(
        f @ A.m[i][j] == B.mul(cols[i], cols[j]) for i in range(A.dim) for j in range(A.dim)
    )


def is_algebra_isomorphism(f: Matrix, A: AssociativeAlgebra, B: AssociativeAlgebra) -> bool:
    return A.dim == B.dim and f.rank() == A.dim and is_algebra_homomorphism(f, A, B)


def aff(A: AssociativeAlgebra, names: Sequence[str] | None = None) -> LieAlgebra:
    """The Lie algebra ``A + A`` with ``[(a,b),(a',b')] = (aa' - a'a, ab' - a'b)``.

    Refuses non-associative input, for which the Jacobi identity can fail.
    """
    rep = check_algebra(A)
    if not rep.associative:
        raise ValueError(f"algebra is not associative: {rep.associativity_failures[:3]}")
    m = A.dim
    n = 2 * m
    if names is None:
        names = [f"a_{s}" for s in A.basis_names] + [f"b_{s}" for s in A.basis_names]
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(m):
            # [(e_i,0),(e_j,0)] = (e_i e_j - e_j e_i, 0)
            c[i][j] = [x - y for x, y in zip(A.m[i][j], A.m[j][i])] + [ZERO] * m
            # [(e_i,0),(0,e_j)] = (0, e_i e_j)
            c[i][m + j] = [ZERO] * m + list(A.m[i][j])
            c[m + j][i] = [ZERO] * m + [-x for x in A.m[i][j]]
    return require_valid(LieAlgebra(names, c))


def standard_J(A: AssociativeAlgebra | int) -> Matrix:
    """``J(a, b) = (b, -a)``, i.e. the block matrix ``[[0, I], [-I, 0]]``."""
    m = A if isinstance(A, int) else A.dim
    I, Z = Matrix.identity(m), Matrix.zeros(m, m)
    return Matrix([list(r1) + list(r2) for r1, r2 in zip(Z.tolist(), I.tolist())]
                  + [list(r1) + list(r2) for r1, r2 in zip((-I).tolist(), Z.tolist())], 2 * m)


def standard_K(C: ComplexAlgebraStructure, sign: str = "minus") -> Matrix:
    """Second complex structure on ``aff(A)`` for a complex algebra ``A``.

    ``sign="minus"`` gives ``K(a, b) = (-ia, ib)``; ``sign="plus"`` gives the
    opposite ``K(a, b) = (ia, -ib)``.  Both anticommute with ``J``.
    """
    if sign not in ("minus", "plus"):
        raise ValueError("sign must be 'minus' or 'plus'")
    i = C.i_map
    K = Matrix.block_diag(-i, i)
    return K if sign == "minus" else -K


@dataclass(frozen=True)
class AffineConnectionReport:
    torsion_free: bool
    flat: bool
    j_parallel: bool

    @property
    def ok(self) -> bool:
        return self.torsion_free and self.flat and self.j_parallel


def connection(A: AssociativeAlgebra, X: Sequence, Y: Sequence) -> tuple:
    """``nabla_(a,b) (c,d) = (ac, ad)`` on ``aff(A)`` coordinates."""
    m = A.dim
    a, c, d = X[:m], Y[:m], Y[m:]
    return A.mul(a, c) + A.mul(a, d)


def connection_checks(A: AssociativeAlgebra) -> AffineConnectionReport:
    """Exhaustive basis checks of torsion-freeness, flatness and ``nabla J = J nabla``."""
    from .lie import bracket

    g = aff(A)
    n = g.dim
    J = standard_J(A)
    units = [g.basis_vector(k) for k in range(n)]
    nab = [[connection(A, units[i], units[j]) for j in range(n)] for i in range(n)]

    def sub(x, y):
        return tuple(p - q for p, q in zip(x, y))

    torsion_free = all(
        sub(nab[i][j], nab[j][i]) == g.c[i][j] for i in range(n) for j in range(n)
    )
    # R(X,Y)Z = nabla_[X,Y] Z - nabla_X nabla_Y Z + nabla_Y nabla_X Z
    flat = True
    for i in range(n):
        for j in range(i + 1, n):
            xy = g.c[i][j]
            for k in range(n):
                r = sub(connection(A, xy, units[k]), connection(A, units[i], nab[j][k]))
                r = tuple(p + q for p, q in zip(r, connection(A, units[j], nab[i][k])))
                if any(x != 0 for x in r):
                    flat = False
                    break
            if not flat:
                break
    Jcols = J.columns()
    j_parallel = all(
        connection(A, units[i], Jcols[j]) == J @ nab[i][j] for i in range(n) for j in range(n)
    )
    # torsion-free is literally "nabla_X Y - nabla_Y X = [X, Y]"; cross-check one generic pair
    if torsion_free and n:
        X = tuple(Fraction(k + 1) for k in range(n))
        Y = tuple(Fraction((-1) ** k * (k + 2)) for k in range(n))
        assert sub(connection(A, X, Y), connection(A, Y, X)) == bracket(g, X, Y)
    return AffineConnectionReport(torsion_free, flat, j_parallel)


def toeplitz_algebra(k: int) -> ComplexAlgebraStructure:
    """Complex algebra of strictly upper triangular ``(k+1) x (k+1)`` Toeplitz matrices.

    Complex basis ``N, N^2, ..., N^k`` with ``N`` the nilpotent shift, so
    ``e_p e_q = e_(p+q)`` when ``p + q <= k`` and 0 otherwise.  Real basis
    ``e_1..e_k, ie_1..ie_k``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    names = [f"e{p}" for p in range(1, k + 1)] + [f"ie{p}" for p in range(1, k + 1)]
    n = 2 * k
    m = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for p in range(1, k + 1):
        for q in range(1, k + 1):
            s = p + q
            if s > k:
                continue
            re, im = s - 1, k + s - 1
            m[p - 1][q - 1][re] = Fraction(1)            # e_p e_q = e_s
            m[k + p - 1][q - 1][im] = Fraction(1)        # (i e_p) e_q = i e_s
            m[p - 1][k + q - 1][im] = Fraction(1)
            m[k + p - 1][k + q - 1][re] = Fraction(-1)   # (i e_p)(i e_q) = -e_s
    base = AssociativeAlgebra(names, m)
    return ComplexAlgebraStructure(base, _complex_i(k))


def _complex_i(k: int) -> Matrix:
    # real basis (x_1..x_k, y_1..y_k) with i x_p = y_p, i y_p = -x_p
    return standard_J(k).T


def trivial(n: int) -> AssociativeAlgebra:
    return AssociativeAlgebra.from_products([f"e{k + 1}" for k in range(n)])


_SMALL = {
    "reals": lambda: AssociativeAlgebra.from_products(["1"], {("1", "1"): {"1": 1}}),
    "complexes": lambda: AssociativeAlgebra.from_products(
        ["1", "i"],
        {("1", "1"): {"1": 1}, ("1", "i"): {"i": 1}, ("i", "1"): {"i": 1}, ("i", "i"): {"1": -1}},
    ),
    # {{a,0},{0,b}}: two orthogonal idempotents
    "diag2": lambda: AssociativeAlgebra.from_products(
        ["p1", "p2"], {("p1", "p1"): {"p1": 1}, ("p2", "p2"): {"p2": 1}}
    ),
    # {{a,0},{b,a}}: unit plus a square-zero element
    "jordan2": lambda: AssociativeAlgebra.from_products(
        ["1", "n"], {("1", "1"): {"1": 1}, ("1", "n"): {"n": 1}, ("n", "1"): {"n": 1}}
    ),
    # {{a,b},{b,a}}: unit plus an element squaring to the unit
    "split2": lambda: AssociativeAlgebra.from_products(
        ["1", "s"],
        {("1", "1"): {"1": 1}, ("1", "s"): {"s": 1}, ("s", "1"): {"s": 1}, ("s", "s"): {"1": 1}},
    ),
    # 2x2 upper triangular matrices; associative, not commutative
    "upper2": lambda: AssociativeAlgebra.from_products(
        ["E11", "E12", "E22"],
        {
            ("E11", "E11"): {"E11": 1},
            ("E11", "E12"): {"E12": 1},
            ("E12", "E22"): {"E12": 1},
            ("E22", "E22"): {"E22": 1},
        },
    ),
}


def small_algebra(name: str, n: int | None = None) -> AssociativeAlgebra:
    """Named small algebras: ``trivial`` (needs ``n``), ``reals``, ``complexes``,
    ``diag2``, ``jordan2``, ``split2`` and the noncommutative ``upper2``."""
    if name == "trivial":
        if n is None:
            raise ValueError("trivial algebra needs a dimension")
        return trivial(n)
    try:
        return _SMALL[name]()
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}") from None


def complexes_structure() -> ComplexAlgebraStructure:
    """``C`` as a complex algebra: ``i`` acts by left multiplication."""
    C = small_algebra("complexes")
    return ComplexAlgebraStructure(C, C.left_mult((0, 1)))
