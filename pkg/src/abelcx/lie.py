"""Finite-dimensional Lie algebras given by structure constants.

A :class:`LieAlgebra` stores ``c[i][j]``, the coordinates of ``[e_i, e_j]``,
for every ordered pair.  Nothing is symmetrized on input: skew-symmetry and
the Jacobi identity are checked by :func:`validate`, which reports every
offending pair or triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Matrix, Subspace, as_scalar, as_vector, kernel

__all__ = [
    "LieAlgebra",
    "NotAnIdealError",
    "SeriesReport",
    "ValidationReport",
    "abelian",
    "ad",
    "bracket",
    "bracket_space",
    "center",
    "change_basis",
    "commutator_subalgebra",
    "derived_length",
    "direct_sum",
    "is_homomorphism",
    "is_ideal",
    "is_isomorphism",
    "is_nilpotent",
    "is_solvable",
    "is_subalgebra",
    "nilpotency_class",
    "quotient",
    "series",
    "subalgebra",
    "validate",
]

ZERO = Fraction(0)


class NotAnIdealError(ValueError):
    pass


class InvalidLieAlgebraError(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(f"not a Lie algebra: {report.summary()}")
        self.report = report


class LieAlgebra:
    """Structure-constant tensor with named basis vectors.

    ``c[i][j]`` is the coordinate vector of ``[e_i, e_j]``.  Instances are
    treated as immutable.
    """

    __slots__ = ("basis_names", "c", "_nz")

    def __init__(self, basis_names: Sequence[str], c: Sequence[Sequence[Sequence]]):
        n = len(basis_names)
        names = tuple(str(s) for s in basis_names)
        if len(set(names)) != n:
            raise ValueError("basis names must be unique")
        if len(c) != n or any(len(row) != n for row in c):
            raise ValueError(f"structure tensor must be {n}x{n}")
        tensor = tuple(tuple(as_vector(v) for v in row) for row in c)
        for row in tensor:
            for v in row:
                if len(v) != n:
                    raise ValueError("bracket vector of wrong length")
        self.basis_names = names
        self.c = tensor
        # sparse copy: _nz[i][j] = ((k, c_ij^k), ...)
        self._nz = tuple(
            tuple(tuple((k, x) for k, x in enumerate(v) if x != 0) for v in row)
            for row in tensor
        )

    @classmethod
    def from_brackets(
        cls,
        basis_names: Sequence[str],
        brackets: Mapping[tuple, Mapping | Sequence] | None = None,
    ) -> "LieAlgebra":
        """Build from the nonzero brackets ``[e_i, e_j]`` with ``i`` before ``j``.

        Keys may be names or indices; values are ``{name: coeff}`` mappings or
        full coordinate vectors.  The skew part is filled in.
        """
        names = list(basis_names)
        n = len(names)
        index = {s: k for k, s in enumerate(names)}
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b), val in (brackets or {}).items():
            i = index[a] if isinstance(a, str) else a
            j = index[b] if isinstance(b, str) else b
            if isinstance(val, Mapping):
                vec = [ZERO] * n
                for key, coeff in val.items():
                    vec[index[key] if isinstance(key, str) else key] += as_scalar(coeff)
            else:
                vec = list(as_vector(val))
            c[i][j] = vec
            c[j][i] = [-x for x in vec]
        return cls(names, c)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def basis_vector(self, k: int | str) -> tuple:
        if isinstance(k, str):
            k = self.index(k)
        return tuple(Fraction(int(i == k)) for i in range(self.dim))

    def vector(self, coeffs: Mapping[str, object]) -> tuple:
        """Coordinate vector from a ``{name: coefficient}`` mapping."""
        v = [ZERO] * self.dim
        for name, x in coeffs.items():
            v[self.index(name)] += as_scalar(x)
        return tuple(v)

    def nonzero_brackets(self) -> list[tuple[int, int, tuple]]:
        return [
            (i, j, self.c[i][j])
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if any(x != 0 for x in self.c[i][j])
        ]

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.basis_names == other.basis_names and self.c == other.c

    def __hash__(self):
        return hash((self.basis_names, self.c))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


def abelian(n: int, prefix: str = "e") -> LieAlgebra:
    return LieAlgebra.from_brackets([f"{prefix}{k + 1}" for k in range(n)])


@dataclass
class ValidationReport:
    skew_violations: list = field(default_factory=list)    # (i, j, residual)
    jacobi_violations: list = field(default_factory=list)  # ((i, j, k), residual)

    @property
    def ok(self) -> bool:
        return not self.skew_violations and not self.jacobi_violations

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return (
            f"{len(self.skew_violations)} skew violation(s), "
            f"{len(self.jacobi_violations)} Jacobi violation(s)"
        )


def _basis_bracket_vec(g: LieAlgebra, v_nz, k: int) -> list:
    """[v, e_k] for v given sparsely as ((idx, coeff), ...)."""
    out = [ZERO] * g.dim
    for l, a in v_nz:
        for m, b in g._nz[l][k]:
            out[m] += a * b
    return out


def validate(g: LieAlgebra) -> ValidationReport:
    """Check skew-symmetry on all pairs and Jacobi on all triples ``i<j<k``."""
    report = ValidationReport()
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            residual = tuple(a + b for a, b in zip(g.c[i][j], g.c[j][i]))
            if any(x != 0 for x in residual):
                report.skew_violations.append((i, j, residual))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                t1 = _basis_bracket_vec(g, g._nz[i][j], k)
                t2 = _basis_bracket_vec(g, g._nz[j][k], i)
                t3 = _basis_bracket_vec(g, g._nz[k][i], j)
                residual = tuple(a + b + c for a, b, c in zip(t1, t2, t3))
                if any(x != 0 for x in residual):
                    report.jacobi_violations.append(((i, j, k), residual))
    return report


def require_valid(g: LieAlgebra) -> LieAlgebra:
    report = validate(g)
    if not report.ok:
        raise InvalidLieAlgebraError(report)
    return g


def _check_len(g: LieAlgebra, v: Sequence):
    if len(v) != g.dim:
        raise ValueError(f"vector of length {len(v)} for a {g.dim}-dimensional algebra")


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of the structure constants.

    Works for Gaussian-rational coordinates too, which is how the
    complexification is handled.
    """
    _check_len(g, x)
    _check_len(g, y)
    out = [ZERO] * g.dim
    for i, a in enumerate(x):
        if a == 0:
            continue
        row = g._nz[i]
        for j, b in enumerate(y):
            if b == 0:
                continue
            ab = a * b
            for k, c in row[j]:
                out[k] = out[k] + ab * c
    return tuple(out)


def ad(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]``; column ``j`` is ``[x, e_j]``."""
    _check_len(g, x)
    n = g.dim
    cols = []
    for j in range(n):
        col = [ZERO] * n
        for i, a in enumerate(x):
            if a != 0:
                for k, c in g._nz[i][j]:
                    col[k] += a * c
        cols.append(col)
    return Matrix.from_columns(cols, rows=n)


def bracket_space(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """``span{[x, y] : x in a, y in b}``."""
    return Subspace(g.dim, [bracket(g, x, y) for x in a.vectors() for y in b.vectors()])


def commutator_subalgebra(g: LieAlgebra) -> Subspace:
    return Subspace(g.dim, [v for (_, _, v) in g.nonzero_brackets()])


def center(g: LieAlgebra) -> Subspace:
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    # x is central iff sum_i x_i c[i][j] = 0 for all j
    rows = []
    for j in range(n):
        for k in range(n):
            row = [g.c[i][j][k] for i in range(n)]
            if any(x != 0 for x in row):
                rows.append(row)
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix(rows, n))


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    vs = s.vectors()
    return all(s.contains(bracket(g, x, y)) for i, x in enumerate(vs) for y in vs[i + 1:])


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise ValueError("subspace lives in the wrong ambient space")
    return all(
        s.contains(bracket(g, g.basis_vector(i), v)) for i in range(g.dim) for v in s.vectors()
    )


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    stabilized_at: int

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def series(g: LieAlgebra, kind: str = "derived") -> SeriesReport:
    """Derived or lower central series, up to and including the first repeated term."""
    if kind not in ("derived", "lower-central"):
        raise ValueError(f"unknown series kind {kind!r}")
    full = Subspace.full(g.dim)
    terms = [full]
    while True:
        cur = terms[-1]
        nxt = bracket_space(g, cur, cur) if kind == "derived" else bracket_space(g, full, cur)
        if nxt == cur:
            break
        terms.append(nxt)
    return SeriesReport(kind, tuple(terms), len(terms) - 1)


def is_solvable(g: LieAlgebra) -> bool:
    return series(g, "derived").terms[-1].dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return series(g, "lower-central").terms[-1].dim == 0


def nilpotency_class(g: LieAlgebra) -> int | None:
    """Number of nontrivial steps to reach 0 in the lower central series.

    0 for the zero algebra, 1 for a nonzero abelian algebra, ``None`` when
    ``g`` is not nilpotent.
    """
    rep = series(g, "lower-central")
    if rep.terms[-1].dim != 0:
        return None
    return len(rep.terms) - 1


def derived_length(g: LieAlgebra) -> int | None:
    rep = series(g, "derived")
    if rep.terms[-1].dim != 0:
        return None
    return len(rep.terms) - 1


def _projection(ideal: Subspace) -> Matrix:
    comp = ideal.complement_indices()
    n = ideal.ambient_dim
    cols = []
    for j in range(n):
        e = [ZERO] * n
        e[j] = Fraction(1)
        r = ideal.reduce(e)
        cols.append([r[c] for c in comp])
    return Matrix.from_columns(cols, rows=len(comp))


def lift(ideal: Subspace) -> Matrix:
    """Section of the quotient map: quotient basis vector k -> standard vector at the k-th complement coordinate."""
    comp = ideal.complement_indices()
    n = ideal.ambient_dim
    cols = []
    for c in comp:
        e = [ZERO] * n
        e[c] = Fraction(1)
        cols.append(e)
    return Matrix.from_columns(cols, rows=n)


def quotient(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix]:
    """``g / ideal`` on the complement coordinates, with the projection map."""
    if not is_ideal(g, ideal):
        raise NotAnIdealError("subspace is not an ideal")
    comp = ideal.complement_indices()
    proj = _projection(ideal)
    m = len(comp)
    c = [[proj @ g.c[comp[a]][comp[b]] for b in range(m)] for a in range(m)]
    q = LieAlgebra([g.basis_names[k] for k in comp], c)
    return q, proj


def subalgebra(g: LieAlgebra, s: Subspace, names: Sequence[str] | None = None) -> tuple[LieAlgebra, Matrix]:
    """Restrict the bracket to a subalgebra, in the echelon basis of ``s``.

    Returns the algebra and the inclusion matrix (columns are the basis of ``s``).
    """
    if not is_subalgebra(g, s):
        raise ValueError("subspace is not closed under the bracket")
    vs = s.vectors()
    d = len(vs)
    c = [[s.coordinates(bracket(g, vs[a], vs[b])) for b in range(d)] for a in range(d)]
    if names is None:
        names = [g.basis_names[p] for p in s.pivots]
    incl = Matrix.from_columns(vs, rows=g.dim)
    return LieAlgebra(names, c), incl


def change_basis(g: LieAlgebra, p: Matrix, names: Sequence[str] | None = None) -> LieAlgebra:
    """Transport the bracket along the invertible map ``p``.

    The new bracket is ``[x, y]' = p [p^-1 x, p^-1 y]``, so ``p`` becomes an
    isomorphism ``g -> change_basis(g, p)`` and an endomorphism ``A`` of ``g``
    corresponds to ``p A p^-1``.
    """
    pinv = p.inverse()  # raises on singular p
    cols = pinv.columns()
    n = g.dim
    c = [[p @ bracket(g, cols[a], cols[b]) for b in range(n)] for a in range(n)]
    return LieAlgebra(names or g.basis_names, c)


def is_homomorphism(f: Matrix, g1: LieAlgebra, g2: LieAlgebra) -> bool:
    if f.shape != (g2.dim, g1.dim):
        raise ValueError(f"map of shape {f.shape} cannot go from dim {g1.dim} to dim {g2.dim}")
    images = f.columns()
    for i in range(g1.dim):
        for j in range(i + 1, g1.dim):
            if f @ g1.c[i][j] != bracket(g2, images[i], images[j]):
                return False
    return True


def is_isomorphism(f: Matrix, g1: LieAlgebra, g2: LieAlgebra) -> bool:
    if g1.dim != g2.dim or f.rank() != g1.dim:
        return False
    return is_homomorphism(f, g1, g2)


def direct_sum(*parts: LieAlgebra, names: Sequence[str] | None = None) -> LieAlgebra:
    """Direct sum of ideals, basis concatenated in order."""
    n = sum(p.dim for p in parts)
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p.dim):
            for j in range(p.dim):
                for k, x in p._nz[i][j]:
                    c[off + i][off + j][off + k] = x
        off += p.dim
    if names is None:
        names = [s for p in parts for s in p.basis_names]
    return LieAlgebra(names, c)
