"""Exact linear algebra over the rationals and the Gaussian rationals.

Scalars are :class:`fractions.Fraction` (or :class:`GaussianRational` when
working in a complexification).  Matrices are immutable and dense; subspaces
are kept in reduced row echelon form so that equality of subspaces is
equality of their echelon bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "GaussianRational",
    "Matrix",
    "Subspace",
    "as_scalar",
    "as_vector",
    "commutant",
    "format_scalar",
    "kernel",
    "rref",
    "span_intersect",
    "span_sum",
    "contains",
    "solve",
]


class DimensionError(ValueError):
    """Raised when shapes or ambient dimensions do not match."""


def as_scalar(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: silently importing a rounded binary value would
    defeat the point of exact arithmetic.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise TypeError(f"{x} is not real")
        return x.re
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def as_vector(v: Iterable) -> tuple:
    return tuple(x if isinstance(x, GaussianRational) else as_scalar(x) for x in v)


def format_scalar(x: Fraction) -> str:
    """Canonical string form: ``"3"``, ``"-1/2"``."""
    return str(Fraction(x))


class GaussianRational:
    """A complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_scalar(re)
        self.im = as_scalar(im)

    @staticmethod
    def _lift(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x, 0)

    def __add__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._lift(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / norm, -o.im / norm)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


I = GaussianRational(0, 1)


def _conj(x):
    return x.conjugate() if isinstance(x, GaussianRational) else x


class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        data = tuple(as_vector(r) for r in data)
        if cols is None:
            if not data:
                raise DimensionError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise DimensionError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, data: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows = len(data)
        m.cols = cols
        m._data = data
        return m

    # construction
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, z = Fraction(1), Fraction(0)
        return cls._raw(
            tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [as_vector(c) for c in columns]
        if not columns:
            if rows is None:
                raise DimensionError("row count needed for a matrix with no columns")
            return cls._raw(tuple(() for _ in range(rows)), 0)
        n = len(columns[0])
        return cls._raw(tuple(tuple(c[i] for c in columns) for i in range(n)), len(columns))

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(out, m)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._data)) if self.rows else tuple(() for _ in range(self.cols)), self.rows)

    # arithmetic
    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        return Matrix._raw(tuple(tuple(scalar * a for a in r) for r in self._data), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.columns()
            return Matrix._raw(
                tuple(tuple(_dot(r, c) for c in ocols) for r in self._data), other.cols
            )
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(_dot(r, v) for r in self._data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}])"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def conjugate(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(_conj(x) for x in r) for r in self._data), self.cols)

    def flatten(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    @classmethod
    def unflatten(cls, v: Sequence, n: int) -> "Matrix":
        return cls([v[i * n:(i + 1) * n] for i in range(n)], n)

    def rank(self) -> int:
        return rref(self)[1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ``ValueError`` when singular."""
        if not self.is_square():
            raise DimensionError("only square matrices are invertible")
        n = self.rows
        aug = Matrix([list(r) + list(e) for r, e in zip(self._data, Matrix.identity(n)._data)], 2 * n)
        red, rank, pivots = _rref(aug)
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix._raw(tuple(r[n:] for r in red[:n]), n)

    def det(self):
        if not self.is_square():
            raise DimensionError("determinant needs a square matrix")
        a = [list(r) for r in self._data]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d = d * a[c][c]
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = a[r][c] / a[c][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return d


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            s = s + x * y
    return s if not isinstance(s, int) else Fraction(s)


def _rref(m: Matrix) -> tuple[list[tuple], int, list[int]]:
    a = [list(r) for r in m._data]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        if pv != 1:
            a[r] = [x / pv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y if y != 0 else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in a], r, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank of ``m``."""
    red, rank, _ = _rref(m)
    return Matrix._raw(tuple(red), m.cols), rank


class Subspace:
    """A linear subspace of ``F^n`` held as an echelonized row basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [as_vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        self.ambient_dim = ambient_dim
        if rows:
            red, rank, pivots = _rref(Matrix._raw(tuple(rows), ambient_dim))
            self.basis = Matrix._raw(tuple(red[:rank]), ambient_dim)
            self.pivots = tuple(pivots)
        else:
            self.basis = Matrix._raw((), ambient_dim)
            self.pivots = ()

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n)._data)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.dim)]

    def complement_indices(self) -> tuple[int, ...]:
        """Coordinates that are not pivots; the standard vectors there span a complement."""
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimension mismatch {self.ambient_dim} vs {other.ambient_dim}"
            )

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        v = list(as_vector(v))
        for r, p in enumerate(self.pivots):
            f = v[p]
            if f != 0:
                row = self.basis.row(r)
                v = [x - f * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        v = as_vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        return all(x == 0 for x in self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the echelon basis; ``ValueError`` if ``v`` is outside."""
        v = as_vector(v)
        if not self.contains(v):
            raise ValueError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.vectors())

    def image(self, m: Matrix) -> "Subspace":
        return Subspace(m.rows, [m @ v for v in self.vectors()])

    def conjugate(self) -> "Subspace":
        return Subspace(self.ambient_dim, [[_conj(x) for x in v] for v in self.vectors()])

    def __add__(self, other: "Subspace") -> "Subspace":
        return span_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return span_intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def kernel(m: Matrix) -> Subspace:
    """Null space ``{x : m x = 0}`` as a subspace of ``F^cols``."""
    red, rank, pivots = _rref(m)
    piv = set(pivots)
    vectors = []
    for f in range(m.cols):
        if f in piv:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    return Subspace(a.ambient_dim, a.vectors() + b.vectors())


def span_intersect(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    # sum_i s_i a_i - sum_j t_j b_j = 0
    cols = a.vectors() + [tuple(-x for x in v) for v in b.vectors()]
    ker = kernel(Matrix.from_columns(cols))
    out = []
    for coeffs in ker.vectors():
        v = [Fraction(0)] * a.ambient_dim
        for s, av in zip(coeffs[: a.dim], a.vectors()):
            if s != 0:
                v = [x + s * y for x, y in zip(v, av)]
        out.append(v)
    return Subspace(a.ambient_dim, out)


def contains(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


def commutant(mats: Iterable[Matrix], n: int) -> Subspace:
    """All ``n x n`` matrices ``X`` with ``XM = MX`` for every ``M`` in ``mats``.

    The result lives in ``F^(n*n)``; use ``Matrix.unflatten`` on its vectors.
    """
    equations = []
    for m in mats:
        if m.shape != (n, n):
            raise DimensionError(f"expected {n}x{n} matrices, got {m.shape}")
        for a in range(n):
            for b in range(n):
                # (XM - MX)_{ab} = sum_c X_{ac} M_{cb} - M_{ac} X_{cb}
                row = [Fraction(0)] * (n * n)
                for c in range(n):
                    row[a * n + c] += m[c, b]
                    row[c * n + b] -= m[a, c]
                if any(x != 0 for x in row):
                    equations.append(row)
    if not equations:
        return Subspace.full(n * n)
    return kernel(Matrix(equations, n * n))


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """A particular solution of ``m x = b`` (free variables set to 0), or ``None``."""
    b = as_vector(b)
    if len(b) != m.rows:
        raise DimensionError("right-hand side has the wrong length")
    aug = Matrix._raw(tuple(tuple(r) + (x,) for r, x in zip(m._data, b)), m.cols + 1)
    red, rank, pivots = _rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r][m.cols]
    return tuple(x)
