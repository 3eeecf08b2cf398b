"""JSON file formats for algebras, complex structures and reports.

Rationals are written as canonical strings (``"3"``, ``"-1/2"``).  Output is
deterministic: fixed key order, two-space indent, LF newline at the end, so
emit -> parse -> emit is byte-identical.

Lie algebra file::

    {"schema_version": "1", "kind": "lie_algebra", "dim": 2, "basis": ["x", "y"],
     "brackets": [["x", "y", {"x": "1"}]]}

Only pairs ``i < j`` with a nonzero bracket are listed.  Optional fields:
``"gram"`` (positive-definite matrix) and ``"i_map"``.

Associative algebra file: same shape with ``"kind": "associative_algebra"``
and ``"products"`` listing every nonzero ``e_i e_j`` (all ordered pairs);
complex algebras add ``"i_map"``.

Complex structure file: ``{"kind": "complex_structure", "dim": n,
"matrix": [[...]]}`` where column ``j`` is the image of basis vector ``j``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .affine import AssociativeAlgebra, ComplexAlgebraStructure
from .lie import LieAlgebra
from .linalg import Matrix, Subspace, format_scalar
from .structures import check_complex_structure

__all__ = [
    "FormatError",
    "SCHEMA_VERSION",
    "dumps",
    "lie_from_json",
    "lie_to_json",
    "load_json",
    "matrix_from_json",
    "matrix_to_json",
    "structure_from_json",
    "structure_to_json",
    "write_json",
]

SCHEMA_VERSION = "1"


class FormatError(ValueError):
    """Malformed or inconsistent input file."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_json(path: str | Path, obj: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))
    return path


def load_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be an object")
    return data


def _scalar(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(f"rational must be a string or integer, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {x!r}") from exc


def matrix_to_json(m: Matrix) -> list:
    return [[format_scalar(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(rows, n: int | None = None) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError("matrix must be a list of rows")
    if n is not None and (len(rows) != n or any(len(r) != n for r in rows)):
        raise FormatError(f"matrix must be {n}x{n}")
    if not rows:
        return Matrix.zeros(0, 0)
    if len({len(r) for r in rows}) != 1:
        raise FormatError("ragged matrix")
    return Matrix([[_scalar(x) for x in r] for r in rows])


def subspace_to_json(s: Subspace) -> list:
    return [[format_scalar(x) for x in v] for v in s.vectors()]


def _coeff_map(names, vec) -> dict:
    return {names[k]: format_scalar(x) for k, x in enumerate(vec) if x != 0}


def _header(d: dict, kind: str):
    if d.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version {d.get('schema_version')!r}")
    if d.get("kind", kind) != kind:
        raise FormatError(f"expected kind {kind!r}, got {d.get('kind')!r}")
    basis = d.get("basis")
    dim = d.get("dim")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise FormatError("basis must be a list of names")
    if len(set(basis)) != len(basis):
        raise FormatError("basis names must be unique")
    if dim != len(basis):
        raise FormatError("dim does not match the basis length")
    return basis


def _vector_from_map(idx: dict, n: int, coeffs) -> list:
    if not isinstance(coeffs, dict):
        raise FormatError("bracket/product value must be an object {name: rational}")
    vec = [Fraction(0)] * n
    for name, x in coeffs.items():
        if name not in idx:
            raise FormatError(f"unknown basis name {name!r}")
        vec[idx[name]] = _scalar(x)
    return vec


def lie_to_json(g: LieAlgebra, extra: dict | None = None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "kind": "lie_algebra",
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": [
            [g.basis_names[i], g.basis_names[j], _coeff_map(g.basis_names, v)]
            for i, j, v in g.nonzero_brackets()
        ],
    }
    for key, val in (extra or {}).items():
        out[key] = matrix_to_json(val) if isinstance(val, Matrix) else val
    return out


def lie_from_json(d: dict) -> LieAlgebra:
    """Parse a Lie algebra file.  Skew completion is applied; validation is left to the caller."""
    basis = _header(d, "lie_algebra")
    n = len(basis)
    idx = {b: k for k, b in enumerate(basis)}
    entries = d.get("brackets", [])
    if not isinstance(entries, list):
        raise FormatError("brackets must be a list")
    c = [[None] * n for _ in range(n)]
    for e in entries:
        if not (isinstance(e, list) and len(e) == 3):
            raise FormatError(f"bracket entry must be [name, name, {{...}}], got {e!r}")
        a, b, coeffs = e
        if a not in idx or b not in idx:
            raise FormatError(f"unknown basis name in bracket {e!r}")
        i, j = idx[a], idx[b]
        if c[i][j] is not None:
            raise FormatError(f"duplicate bracket [{a}, {b}]")
        c[i][j] = _vector_from_map(idx, n, coeffs)
    zero = [Fraction(0)] * n
    full = [
        [
            c[i][j] if c[i][j] is not None else ([-x for x in c[j][i]] if c[j][i] is not None else zero)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return LieAlgebra(basis, full)


def associative_to_json(A: AssociativeAlgebra, i_map: Matrix | None = None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "kind": "associative_algebra",
        "dim": A.dim,
        "basis": list(A.basis_names),
        "products": [
            [A.basis_names[i], A.basis_names[j], _coeff_map(A.basis_names, A.m[i][j])]
            for i in range(A.dim)
            for j in range(A.dim)
            if any(x != 0 for x in A.m[i][j])
        ],
    }
    if i_map is not None:
        out["i_map"] = matrix_to_json(i_map)
    return out


def associative_from_json(d: dict) -> AssociativeAlgebra | ComplexAlgebraStructure:
    basis = _header(d, "associative_algebra")
    n = len(basis)
    idx = {b: k for k, b in enumerate(basis)}
    m = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for e in d.get("products", []):
        if not (isinstance(e, list) and len(e) == 3):
            raise FormatError(f"product entry must be [name, name, {{...}}], got {e!r}")
        a, b, coeffs = e
        if a not in idx or b not in idx:
            raise FormatError(f"unknown basis name in product {e!r}")
        if (a, b) in seen:
            raise FormatError(f"duplicate product {a}*{b}")
        seen.add((a, b))
        m[idx[a]][idx[b]] = _vector_from_map(idx, n, coeffs)
    A = AssociativeAlgebra(basis, m)
    if "i_map" in d:
        try:
            return ComplexAlgebraStructure(A, matrix_from_json(d["i_map"], n))
        except ValueError as exc:
            raise FormatError(f"invalid i_map: {exc}") from exc
    return A


def structure_to_json(J: Matrix) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "complex_structure",
        "dim": J.rows,
        "matrix": matrix_to_json(J),
    }


def structure_from_json(d: dict, n: int | None = None) -> Matrix:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version {d.get('schema_version')!r}")
    if d.get("kind", "complex_structure") != "complex_structure":
        raise FormatError(f"expected a complex_structure file, got {d.get('kind')!r}")
    dim = d.get("dim", n)
    if n is not None and dim != n:
        raise FormatError(f"structure has dim {dim}, algebra has dim {n}")
    J = matrix_from_json(d.get("matrix"), dim)
    try:
        return check_complex_structure(J)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
