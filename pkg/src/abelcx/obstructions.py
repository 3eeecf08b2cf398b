"""Non-existence tests for abelian complex structures, plus a bounded search.

Verdicts are ``"ruled-out"`` (always with re-checkable evidence), ``"admits"``
(always with a witness ``J`` that passes :func:`~abelcx.structures.is_abelian`)
or ``"inconclusive"``.  The search never concludes non-existence.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .catalog import free_two_step
from .lie import (
    LieAlgebra,
    bracket,
    center,
    commutator_subalgebra,
    is_solvable,
    nilpotency_class,
    series,
)
from .linalg import Matrix, Subspace, commutant, kernel
from .structures import is_abelian

__all__ = [
    "JzFamily",
    "ObstructionReport",
    "adapted_basis",
    "codim1_obstruction",
    "free_two_step_obstruction",
    "is_positive_definite",
    "jz_family",
    "obstruct",
    "search_abelian_J",
    "two_step_obstruction",
]

log = logging.getLogger(__name__)

RULED_OUT, ADMITS, INCONCLUSIVE = "ruled-out", "admits", "inconclusive"


@dataclass
class ObstructionReport:
    algebra_id: str
    verdict: str
    reason: str | None
    evidence: dict = field(default_factory=dict)
    witness: Matrix | None = None

    def to_dict(self) -> dict:
        from .io import matrix_to_json

        out = {
            "algebra_id": self.algebra_id,
            "verdict": self.verdict,
            "reason": self.reason,
            "evidence": self.evidence,
        }
        if self.witness is not None:
            out["witness"] = matrix_to_json(self.witness)
        return out


def codim1_obstruction(s: LieAlgebra, algebra_id: str = "") -> ObstructionReport:
    """Solvable ``s`` whose commutator has codimension 1 only admits an abelian
    ``J`` when ``s`` is the two-dimensional nonabelian algebra."""
    if not is_solvable(s):
        raise ValueError("codimension-1 test needs a solvable algebra")
    n = s.dim
    comm = commutator_subalgebra(s)
    ev = {"dim": n, "dim_commutator": comm.dim, "codim_commutator": n - comm.dim}
    if n - comm.dim != 1:
        return ObstructionReport(algebra_id, INCONCLUSIVE, None, ev)
    if n > 2:
        return ObstructionReport(algebra_id, RULED_OUT, "codim1", ev)
    # n == 2: s is nonabelian of dim 2; realize [x, y] = x with Jx = y
    x = comm.vectors()[0]
    y0 = next(s.basis_vector(k) for k in range(2) if not comm.contains(s.basis_vector(k)))
    lam = comm.coordinates(bracket(s, x, y0))[0]
    y = tuple(t / lam for t in y0)
    P = Matrix.from_columns([x, y])
    J = P @ Matrix([[0, -1], [1, 0]]) @ P.inverse()
    assert is_abelian(s, J)
    return ObstructionReport(algebra_id, ADMITS, "codim1", ev, witness=J)


def is_positive_definite(G: Matrix) -> bool:
    """Symmetric with all leading principal minors positive (exact Sylvester test)."""
    if not G.is_square() or G != G.T:
        return False
    for k in range(1, G.rows + 1):
        minor = Matrix([G.row(i)[:k] for i in range(k)], k)
        if minor.det() <= 0:
            return False
    return True


@dataclass
class JzFamily:
    v: Subspace
    z: Subspace
    maps: list        # j_z for each echelon basis vector of z, in the echelon basis of v
    gram: Matrix
    gram_v: Matrix    # gram restricted to v


def jz_family(n_alg: LieAlgebra, gram: Matrix | None = None) -> JzFamily:
    """Skew maps ``j_z`` on ``v = z^perp`` with ``<j_z v, w> = <z, [v, w]>``."""
    if nilpotency_class(n_alg) != 2:
        raise ValueError("algebra is not two-step nilpotent")
    n = n_alg.dim
    G = Matrix.identity(n) if gram is None else gram
    if G.shape != (n, n) or not is_positive_definite(G):
        raise ValueError("gram matrix is not positive definite")
    z = center(n_alg)
    zvecs = z.vectors()
    v = kernel(Matrix([G @ zz for zz in zvecs], n)) if zvecs else Subspace.full(n)
    V = Matrix.from_columns(v.vectors(), rows=n)
    Gv = V.T @ G @ V
    Gv_inv = Gv.inverse()
    vvecs = v.vectors()
    m = len(vvecs)
    maps = []
    for zz in zvecs:
        Gz = G @ zz
        B = Matrix(
            [[sum(p * q for p, q in zip(Gz, bracket(n_alg, vvecs[a], vvecs[b]))) for b in range(m)] for a in range(m)],
            m,
        )
        M = Gv_inv @ B.T
        # defining identity and skew-symmetry w.r.t. the gram form
        if M.T @ Gv != B:
            raise AssertionError("j_z does not satisfy its defining identity")
        if Gv @ M != -(Gv @ M).T:
            raise AssertionError("j_z is not skew-symmetric")
        maps.append(M)
    return JzFamily(v, z, maps, G, Gv)


def two_step_obstruction(n_alg: LieAlgebra, gram: Matrix | None = None, algebra_id: str = "") -> ObstructionReport:
    """Commutant test for two-step nilpotent algebras with ``2 dim[n,n] = m(m-1)``, ``m = dim n - dim z >= 3``."""
    fam = jz_family(n_alg, gram)
    m = fam.v.dim
    dim_comm = commutator_subalgebra(n_alg).dim
    ev = {"rank": m, "dim_commutator": dim_comm, "dim_center": fam.z.dim}
    if m < 3 or 2 * dim_comm != m * (m - 1):
        ev["hypothesis"] = False
        return ObstructionReport(algebra_id, INCONCLUSIVE, None, ev)
    ev["hypothesis"] = True
    j_span = Subspace(m * m, [M.flatten() for M in fam.maps])
    ev["j_span_dim"] = j_span.dim
    span_basis = [Matrix.unflatten(w, m) for w in j_span.vectors()]
    comm = commutant(span_basis, m)
    ev["commutant_dim"] = comm.dim
    scalars = Subspace(m * m, [Matrix.identity(m).flatten()])
    if j_span.dim == m * (m - 1) // 2 and comm == scalars:
        return ObstructionReport(algebra_id, RULED_OUT, "commutant", ev)
    log.warning("commutant test did not rule out %s despite its hypothesis holding: %s", algebra_id, ev)
    ev["contradiction"] = True
    return ObstructionReport(algebra_id, INCONCLUSIVE, "commutant", ev)


def free_two_step_obstruction(n_rank: int, gram: Matrix | None = None) -> ObstructionReport:
    if n_rank < 3:
        raise ValueError("the commutant test needs rank at least 3")
    e = free_two_step(n_rank)
    return two_step_obstruction(e.algebra, gram, e.id)


def _extend(basis: list, target: Subspace) -> list:
    n = target.ambient_dim
    span = Subspace(n, basis)
    out = list(basis)
    for w in target.vectors():
        if not span.contains(w):
            out.append(w)
            span = Subspace(n, out)
    return out


def adapted_basis(s: LieAlgebra) -> Matrix:
    """Basis through ``[s,s] & z``, ``[s,s]``, ``[s,s] + z``, ``s`` (columns)."""
    c, z = commutator_subalgebra(s), center(s)
    chain = [c & z, c, c + z, Subspace.full(s.dim)]
    basis: list = []
    for w in chain:
        basis = _extend(basis, w)
    return Matrix.from_columns(basis, rows=s.dim)


def _matchings(items: list) -> Iterator[list]:
    if not items:
        yield []
        return
    a = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for m in _matchings(rest):
            yield [(a, items[k])] + m


def _candidates(n: int) -> Iterator[Matrix]:
    for match in _matchings(list(range(n))):
        for signs in itertools.product((1, -1), repeat=len(match)):
            cols = [[Fraction(0)] * n for _ in range(n)]
            for (a, b), sg in zip(match, signs):
                cols[a][b] = Fraction(sg)
                cols[b][a] = Fraction(-sg)
            yield Matrix.from_columns(cols, rows=n)


def search_abelian_J(s: LieAlgebra, budget: int = 10_000, algebra_id: str = "") -> ObstructionReport:
    """Try signed pairings ``J e_a = +-e_b`` in the given basis, then in a filtration-adapted basis.

    Candidates are evaluated in a fixed order; the first abelian one wins.
    The verdict is ``admits`` (with a verified witness) or ``inconclusive``.
    """
    n = s.dim
    if n % 2:
        # no candidates exist; the search itself never rules anything out
        return ObstructionReport(
            algebra_id, INCONCLUSIVE, "search-exhausted", {"candidates": 0, "budget": budget, "odd_dim": True}
        )
    bases = [Matrix.identity(n)]
    P = adapted_basis(s)
    if P != bases[0]:
        bases.append(P)
    tried = 0
    seen = set()
    for P in bases:
        Pinv = P.inverse()
        for J0 in _candidates(n):
            if tried >= budget:
                return ObstructionReport(
                    algebra_id, INCONCLUSIVE, "search-exhausted", {"candidates": tried, "budget": budget}
                )
            J = P @ J0 @ Pinv
            if J in seen:
                continue
            seen.add(J)
            tried += 1
            if is_abelian(s, J):
                return ObstructionReport(algebra_id, ADMITS, None, {"candidates": tried}, witness=J)
    return ObstructionReport(
        algebra_id, INCONCLUSIVE, "search-exhausted", {"candidates": tried, "budget": budget, "complete": True}
    )


def obstruct(s: LieAlgebra, gram: Matrix | None = None, search_budget: int = 0, algebra_id: str = "") -> ObstructionReport:
    """Run the available tests in order and return the first decisive verdict."""
    if s.dim % 2:
        return ObstructionReport(algebra_id, RULED_OUT, "odd-dim", {"dim": s.dim})
    if not is_solvable(s):
        dims = series(s, "derived").dims
        return ObstructionReport(algebra_id, RULED_OUT, "not-solvable", {"derived_series_dims": dims})
    rep = codim1_obstruction(s, algebra_id)
    if rep.verdict != INCONCLUSIVE:
        return rep
    if nilpotency_class(s) == 2:
        rep = two_step_obstruction(s, gram, algebra_id)
        if rep.verdict != INCONCLUSIVE:
            return rep
    if search_budget > 0:
        return search_abelian_J(s, search_budget, algebra_id)
    return ObstructionReport(algebra_id, INCONCLUSIVE, None, rep.evidence)
