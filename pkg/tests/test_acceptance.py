"""One test per acceptance criterion.  All arithmetic is exact, so every
numerical tolerance is zero; the only tolerances are the wall-clock budgets
pinned below."""

import json
import time

import pytest

import conftest
from abelcx import affine, catalog
from abelcx.decomposition import affine_quotient, flag_decomposition
from abelcx.io import (
    associative_from_json,
    associative_to_json,
    dumps,
    lie_from_json,
    lie_to_json,
    structure_from_json,
    structure_to_json,
)
from abelcx.lie import center, is_solvable, nilpotency_class, validate
from abelcx.linalg import Matrix, Subspace
from abelcx.obstructions import codim1_obstruction, free_two_step_obstruction, search_abelian_J
from abelcx.structures import is_abelian, is_abelian_hypercomplex, key_characterizations

CATALOG_BUDGET_SECONDS = 1.0
SUITE_BUDGET_SECONDS = conftest.SUITE_BUDGET_SECONDS  # 60.0
RANDOM_CONJUGATES = 50
RANDOM_ABELIAN_CONJUGATES = 100
SEARCH_BUDGET = 10_000
SEED = 20240101

FOUR_DIM = ("S0", "S1", "S2", "S8", "S9", "S10", "S11")


def _bundled_commutative():
    algs = [affine.trivial(n) for n in range(0, 5)]
    algs += [affine.small_algebra(n) for n in ("reals", "complexes", "diag2", "jordan2", "split2")]
    complex_algs = [affine.complexes_structure()] + [affine.toeplitz_algebra(k) for k in range(1, 6)]
    return algs + [C.base for C in complex_algs], complex_algs


def test_criterion_1_catalog_soundness():
    t0 = time.perf_counter()
    for cid in FOUR_DIM:
        e = catalog.entry(cid)
        assert validate(e.algebra).ok, cid
        assert is_abelian(e.algebra, e.structures["J"]), cid
    assert time.perf_counter() - t0 < CATALOG_BUDGET_SECONDS


def test_criterion_2_key_equivalence(corpus):
    pairs = corpus + conftest.random_conjugates(corpus, RANDOM_CONJUGATES, SEED)
    assert len(pairs) >= len(corpus) + RANDOM_CONJUGATES
    for label, g, J in pairs:
        verdicts = key_characterizations(g, J)
        assert len(set(verdicts.values())) == 1, (label, verdicts)
    # both outcomes are represented
    assert {key_characterizations(g, J)["abelian"] for _, g, J in corpus} == {True, False}


def test_criterion_3_aff_law():
    algs, complex_algs = _bundled_commutative()
    for A in algs:
        g = affine.aff(A)
        assert validate(g).ok
        assert is_abelian(g, affine.standard_J(A))
    for C in complex_algs:
        g = affine.aff(C.base)
        J = affine.standard_J(C.base)
        for sign in ("minus", "plus"):
            assert is_abelian_hypercomplex(g, J, affine.standard_K(C, sign)), sign


def test_criterion_4_k_step_nilpotency():
    for k in range(1, 6):
        assert nilpotency_class(affine.aff(affine.toeplitz_algebra(k).base)) == k


def test_criterion_5_connection():
    algs, _ = _bundled_commutative()
    noncommutative = affine.small_algebra("upper2")
    assert not affine.check_algebra(noncommutative).commutative
    for A in algs + [noncommutative]:
        rep = affine.connection_checks(A)
        assert rep.torsion_free and rep.flat and rep.j_parallel, A.basis_names


def test_criterion_6_affine_certificates():
    e = catalog.heisenberg_example(1)
    g, J = e.algebra, e.structures["J"]
    cert = affine_quotient(g, J, Subspace(4, [g.vector({"z": 1}), g.vector({"x1": 1})]))
    assert cert.ok and cert.kernel == center(g)
    # trivial R: one basis element with zero square
    assert cert.A.dim == 1 and not any(cert.A.m[0][0])

    e = catalog.entry("S11")
    g, J = e.algebra, e.structures["J"]
    cert = affine_quotient(g, J, Subspace(4, [g.basis_vector(2), g.basis_vector(3)]))
    assert cert.ok and cert.kernel == center(g)
    M1 = Matrix.block_diag(Matrix.zeros(2, 2), Matrix.identity(2))
    Mi = Matrix.block_diag(Matrix.zeros(2, 2), Matrix([[0, -1], [1, 0]]))
    ref = Subspace(16, [M1.flatten(), Mi.flatten()])
    f = Matrix.from_columns([ref.coordinates(B.flatten()) for B in cert.A_basis], rows=2)
    assert affine.is_algebra_isomorphism(f, cert.A, affine.small_algebra("complexes"))


def test_criterion_7_flag_decomposition(corpus):
    abelian_pairs = [(label, g, J) for label, g, J in corpus if is_abelian(g, J)]
    labels = {label.split(":")[0] for label, _, _ in abelian_pairs}
    assert {"family-1-1", "family-2-1", "family-1-2"} <= labels
    for label, g, J in abelian_pairs:
        first = flag_decomposition(g, J)
        assert first.ok, label
        assert first.steps[-1].ideal == Subspace.full(g.dim), label
        again = flag_decomposition(g, J)
        assert dumps(first.to_dict(g)) == dumps(again.to_dict(g)), label


def test_criterion_8_abelian_implies_solvable(corpus):
    abelian_pairs = [p for p in corpus if is_abelian(p[1], p[2])]
    pairs = abelian_pairs + conftest.random_conjugates(abelian_pairs, RANDOM_ABELIAN_CONJUGATES, SEED + 1)
    assert len(pairs) >= RANDOM_ABELIAN_CONJUGATES
    for label, g, J in pairs:
        assert is_abelian(g, J), label
        assert is_solvable(g), label


def test_criterion_9_obstructions():
    for cid, dim in (("dext-R2", 3), ("dext-h1", 4), ("dext-h2", 6)):
        rep = codim1_obstruction(catalog.entry(cid).algebra, cid)
        assert rep.verdict == "ruled-out" and rep.evidence["dim"] == dim > 2
    for n, span in ((3, 3), (4, 6)):
        rep = free_two_step_obstruction(n)
        assert rep.verdict == "ruled-out"
        assert rep.evidence["commutant_dim"] == 1 and rep.evidence["j_span_dim"] == span
    for cid in ("S8", "RxH1"):
        g = catalog.entry(cid).algebra
        rep = search_abelian_J(g, SEARCH_BUDGET, cid)
        assert rep.verdict == "admits" and rep.evidence["candidates"] <= SEARCH_BUDGET
        assert is_abelian(g, rep.witness)


def _round_trip(obj, to_json, from_json):
    first = dumps(to_json(obj))
    assert dumps(to_json(from_json(json.loads(first)))) == first


def test_criterion_10_round_trip_and_suite_time():
    for cid in catalog.catalog_ids():
        e = catalog.entry(cid)
        _round_trip(e.algebra, lie_to_json, lie_from_json)
        for J in e.structures.values():
            _round_trip(J, structure_to_json, lambda d: structure_from_json(d, e.algebra.dim))
        if e.algebra_A is not None:
            _round_trip(e.algebra_A, associative_to_json, associative_from_json)
    # this test is scheduled last; the session hook re-checks the full run
    assert time.perf_counter() - conftest._START < SUITE_BUDGET_SECONDS
