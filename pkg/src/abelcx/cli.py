"""Command line front end.

Exit codes: 0 every requested verdict holds, 1 a mathematical check failed,
2 the input could not be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import affine, catalog
from .decomposition import CertificateError, NotAbelianError, flag_decomposition
from .io import (
    FormatError,
    associative_from_json,
    associative_to_json,
    dumps,
    lie_from_json,
    lie_to_json,
    load_json,
    matrix_from_json,
    structure_from_json,
    structure_to_json,
    write_json,
)
from .lie import (
    center,
    commutator_subalgebra,
    derived_length,
    is_nilpotent,
    is_solvable,
    nilpotency_class,
    series,
    validate,
)
from .obstructions import free_two_step_obstruction, obstruct, search_abelian_J
from .structures import (
    is_abelian_hypercomplex,
    is_complex_bilinear,
    is_hypercomplex,
    is_integrable,
    key_characterizations,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(args, report: dict, text: str):
    if args.json:
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _load_algebra(path):
    return lie_from_json(load_json(path))


def _load_structure(path, n):
    return structure_from_json(load_json(path), n)


def cmd_check(args) -> int:
    g = _load_algebra(args.algebra)
    vrep = validate(g)
    report: dict = {"valid": vrep.ok, "dim": g.dim}
    lines = [f"dim: {g.dim}", f"valid: {vrep.ok} ({vrep.summary()})"]
    if not vrep.ok:
        report["skew_violations"] = [[i, j] for i, j, _ in vrep.skew_violations]
        report["jacobi_violations"] = [list(t) for t, _ in vrep.jacobi_violations]
        _emit(args, report, "\n".join(lines))
        return EXIT_FAIL
    report.update(
        solvable=is_solvable(g),
        nilpotent=is_nilpotent(g),
        nilpotency_class=nilpotency_class(g),
        derived_length=derived_length(g),
        derived_series_dims=series(g, "derived").dims,
        lower_central_series_dims=series(g, "lower-central").dims,
        dim_center=center(g).dim,
        dim_commutator=commutator_subalgebra(g).dim,
    )
    for key in ("solvable", "nilpotent", "nilpotency_class", "derived_length",
                "derived_series_dims", "lower_central_series_dims", "dim_center", "dim_commutator"):
        lines.append(f"{key}: {report[key]}")
    ok = True
    if args.structure:
        J = _load_structure(args.structure, g.dim)
        verdicts = {"integrable": is_integrable(g, J), "complex_bilinear": is_complex_bilinear(g, J)}
        verdicts.update(key_characterizations(g, J))
        report["structure"] = verdicts
        lines += [f"J {k}: {v}" for k, v in verdicts.items()]
        if args.require == "integrable":
            ok = verdicts["integrable"]
        else:
            ok = all(verdicts[k] for k in ("integrable", "abelian", "subalgebras_abelian",
                                           "adjoint_holomorphic", "coadjoint_holomorphic"))
        if args.K:
            K = _load_structure(args.K, g.dim)
            hyper = {"hypercomplex": is_hypercomplex(g, J, K), "abelian_hypercomplex": is_abelian_hypercomplex(g, J, K)}
            report["hypercomplex"] = hyper
            lines += [f"(J, K) {k}: {v}" for k, v in hyper.items()]
            ok = ok and (hyper["hypercomplex"] if args.require == "integrable" else hyper["abelian_hypercomplex"])
    report["ok"] = ok
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def _builtin_algebra(name: str):
    if name.startswith("toeplitz-"):
        return affine.toeplitz_algebra(int(name.split("-", 1)[1]))
    if name.startswith("trivial-"):
        return affine.trivial(int(name.split("-", 1)[1]))
    if name == "complexes":
        return affine.complexes_structure()
    return affine.small_algebra(name)


def cmd_aff(args) -> int:
    if args.builtin:
        try:
            A = _builtin_algebra(args.builtin)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    elif args.algebra_A:
        A = associative_from_json(load_json(args.algebra_A))
    else:
        raise FormatError("give an algebra file or --builtin NAME")
    C = A if isinstance(A, affine.ComplexAlgebraStructure) else None
    base = C.base if C else A
    rep = affine.check_algebra(base)
    if not rep.associative:
        sys.stderr.write("algebra is not associative\n")
        return EXIT_FAIL
    g = affine.aff(base)
    out = Path(args.out)
    stem = args.name
    paths = [write_json(out / f"{stem}.algebra.json", lie_to_json(g)),
             write_json(out / f"{stem}.J.json", structure_to_json(affine.standard_J(base)))]
    if C is not None:
        paths.append(write_json(out / f"{stem}.K.json", structure_to_json(affine.standard_K(C, args.k_sign))))
    _emit(args, {"written": [str(p) for p in paths], "commutative": rep.commutative},
          "\n".join(str(p) for p in paths))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        ids = catalog.catalog_ids()
        _emit(args, {"ids": ids}, "\n".join(ids))
        return EXIT_OK
    if not args.id:
        raise FormatError("catalog emit needs an id")
    try:
        e = catalog.entry(args.id)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    out = Path(args.out)
    paths = [write_json(out / f"{e.id}.algebra.json", lie_to_json(e.algebra))]
    for name, M in e.structures.items():
        paths.append(write_json(out / f"{e.id}.{name}.json", structure_to_json(M)))
    if e.algebra_A is not None:
        paths.append(write_json(out / f"{e.id}.A.json", associative_to_json(e.algebra_A)))
    _emit(args, {"written": [str(p) for p in paths]}, "\n".join(str(p) for p in paths))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _load_algebra(args.algebra)
    if not validate(g).ok:
        sys.stderr.write("input is not a Lie algebra\n")
        return EXIT_FAIL
    J = _load_structure(args.structure, g.dim)
    try:
        flag = flag_decomposition(g, J)
    except NotAbelianError as exc:
        _emit(args, {"ok": False, "error": str(exc)}, f"error: {exc}")
        return EXIT_FAIL
    except CertificateError as exc:
        _emit(args, {"ok": False, "error": str(exc), "check": exc.check}, f"certificate failure: {exc}")
        return EXIT_FAIL
    report = flag.to_dict(g)
    report["ok"] = flag.ok
    lines = [f"flag length: {flag.length}", f"derived length: {flag.derived_length}"]
    for k, st in enumerate(flag.steps, 1):
        c = st.certificate
        lines.append(
            f"step {k}: dim s_{k} = {st.ideal.dim}, dim s_{k}/s_{k - 1} = {st.quotient_dim}, "
            f"dim A_{k} = {c.A.dim}, dim kernel(f) = {c.kernel.dim}, "
            f"checks {'pass' if c.ok else 'FAIL'}"
        )
        for i, a in enumerate(c.A.basis_names):
            for j, b in enumerate(c.A.basis_names):
                prod = c.A.m[i][j]
                if any(x != 0 for x in prod):
                    terms = " + ".join(f"{x}*{n}" for x, n in zip(prod, c.A.basis_names) if x != 0)
                    lines.append(f"    {a}*{b} = {terms}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if flag.ok else EXIT_FAIL


def _load_gram(path, n):
    if not path:
        return None
    d = load_json(path)
    return matrix_from_json(d.get("gram", d.get("matrix")), n)


def cmd_obstruct(args) -> int:
    if args.free_two_step is not None:
        if args.free_two_step < 3:
            raise FormatError("--free-two-step needs rank >= 3")
        rep = free_two_step_obstruction(args.free_two_step)
    else:
        if not args.algebra:
            raise FormatError("give an algebra file or --free-two-step N")
        data = load_json(args.algebra)
        g = lie_from_json(data)
        if not validate(g).ok:
            sys.stderr.write("input is not a Lie algebra\n")
            return EXIT_FAIL
        gram = _load_gram(args.gram, g.dim)
        if gram is None and "gram" in data:
            gram = matrix_from_json(data["gram"], g.dim)
        rep = obstruct(g, gram, args.search_budget, Path(args.algebra).name)
    d = rep.to_dict()
    _emit(args, d, f"verdict: {rep.verdict}\nreason: {rep.reason}\nevidence: {json.dumps(rep.evidence)}")
    return EXIT_OK


def cmd_search(args) -> int:
    g = _load_algebra(args.algebra)
    if not validate(g).ok:
        sys.stderr.write("input is not a Lie algebra\n")
        return EXIT_FAIL
    rep = search_abelian_J(g, args.search_budget, Path(args.algebra).name)
    if rep.witness is not None and args.out:
        write_json(Path(args.out) / "witness.J.json", structure_to_json(rep.witness))
    _emit(args, rep.to_dict(), f"verdict: {rep.verdict}\nevidence: {json.dumps(rep.evidence)}")
    return EXIT_OK if rep.verdict == "admits" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abelcx", description="Abelian complex structures on Lie algebras, exactly.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="validate an algebra and optionally a complex structure")
    c.add_argument("algebra")
    c.add_argument("structure", nargs="?")
    c.add_argument("--K", help="second structure file; adds hypercomplex verdicts")
    c.add_argument("--require", choices=["abelian", "integrable"], default="abelian")
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("aff", parents=[common], help="build aff(A) with its standard structures")
    a.add_argument("algebra_A", nargs="?")
    a.add_argument("--builtin", help="reals, complexes, diag2, jordan2, split2, upper2, trivial-N, toeplitz-K")
    a.add_argument("--out", default=".")
    a.add_argument("--name", default="aff")
    a.add_argument("--k-sign", choices=["minus", "plus"], default="minus",
                   help="minus: K(a,b) = (-ia, ib); plus: K(a,b) = (ia, -ib)")
    a.set_defaults(func=cmd_aff)

    k = sub.add_parser("catalog", parents=[common], help="list or emit catalog entries")
    k.add_argument("action", choices=["list", "emit"])
    k.add_argument("id", nargs="?")
    k.add_argument("--out", default=".")
    k.set_defaults(func=cmd_catalog)

    d = sub.add_parser("decompose", parents=[common], help="flag of J-stable ideals with certificates")
    d.add_argument("algebra")
    d.add_argument("structure")
    d.set_defaults(func=cmd_decompose)

    o = sub.add_parser("obstruct", parents=[common], help="run the non-existence tests")
    o.add_argument("algebra", nargs="?")
    o.add_argument("--free-two-step", type=int)
    o.add_argument("--gram")
    o.add_argument("--search-budget", type=int, default=0)
    o.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("search", parents=[common], help="bounded search for an abelian J")
    s.add_argument("algebra")
    s.add_argument("--search-budget", type=int, default=10_000)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FormatError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
