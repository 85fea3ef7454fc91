"""Command-line interface.

    tits3 gen TARGET [--field F] [--n N] [--out PATH] [--format json|text]
    tits3 verify TARGET|FILE [--suite S] [--field F] [--n N] [--seed S] [--out PATH]
    tits3 magic-square [--field F] [--format json|text] [--out PATH]

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra import (DEFAULT_SEED, Superalgebra, VerificationReport, check_commutative_super,
                      check_grading, check_jacobiA_identity, check_super_alternative,
                      check_super_anticommutativity, check_super_jacobi, is_derivation,
                      random_tuple_check, simplicity_certificate, MAX_ASSOC_DIM)
from .altsuper import d_simplicity_certificate
from .catalog import Built, TargetError, build_target, default_field
from .char3 import (check_inner_derivation_data, verify_bj_profile, verify_dx_delta_formulas,
                    verify_s_action)
from .composition import check_composition
from .jordan import (SQUARE_KINDS, check_jordan_identity, check_jordan_trace,
                     check_tits_compatibility, magic_square)
from .scalars import Field, FieldError, parse_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("full", "anticommutativity", "jacobi", "commutative", "alternative", "jacobiA",
          "grading", "random", "simple", "composition", "jordan", "tits", "derivation",
          "d-simple", "s-action", "inner-derivations", "bj-profile", "dx-delta")

FULL = {
    "composition": ["alternative", "composition"],
    "s": ["anticommutativity", "jacobi", "random", "simple"],
    "jordan": ["commutative", "jordan"],
    "tits": ["anticommutativity", "jacobi", "tits"],
    "b12": ["commutative", "alternative", "jacobiA", "simple"],
    "gamma": ["commutative", "alternative", "jacobiA", "derivation", "grading", "d-simple"],
    "bgamma": ["commutative", "alternative", "jacobiA", "grading", "simple"],
    "bj": ["anticommutativity", "jacobi", "random", "inner-derivations", "s-action", "simple"],
    "Bj": ["anticommutativity", "jacobi", "random", "grading", "inner-derivations", "s-action",
           "dx-delta", "bj-profile", "simple"],
}


class UsageError(Exception):
    pass


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field(args, target: str | None = None) -> Field:
    if args.field:
        return parse_field(args.field)
    return default_field(target) if target else parse_field("gf7")


def algebra_text(alg: Superalgebra) -> str:
    f = alg.field
    lines = [f"{alg.name or 'algebra'} over {f}, dim {alg.dim}"]
    for i, lab in enumerate(alg.labels):
        deg = f" deg {alg.degree[i]}" if alg.degree is not None else ""
        lines.append(f"  [{i}] {lab} parity {alg.parity[i]}{deg}")
    for (i, j) in sorted(alg.table):
        row = alg.table[(i, j)]
        terms = " + ".join(f"{f.to_str(row[k])}*{alg.labels[k]}" for k in sorted(row))
        lines.append(f"  {alg.labels[i]} . {alg.labels[j]} = {terms}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------
def _generic_full(alg: Superalgebra) -> list[str]:
    if check_super_anticommutativity(alg).passed:
        names = ["anticommutativity", "jacobi"]
    else:
        names = ["commutative", "jacobiA"]
        if alg.dim <= MAX_ASSOC_DIM:
            names.append("alternative")
    if alg.degree is not None:
        names.append("grading")
    return names


def run_check(name: str, built: Built, seed: int) -> VerificationReport:
    alg = built.algebra
    x = built.extra
    if name == "anticommutativity":
        return check_super_anticommutativity(alg)
    if name == "jacobi":
        return check_super_jacobi(alg)
    if name == "commutative":
        return check_commutative_super(alg)
    if name == "alternative":
        return check_super_alternative(alg)
    if name == "jacobiA":
        return check_jacobiA_identity(alg)
    if name == "grading":
        if alg.degree is None:
            raise UsageError("this algebra carries no grading")
        return check_grading(alg)
    if name == "random":
        ident = "jacobi" if check_super_anticommutativity(alg).passed else "jacobiA"
        return random_tuple_check(alg, ident, 100, seed)
    if name == "simple":
        if not alg.field.char:
            raise UsageError("simplicity needs a prime field")
        cert = simplicity_certificate(alg, seed)
        rep = VerificationReport("simple", cert.irreducible, cert.attempts, None, alg.name, seed)
        if not cert.irreducible:
            rep.counterexample = {"indices": [], "labels": ["ideal"],
                                  "lhs": [str(cert.subspace.dim if cert.subspace else 0)],
                                  "rhs": [str(alg.dim)]}
        else:
            rep.notes.append(f"Norton witness: lambda={cert.eigenvalue}, nullity={cert.nullity}")
        return rep
    if name == "composition":
        if "composition" not in x or built.kind != "composition":
            raise UsageError("suite 'composition' applies to composition algebras")
        return check_composition(x["composition"], seed=seed)
    if name == "jordan":
        if "jordan" not in x:
            raise UsageError("suite 'jordan' applies to h3 targets")
        rep = check_jordan_trace(x["jordan"])
        return rep if not rep.passed else check_jordan_identity(x["jordan"])
    if name == "tits":
        if "tits" not in x:
            raise UsageError("suite 'tits' applies to tits targets")
        tc = x["tits"]
        return check_tits_compatibility(tc.C, tc.J)
    if name == "derivation":
        if "gamma" not in x:
            raise UsageError("suite 'derivation' applies to gamma targets")
        return is_derivation(alg, x["gamma"].D)
    if name == "d-simple":
        if "gamma" not in x:
            raise UsageError("suite 'd-simple' applies to gamma targets")
        cert = d_simplicity_certificate(x["gamma"], seed)
        return VerificationReport("d_simple", cert.irreducible, cert.attempts, None, alg.name, seed)
    if name in ("s-action", "inner-derivations", "bj-profile", "dx-delta"):
        if "char3" not in x:
            raise UsageError(f"suite {name!r} applies to bj and Bj targets")
        c = x["char3"]
        if name == "s-action":
            return verify_s_action(c)
        if name == "inner-derivations":
            return check_inner_derivation_data(c.data)
        if "bgamma" not in x:
            raise UsageError(f"suite {name!r} applies to Bj targets")
        if name == "dx-delta":
            return verify_dx_delta_formulas(x["bgamma"], c.data)
        prof = verify_bj_profile(alg, x["grading"], x["N"], seed)
        rep = prof.report
        rep.notes.append(f"profile {prof.profile}")
        rep.notes.append(f"modules {prof.modules}")
        return rep
    raise UsageError(f"unknown suite {name!r}")


def _load(args) -> Built:
    target = args.target
    if os.path.isfile(target):
        with open(target, encoding="utf-8") as fh:
            text = fh.read()
        try:
            alg = Superalgebra.from_json(text, name=os.path.basename(target))
        except (ValueError, KeyError, TypeError, IndexError) as e:
            raise UsageError(f"{target}: not a valid algebra file ({e})") from None
        if args.field and parse_field(args.field) != alg.field:
            raise UsageError("--field disagrees with the file's field")
        return Built("file", alg)
    return build_target(target, _field(args, target), args.n)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
def cmd_gen(args) -> int:
    built = build_target(args.target, _field(args, args.target), args.n)
    alg = built.algebra
    text = alg.to_json() if args.format == "json" else algebra_text(alg)
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    built = _load(args)
    if args.suite == "full":
        names = FULL.get(built.kind) or _generic_full(built.algebra)
        if not built.algebra.field.char:
            names = [n for n in names if n not in ("simple", "d-simple")]
    else:
        names = [args.suite]
    reports = []
    for name in names:
        t0 = time.perf_counter()
        rep = run_check(name, built, args.seed)
        if rep.seed is None:
            rep.seed = args.seed
        reports.append((name, rep, time.perf_counter() - t0))
    passed = all(r.passed for _, r, _ in reports)
    if args.format == "json":
        obj = {
            "target": args.target,
            "field": {"char": built.algebra.field.char},
            "dim": built.algebra.dim,
            "suite": args.suite,
            "seed": args.seed,
            "pass": passed,
            "reports": [dict(r.to_dict(), check=n, notes=r.notes) for n, r, _ in reports],
        }
        text = json.dumps(obj, indent=1, ensure_ascii=False) + "\n"
    else:
        lines = [f"{built.algebra.name} over {built.algebra.field}, dim {built.algebra.dim}, "
                 f"seed {args.seed:#x}"]
        for n, r, dt in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"  {status} {n:<18} checked {r.checked:>10}  {dt:7.2f}s")
            if not r.passed and r.counterexample:
                lines.append(f"       counterexample {json.dumps(r.counterexample, ensure_ascii=False)}")
            for note in r.notes:
                lines.append(f"       {note}")
        lines.append("PASS" if passed else "FAIL")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK if passed else EXIT_FAIL


EXPECTED_SQUARE = ((3, 8, 21, 52), (8, 16, 35, 78), (21, 35, 66, 133), (52, 78, 133, 248))


def cmd_magic_square(args) -> int:
    field = parse_field(args.field) if args.field else parse_field("gf7")
    if field.char == 3:
        raise UsageError("characteristic 3: H3 needs 1/3 for its normalized trace; use the "
                         "char-3 constructions instead (targets s, bj, Bj:<N>, or "
                         "jordan.build_tits_char3)")
    t0 = time.perf_counter()
    table = magic_square(field)
    elapsed = time.perf_counter() - t0
    dims = tuple(tuple(e.dim for e in row) for row in table)
    ok = (all(e.jacobi and e.anticommutative for row in table for e in row)
          and dims == EXPECTED_SQUARE
          and all(dims[i][j] == dims[j][i] for i in range(4) for j in range(4)))
    if args.format == "json":
        obj = {
            "field": {"char": field.char},
            "rows": list(SQUARE_KINDS),
            "cols": list(SQUARE_KINDS),
            "entries": [[{"dim": e.dim, "jacobi": e.jacobi, "type": e.type_label,
                          "parts": list(e.parts)} for e in row] for row in table],
            "symmetric": all(dims[i][j] == dims[j][i] for i in range(4) for j in range(4)),
            "pass": ok,
            "seconds": round(elapsed, 3),
        }
        text = json.dumps(obj, indent=1) + "\n"
    else:
        w = 14
        lines = [f"T(C, H3(C')) over {field}   rows C, columns C'",
                 " " * w + "".join(f"{k:>{w}}" for k in SQUARE_KINDS)]
        for k, row in zip(SQUARE_KINDS, table):
            cells = "".join(f"{(str(e.dim) + ' ' + e.type_label + ('' if e.jacobi else ' !')):>{w}}"
                            for e in row)
            lines.append(f"{k:<{w}}{cells}")
        lines.append(("PASS" if ok else "FAIL") + f" ({elapsed:.1f}s)")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
def _seed(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="gf3, gf5, gf7, gfp:<p> or q")
    common.add_argument("--n", type=int, default=None, help="N for gamma, bgamma and Bj")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "text"), default=None,
                        help="default json for gen and verify, text for magic-square")

    p = argparse.ArgumentParser(prog="tits3", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("gen", parents=[common], help="build an algebra and serialize it")
    g.add_argument("target")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("target", help="catalog target or a JSON algebra file")
    v.add_argument("--suite", choices=SUITES, default="full")
    m = sub.add_parser("magic-square", parents=[common], help="Freudenthal's magic square")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    handlers = {"gen": cmd_gen, "verify": cmd_verify, "magic-square": cmd_magic_square}
    if args.format is None:
        args.format = "text" if args.command == "magic-square" else "json"
    try:
        if args.n is not None and args.n < 1:
            raise UsageError("--n must be at least 1")
        return handlers[args.command](args)
    except (UsageError, TargetError, FieldError, OSError, ValueError, KeyError) as e:
        print(f"tits3: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
