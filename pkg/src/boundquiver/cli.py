"""Command line interface (``bq`` / ``python -m boundquiver``).

Exit codes: 0 success, 1 failed verification or a false comparison,
2 input error, 3 undecided result.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra import AlgebraError, apply_morphism, ideal_equal, make_transvection
from .field import FieldError
from .fileformat import InputError, parse_input
from .gamma import FamilyError, PresentationFamily, build_gamma, orbit_search
from .homotopy import HomotopyRelation, SupportSearchError, generating_pairs, minimal_supports
from .output import dumps, fingerprint_json, gamma_dot, gamma_json, pairs_json, supports_json
from .paper import verify_paper
from .quiver import QuiverError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_input(text)


def _path(q, text: str):
    names = [n.strip() for n in text.split("*")]
    return q.path(*names)


def cmd_pi1(args, out) -> int:
    doc = _load(args.file)
    ideal = doc.ideal(args.ideal)
    R = HomotopyRelation.of_ideal(ideal, args.ideal)
    q = ideal.quiver
    bp = args.basepoint if args.basepoint is not None else q.vertices[0]
    if bp not in q.vertices:
        raise InputError(f"unknown basepoint `{bp}`")
    pres = R.presentation(bp)
    fp = R.fingerprint(bp)
    if args.json:
        data = fingerprint_json(fp)
        data.update(ideal=args.ideal, basepoint=str(bp), presentation=str(pres))
        out.write(dumps(data) + "\n")
    else:
        out.write(f"ideal: {args.ideal}\nbasepoint: {bp}\n")
        out.write(f"presentation: {pres}\nsimplified: {fp.presentation}\n")
        out.write(f"classification: {fp.tag}\n")
        out.write(f"abelian invariants: {list(fp.abelian_invariants)}\n")
    return EXIT_UNDECIDED if fp.kind == "unknown" else EXIT_OK


def cmd_minrels(args, out) -> int:
    supports = minimal_supports(_load(args.file).ideal(args.ideal))
    if args.json:
        out.write(dumps(supports_json(supports)) + "\n")
        return EXIT_OK
    for ms in supports:
        paths = ", ".join(str(p) for p in ms.support)
        out.write(f"{ms.pair[0]} -> {ms.pair[1]}: {{{paths}}}  witness: {ms.witness}\n")
    return EXIT_OK


def cmd_pairs(args, out) -> int:
    pairs = generating_pairs(_load(args.file).ideal(args.ideal))
    if args.json:
        out.write(dumps(pairs_json(pairs)) + "\n")
        return EXIT_OK
    if not pairs:
        out.write("(none)\n")
    for p, r in pairs:
        out.write(f"{p} ~ {r}\n")
    return EXIT_OK


def _write_ideal(ideal, out) -> None:
    out.write(ideal.format() + "\n")


def cmd_transvect(args, out) -> int:
    doc = _load(args.file)
    q, f = doc.quiver(), doc.field()
    try:
        tau = Fraction(args.tau)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad tau `{args.tau}`") from None
    m = make_transvection(q, f, args.arrow, _path(q, args.bypass), tau)
    _write_ideal(apply_morphism(m, doc.ideal(args.ideal)), out)
    return EXIT_OK


def cmd_apply(args, out) -> int:
    doc = _load(args.file)
    _write_ideal(apply_morphism(doc.morphism(args.morphism), doc.ideal(args.ideal)), out)
    return EXIT_OK


def cmd_ideal_eq(args, out) -> int:
    doc = _load(args.file)
    same = ideal_equal(doc.ideal(args.left), doc.ideal(args.right))
    out.write("true\n" if same else "false\n")
    return EXIT_OK if same else EXIT_FAIL


def _parse_taus(text: str) -> List[Fraction]:
    try:
        taus = [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad tau list `{text}`") from None
    if any(t == 0 for t in taus):
        raise InputError("tau values must be nonzero")
    return taus


def cmd_gamma(args, out) -> int:
    doc = _load(args.file)
    q, f = doc.quiver(), doc.field()
    names = [n.strip() for n in args.ideals.split(",") if n.strip()]
    taus = _parse_taus(args.taus) if args.taus else None
    fam = PresentationFamily(q, f)
    seen = {}
    for n in names:
        ideal = doc.ideal(n)
        fam.add(n, ideal)
        seen[ideal.canonical_key] = n
    if args.search:
        fam.complete = False
        for n in names:
            orbit = orbit_search(doc.ideal(n), taus, args.depth, args.node_cap, seed_name=n)
            fam.notes.extend(orbit.notes)
            for oname, ideal in orbit.ideals.items():
                if ideal.canonical_key not in seen:
                    seen[ideal.canonical_key] = oname
                    fam.add(oname, ideal)
    g = build_gamma(fam, taus)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(gamma_dot(g))
    data = gamma_json(g)
    if args.json:
        out.write(dumps(data) + "\n")
    else:
        for v in data["vertices"]:
            out.write(f"vertex {v['name']}: members {', '.join(v['members'])}; {v['classification']}\n")
        for a in data["arrows"]:
            out.write(f"arrow {a['source']} -> {a['target']}: {a['witness']} on {a['ideal']}\n")
        out.write(f"sources ({len(data['sources'])}): {', '.join(data['sources'])}\n")
        for note in data["notes"]:
            out.write(f"note: {note}\n")
    return EXIT_UNDECIDED if g.undetermined else EXIT_OK


def cmd_verify_paper(args, out) -> int:
    checks = verify_paper()
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bq", description="Fundamental groups and homotopy relations of bound quivers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi1", help="classify the fundamental group of a presentation")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--basepoint")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_pi1)

    for name, fn, hlp in (("minrels", cmd_minrels, "list supports of minimal relations"),
                          ("pairs", cmd_pairs, "list generating pairs of the homotopy relation")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("file")
        p.add_argument("--ideal", required=True)
        p.add_argument("--json", action="store_true")
        p.set_defaults(run=fn)

    p = sub.add_parser("transvect", help="image of an ideal under a transvection")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--arrow", required=True)
    p.add_argument("--bypass", required=True, help="parallel path, e.g. a2 or b1*a1")
    p.add_argument("--tau", required=True)
    p.set_defaults(run=cmd_transvect)

    p = sub.add_parser("apply", help="image of an ideal under a declared morphism")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--morphism", required=True)
    p.set_defaults(run=cmd_apply)

    p = sub.add_parser("ideal-eq", help="compare two ideals")
    p.add_argument("file")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(run=cmd_ideal_eq)

    p = sub.add_parser("gamma", help="build the quiver of homotopy relations")
    p.add_argument("file")
    p.add_argument("--ideals", required=True, help="comma separated ideal names")
    p.add_argument("--search", action="store_true", help="add transvection orbits of the listed ideals")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--node-cap", type=int, default=2000)
    p.add_argument("--taus", help="comma separated transvection parameters")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_gamma)

    p = sub.add_parser("verify-paper", help="check the built-in counter-example")
    p.set_defaults(run=cmd_verify_paper)
    return ap


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.run(args, out)
    except SupportSearchError as exc:
        err.write(f"undecided: {exc}\n")
        return EXIT_UNDECIDED
    except FamilyError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_UNDECIDED if exc.undecided else EXIT_INPUT
    except (InputError, QuiverError, AlgebraError, FieldError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
