"""Built-in data for the two-sources counter-example and its checks.

The quiver is ``3 ==b1,b2==> 2 ==a1,a2==> 1`` and the five ideals are
presentations of one algebra with pairwise different homotopy relations.
In composition notation ``I = <a1 b1, a2 b2>``; the file below uses
traversal order, so that ideal reads ``rel b1*a1``, ``rel b2*a2``.

The automorphism ``phi`` carries the factor 1/2 on every image except
that of ``b2``, which is ``b1 + b2``.  The image ideal is the same with or
without that factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List

from .algebra import AlgebraError, apply_morphism, ideal_equal, make_transvection
from .field import Field, FieldError, PrimeField, Rationals
from .fileformat import InputDocument, parse_input
from .fpgroups import Presentation, todd_coxeter
from .gamma import analyze, build_family, build_gamma
from .homotopy import HomotopyRelation, canonical_surjection

PAPER_BQ = """\
# Two sources in the quiver of homotopy relations of a triangular algebra.
quiver
  vertex 1
  vertex 2
  vertex 3
  arrow a1 2 1
  arrow a2 2 1
  arrow b1 3 2
  arrow b2 3 2
end
field rational

ideal I
  rel b1*a1
  rel b2*a2
end
ideal I1
  rel b1*a1 - b1*a2
  rel b2*a2
end
ideal I2
  rel b1*a1 - b2*a1
  rel b2*a2
end
ideal I3
  rel b1*a1 - b1*a2 - b2*a1
  rel b2*a2
end
ideal I4
  rel b1*a1 + b2*a2
  rel b1*a2 + b2*a1
end

morphism phi
  a1 -> 1/2 a1 - 1/2 a2
  a2 -> 1/2 a1 + 1/2 a2
  b1 -> 1/2 b1 - 1/2 b2
  b2 -> b1 + b2
end
ideal phi_of_I = phi(I)
"""

IDEALS = ("I", "I1", "I2", "I3", "I4")

EXPECTED_GROUPS = {
    "I": ("free(2)", (0, 0)),
    "I1": ("infinite-cyclic", (0,)),
    "I2": ("infinite-cyclic", (0,)),
    "I3": ("trivial", ()),
    "I4": ("finite(2, (2))", (2,)),
}

# (transvection arrow, bypass, tau, source ideal, expected image)
TRANSVECTION_IDENTITIES = (
    ("a1", "a2", -1, "I", "I1"),
    ("b1", "b2", -1, "I", "I2"),
    ("a1", "a2", -1, "I2", "I3"),
    ("b1", "b2", -1, "I1", "I3"),
)

EXPECTED_ARROWS = {("I", "I1"), ("I", "I2"), ("I1", "I3"), ("I2", "I3"), ("I4", "I3")}


def paper_document() -> InputDocument:
    return parse_input(PAPER_BQ)


@dataclass(frozen=True)
class Check:
    criterion: str
    claim: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} [{self.criterion}] {self.claim}{tail}"


def _run(criterion: str, claim: str, fn: Callable[[], tuple]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash counts as a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(criterion, claim, bool(ok), detail)


def group_checks(doc: InputDocument, field: Field, tag: str = "1") -> List[Check]:
    out = []
    for name in IDEALS:
        want_tag, want_inv = EXPECTED_GROUPS[name]

        def fn(name=name, want_tag=want_tag, want_inv=want_inv):
            R = HomotopyRelation.of_ideal(doc.ideal(name, field), name)
            fp = R.fingerprint()
            return fp.tag == want_tag and fp.abelian_invariants == want_inv, f"{fp.tag}, invariants {list(fp.abelian_invariants)}"

        out.append(_run(tag, f"pi1(Q,{name}) is {want_tag} over {field!r}", fn))
    return out


def identity_checks(doc: InputDocument, field: Field, tag: str = "2") -> List[Check]:
    out = []
    q = doc.quiver()
    for arrow, bypass, tau, src, dst in TRANSVECTION_IDENTITIES:
        def fn(arrow=arrow, bypass=bypass, tau=tau, src=src, dst=dst):
            m = make_transvection(q, field, arrow, q.path(bypass), tau)
            return ideal_equal(apply_morphism(m, doc.ideal(src, field)), doc.ideal(dst, field)), ""

        out.append(_run(tag, f"phi({arrow},{bypass},{tau})({src}) = {dst} over {field!r}", fn))
    out.append(_run(tag, f"phi(I) = I4 over {field!r}",
                    lambda: (ideal_equal(doc.ideal("phi_of_I", field), doc.ideal("I4", field)), "")))
    return out


def gamma_checks(doc: InputDocument, field: Field, tag: str = "3") -> List[Check]:
    q = doc.quiver()
    state = {}

    def build():
        fam = build_family(q, field, [(n, doc.ideal(n, field)) for n in IDEALS])
        g = build_gamma(fam)
        state["fam"], state["g"], state["rep"] = fam, g, analyze(g)
        return len(g.vertices) == 5, f"{len(g.vertices)} vertices"

    out = [_run(tag, f"Gamma has 5 vertices over {field!r}", build)]
    if "g" not in state:
        return out
    g, rep, fam = state["g"], state["rep"], state["fam"]
    arrows = {(a.source, a.target) for a in g.arrows}
    out.append(_run(tag, "Gamma arrows are exactly the displayed five",
                    lambda: (arrows == EXPECTED_ARROWS and len(g.arrows) == 5, ", ".join(f"{s}->{t}" for s, t in sorted(arrows)))))
    out.append(_run(tag, "Gamma has exactly two sources, I and I4",
                    lambda: (sorted(rep.sources) == ["I", "I4"], f"sources {sorted(rep.sources)}")))
    out.append(_run(tag, "no path from ~I to ~I4 in Gamma",
                    lambda: (not rep.reachable("I", "I4"), "")))

    def surj():
        s = canonical_surjection(fam.relations["I"], fam.relations["I4"])
        return all(s.images[x] == (i + 1,) for i, x in enumerate(s.source.generators)), s.note

    out.append(_run(tag, "canonical surjection pi1(Q,I) -> pi1(Q,I4) exists", surj))
    return out


def characteristic_checks(doc: InputDocument) -> List[Check]:
    def guard():
        try:
            doc.morphism("phi", PrimeField(2))
        except FieldError as exc:
            return "1/2" in str(exc), str(exc)
        except AlgebraError as exc:
            return False, f"wrong error: {exc}"
        return False, "phi was accepted over GF(2)"

    out = [_run("4", "phi is undefined over GF(2) (coefficient 1/2)", guard)]
    for p in (3, 5):
        f = PrimeField(p)
        out += group_checks(doc, f, "4") + identity_checks(doc, f, "4") + gamma_checks(doc, f, "4")
    return out


def group_engine_checks(doc: InputDocument) -> List[Check]:
    def cyclic():
        bad = [n for n in range(2, 13) if todd_coxeter(Presentation(("a",), ((1,) * n,))) != n]
        return not bad, f"failures {bad}" if bad else "n = 2..12"

    def basepoints():
        q = doc.quiver()
        bad = []
        for name in IDEALS:
            R = HomotopyRelation.of_ideal(doc.ideal(name), name)
            fps = {(R.fingerprint(v).tag, R.fingerprint(v).abelian_invariants) for v in q.vertices}
            if len(fps) != 1:
                bad.append(name)
        return not bad, f"varying for {bad}" if bad else "all basepoints agree"

    return [
        _run("5e", "todd_coxeter(<a | a^n>) = n", cyclic),
        _run("5f", "fingerprints do not depend on the basepoint", basepoints),
    ]


def verify_paper() -> List[Check]:
    doc = paper_document()
    q = Rationals()
    return (
        group_checks(doc, q)
        + identity_checks(doc, q)
        + gamma_checks(doc, q)
        + characteristic_checks(doc)
        + group_engine_checks(doc)
    )
