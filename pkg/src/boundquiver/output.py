"""DOT and JSON renderings.  JSON carries only strings, integers, booleans and lists."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import List

from .fpgroups import GroupFingerprint
from .gamma import GammaQuiver, analyze
from .homotopy import MinimalSupport, PathPair


def scalar_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def fingerprint_json(fp: GroupFingerprint) -> dict:
    pres = fp.presentation
    return {
        "abelian_invariants": list(fp.abelian_invariants),
        "classification": fp.kind,
        "generators": fp.generators,
        "order": fp.order,
        "rank": fp.rank,
        "reason": fp.reason,
        "relators": fp.relators,
        "simplified": str(pres) if pres is not None else None,
        "tag": fp.tag,
    }


def supports_json(supports: List[MinimalSupport]) -> list:
    return [
        {
            "source": str(ms.pair[0]),
            "target": str(ms.pair[1]),
            "support": [str(p) for p in ms.support],
            "witness": str(ms.witness),
        }
        for ms in supports
    ]


def pairs_json(pairs: List[PathPair]) -> list:
    return [[str(p), str(q)] for p, q in pairs]


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def gamma_dot(g: GammaQuiver) -> str:
    ids = {v: f"n{i}" for i, v in enumerate(g.vertices)}
    lines = ["digraph Gamma {", "  rankdir=TB;", "  node [shape=box];"]
    for c in g.family.classes:
        fp = c.relation.fingerprint()
        label = _dot_escape(f"~{{{', '.join(c.members)}}}") + "\\n" + _dot_escape(fp.tag)
        lines.append(f'  {ids[c.name]} [label="{label}"];')
    for a in g.arrows:
        lines.append(f'  {ids[a.source]} -> {ids[a.target]} [label="{_dot_escape(a.label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def gamma_json(g: GammaQuiver) -> dict:
    rep = analyze(g)
    vertices = []
    for c in g.family.classes:
        fp = c.relation.fingerprint()
        vertices.append({
            "name": c.name,
            "members": list(c.members),
            "classification": fp.tag,
            "abelian_invariants": list(fp.abelian_invariants),
        })
    arrows = []
    for a in g.arrows:
        entry = {"source": a.source, "target": a.target, "ideal": a.ideal, "witness": a.morphism.label or "automorphism"}
        if a.bypass is not None:
            arrow, path, tau = a.bypass
            entry["transvection"] = {"arrow": arrow, "bypass": str(path), "tau": scalar_str(tau)}
        arrows.append(entry)
    return {
        "vertices": vertices,
        "arrows": arrows,
        "sources": sorted(rep.sources),
        "sinks": sorted(rep.sinks),
        "reachable": {v: sorted(rep.reach[v]) for v in g.vertices},
        "complete": g.family.complete,
        "notes": list(g.family.notes),
        "undetermined": [list(u) for u in g.undetermined],
    }
