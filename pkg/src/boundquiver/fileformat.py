"""The line-oriented ``.bq`` input format.

::

    # the quiver  3 ==b1,b2==> 2 ==a1,a2==> 1
    quiver
      vertex 1
      vertex 2
      vertex 3
      arrow a1 2 1
      arrow a2 2 1
      arrow b1 3 2
      arrow b2 3 2
    end
    field rational            # or: field prime 3
    ideal I
      rel b1*a1               # path b1 then a1
      rel b2*a2
    end
    morphism phi
      a1 -> 1/2 a1 - 1/2 a2
    end
    ideal phi_of_I = phi(I)   # image of an ideal under a morphism

Paths are written in traversal order, arrow names joined by ``*``.  The
composition-order monomial ``a1 b1`` (``b1`` first) is therefore ``b1*a1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebra import AlgebraElement, Ideal, Morphism, apply_morphism, ideal_closure, make_morphism
from .field import Field, FieldError, field_from_spec
from .quiver import Quiver, QuiverError, build_quiver

LinComb = Tuple[Tuple[Fraction, Tuple[str, ...]], ...]


class InputError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class DerivedIdeal:
    morphism: str
    ideal: str


IdealSpec = Union[Tuple[LinComb, ...], DerivedIdeal]


@dataclass
class InputDocument:
    vertices: Tuple[str, ...] = ()
    arrows: Tuple[Tuple[str, str, str], ...] = ()
    field_spec: str = "rational"
    ideals: Dict[str, IdealSpec] = field(default_factory=dict)
    morphisms: Dict[str, Tuple[Tuple[str, LinComb], ...]] = field(default_factory=dict)

    def quiver(self) -> Quiver:
        return build_quiver(self.vertices, self.arrows)

    def field(self) -> Field:
        return field_from_spec(self.field_spec)

    def element(self, comb: LinComb, q: Quiver, f: Field) -> AlgebraElement:
        terms = [(q.path(*names), f.coerce(c)) for c, names in comb]
        p0 = terms[0][0]
        return AlgebraElement.from_terms(p0.source, p0.target, terms, f)

    def ideal(self, name: str, field: Field | None = None) -> Ideal:
        if name not in self.ideals:
            raise InputError(f"unknown ideal `{name}`")
        q = self.quiver()
        f = field or self.field()
        spec = self.ideals[name]
        if isinstance(spec, DerivedIdeal):
            return apply_morphism(self.morphism(spec.morphism, f), self.ideal(spec.ideal, f))
        return ideal_closure(q, f, [self.element(c, q, f) for c in spec])

    def morphism(self, name: str, field: Field | None = None) -> Morphism:
        if name not in self.morphisms:
            raise InputError(f"unknown morphism `{name}`")
        q = self.quiver()
        f = field or self.field()
        images = {a: self.element(c, q, f) for a, c in self.morphisms[name]}
        return make_morphism(q, f, images, name)


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*(?P<path>[A-Za-z_][\w']*(?:\s*\*\s*[A-Za-z_][\w']*)*)\s*"
)
_NAME = re.compile(r"^[A-Za-z_][\w']*$")
_DERIVED = re.compile(r"^ideal\s+(\S+)\s*=\s*([A-Za-z_][\w']*)\s*\(\s*([A-Za-z_][\w']*)\s*\)$")


def parse_lincomb(text: str, arrows: Dict[str, Tuple[str, str]], line: int | None = None) -> LinComb:
    """Parse ``[sign] [coef] path`` terms; checks arrows and composability."""
    pos = 0
    terms: List[Tuple[Fraction, Tuple[str, ...]]] = []
    text = text.strip()
    if not text:
        raise InputError("empty linear combination", line)
    pair = None
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse term at `{text[pos:]}`", line)
        if terms and not m.group("sign"):
            raise InputError(f"expected `+` or `-` before `{text[pos:].strip()}`", line)
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if coef == 0:
            raise InputError("zero coefficient", line)
        if m.group("sign") == "-":
            coef = -coef
        names = tuple(n.strip() for n in m.group("path").split("*"))
        for n in names:
            if n not in arrows:
                raise InputError(f"unknown arrow `{n}`", line)
        for x, y in zip(names, names[1:]):
            if arrows[x][1] != arrows[y][0]:
                raise InputError(f"path {'*'.join(names)} is not composable ({x} then {y})", line)
        ends = (arrows[names[0]][0], arrows[names[-1]][1])
        if pair is not None and ends != pair:
            raise InputError(f"term {'*'.join(names)} is not parallel to the others", line)
        pair = ends
        terms.append((coef, names))
        pos = m.end()
    return tuple(terms)


def parse_input(text: str) -> InputDocument:
    doc = InputDocument()
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    arrow_ends: Dict[str, Tuple[str, str]] = {}
    block: Optional[Tuple[str, str, int]] = None
    rels: List[LinComb] = []
    images: List[Tuple[str, LinComb]] = []
    have_quiver = have_field = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if block is None:
            head = words[0]
            if head == "quiver" and len(words) == 1:
                if have_quiver:
                    raise InputError("second quiver block", lineno)
                block = ("quiver", "", lineno)
            elif head == "field":
                if have_field:
                    raise InputError("second field line", lineno)
                try:
                    field_from_spec(" ".join(words[1:]))
                except FieldError as exc:
                    raise InputError(str(exc), lineno) from None
                doc.field_spec = " ".join(words[1:])
                have_field = True
            elif head == "ideal":
                if not have_quiver:
                    raise InputError("ideal before the quiver block", lineno)
                m = _DERIVED.match(line)
                if m:
                    name, morph, src = m.groups()
                    _check_new(name, doc.ideals, "ideal", lineno)
                    if morph not in doc.morphisms:
                        raise InputError(f"unknown morphism `{morph}`", lineno)
                    if src not in doc.ideals:
                        raise InputError(f"unknown ideal `{src}`", lineno)
                    doc.ideals[name] = DerivedIdeal(morph, src)
                elif len(words) == 2:
                    _check_new(words[1], doc.ideals, "ideal", lineno)
                    block = ("ideal", words[1], lineno)
                    rels = []
                else:
                    raise InputError("expected `ideal NAME` or `ideal NAME = MORPHISM(IDEAL)`", lineno)
            elif head == "morphism" and len(words) == 2:
                if not have_quiver:
                    raise InputError("morphism before the quiver block", lineno)
                _check_new(words[1], doc.morphisms, "morphism", lineno)
                block = ("morphism", words[1], lineno)
                images = []
            else:
                raise InputError(f"unexpected `{line}`", lineno)
            continue

        kind, name, start = block
        if words == ["end"]:
            if kind == "quiver":
                try:
                    build_quiver(vertices, arrows)
                except QuiverError as exc:
                    raise InputError(str(exc), start) from None
                doc.vertices, doc.arrows = tuple(vertices), tuple(arrows)
                have_quiver = True
            elif kind == "ideal":
                doc.ideals[name] = tuple(rels)
            else:
                doc.morphisms[name] = tuple(images)
            block = None
            continue
        if kind == "quiver":
            if words[0] == "vertex" and len(words) == 2:
                vertices.append(words[1])
            elif words[0] == "arrow" and len(words) == 4:
                if not _NAME.match(words[1]):
                    raise InputError(f"bad arrow name `{words[1]}`", lineno)
                arrows.append((words[1], words[2], words[3]))
                arrow_ends[words[1]] = (words[2], words[3])
            else:
                raise InputError(f"expected `vertex NAME` or `arrow NAME SRC DST`, got `{line}`", lineno)
        elif kind == "ideal":
            if words[0] != "rel":
                raise InputError(f"expected `rel LINCOMB`, got `{line}`", lineno)
            rels.append(parse_lincomb(line[3:], arrow_ends, lineno))
        else:
            if "->" not in line:
                raise InputError(f"expected `ARROW -> LINCOMB`, got `{line}`", lineno)
            lhs, rhs = (s.strip() for s in line.split("->", 1))
            if lhs not in arrow_ends:
                raise InputError(f"unknown arrow `{lhs}`", lineno)
            if any(a == lhs for a, _ in images):
                raise InputError(f"arrow `{lhs}` given twice", lineno)
            comb = parse_lincomb(rhs, arrow_ends, lineno)
            src, dst = parse_ends(comb, arrow_ends)
            if (src, dst) != arrow_ends[lhs]:
                raise InputError(f"image of `{lhs}` is not parallel to it", lineno)
            images.append((lhs, comb))
    if block is not None:
        raise InputError(f"unterminated {block[0]} block", block[2])
    if not have_quiver:
        raise InputError("missing quiver block")
    return doc


def parse_ends(comb: LinComb, arrow_ends) -> Tuple[str, str]:
    names = comb[0][1]
    return arrow_ends[names[0]][0], arrow_ends[names[-1]][1]


def _check_new(name: str, table: dict, kind: str, line: int) -> None:
    if name in table:
        raise InputError(f"duplicate {kind} name `{name}`", line)


def format_lincomb(comb: LinComb) -> str:
    out = []
    for i, (c, names) in enumerate(comb):
        neg = c < 0
        mag = -c if neg else c
        coef = "" if mag == 1 else f"{mag} "
        sign = ("-" if neg else "") if i == 0 else ("- " if neg else "+ ")
        out.append(f"{sign}{coef}{'*'.join(names)}")
    return " ".join(out)


def format_document(doc: InputDocument) -> str:
    lines = ["quiver"]
    lines += [f"  vertex {v}" for v in doc.vertices]
    lines += [f"  arrow {a} {s} {t}" for a, s, t in doc.arrows]
    lines += ["end", f"field {doc.field_spec}"]
    # morphisms first so derived ideals can refer to them
    for name, imgs in doc.morphisms.items():
        lines.append(f"morphism {name}")
        lines += [f"  {a} -> {format_lincomb(c)}" for a, c in imgs]
        lines.append("end")
    for name, spec in doc.ideals.items():
        if isinstance(spec, DerivedIdeal):
            lines.append(f"ideal {name} = {spec.morphism}({spec.ideal})")
        else:
            lines.append(f"ideal {name}")
            lines += [f"  rel {format_lincomb(c)}" for c in spec]
            lines.append("end")
    return "\n".join(lines) + "\n"
