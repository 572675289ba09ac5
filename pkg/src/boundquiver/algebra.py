"""Elements of a path algebra kQ, admissible ideals and automorphisms.

An ideal is stored through its canonical form: for every endpoint pair the
reduced row echelon basis of its homogeneous component, written in the
canonical path basis of that pair (see :func:`boundquiver.quiver.enumerate_paths`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .field import Field, Rationals, Scalar
from .linalg import Vector, in_span, inverse, rref
from .quiver import Path, Quiver, QuiverError, Vertex

Pair = Tuple[Vertex, Vertex]


class AlgebraError(ValueError):
    """Malformed algebra element, ideal or morphism."""


@dataclass(frozen=True)
class AlgebraElement:
    source: Vertex
    target: Vertex
    terms: Tuple[Tuple[Path, Scalar], ...]
    field: Field

    @classmethod
    def from_terms(cls, source, target, terms: Iterable[Tuple[Path, Scalar]], field: Field) -> "AlgebraElement":
        acc: Dict[Path, Scalar] = {}
        for p, c in terms:
            if (p.source, p.target) != (source, target):
                raise AlgebraError(f"path {p} is not parallel to ({source}, {target})")
            acc[p] = field.add(acc.get(p, field.zero()), c)
        items = sorted(((p, c) for p, c in acc.items() if not field.is_zero(c)), key=lambda t: t[0].key)
        return cls(source, target, tuple(items), field)

    @classmethod
    def of_path(cls, p: Path, field: Field, coeff: Scalar | None = None) -> "AlgebraElement":
        c = field.one() if coeff is None else coeff
        return cls.from_terms(p.source, p.target, [(p, c)], field)

    @classmethod
    def zero(cls, source, target, field: Field) -> "AlgebraElement":
        return cls(source, target, (), field)

    @property
    def pair(self) -> Pair:
        return (self.source, self.target)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> Tuple[Path, ...]:
        return tuple(p for p, _ in self.terms)

    def coefficient(self, p: Path) -> Scalar:
        for q, c in self.terms:
            if q == p:
                return c
        return self.field.zero()

    def vector(self, basis: Sequence[Path]) -> Vector:
        index = {p: i for i, p in enumerate(basis)}
        out = [self.field.zero()] * len(basis)
        for p, c in self.terms:
            out[index[p]] = c
        return tuple(out)

    def min_length(self) -> int:
        return min((len(p) for p, _ in self.terms), default=0)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_combine(self, other, self.field.one())

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_combine(self, other, self.field.neg(self.field.one()))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_multiply(self, other)

    def scale(self, c: Scalar) -> "AlgebraElement":
        return AlgebraElement.from_terms(self.source, self.target, ((p, self.field.mul(c, x)) for p, x in self.terms), self.field)

    def format(self, style: str = "traversal") -> str:
        if not self.terms:
            return "0"
        f = self.field
        out = []
        for i, (p, c) in enumerate(self.terms):
            name = p.format(style)
            neg = isinstance(f, Rationals) and c < 0
            mag = -c if neg else c
            coef = "" if mag == f.one() else f.format(mag) + " "
            if i == 0:
                out.append(("-" if neg else "") + coef + name)
            else:
                out.append(("- " if neg else "+ ") + coef + name)
        return " ".join(out)

    def __str__(self) -> str:
        return self.format()


def elem_combine(x: AlgebraElement, y: AlgebraElement, c: Scalar) -> AlgebraElement:
    """``x + c*y`` for parallel elements."""
    if x.pair != y.pair:
        raise AlgebraError(f"elements are not parallel: {x.pair} vs {y.pair}")
    f = x.field
    return AlgebraElement.from_terms(x.source, x.target, list(x.terms) + [(p, f.mul(c, v)) for p, v in y.terms], f)


def _concat(p: Path, q: Path) -> Path:
    return Path(p.source, q.target, p.arrows + q.arrows)


def elem_multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear path concatenation, ``x`` traversed first."""
    if x.target != y.source:
        raise AlgebraError(f"elements do not compose: target {x.target!r} vs source {y.source!r}")
    f = x.field
    terms = [(_concat(p, q), f.mul(a, b)) for p, a in x.terms for q, b in y.terms]
    return AlgebraElement.from_terms(x.source, y.target, terms, f)


def element(q: Quiver, field: Field, terms: Iterable[Tuple[object, Sequence[str]]]) -> AlgebraElement:
    """Convenience constructor from ``(coefficient, arrow names)`` terms."""
    terms = [(field.coerce(c), q.path(*names)) for c, names in terms]
    if not terms:
        raise AlgebraError("empty element; use AlgebraElement.zero")
    p0 = terms[0][1]
    return AlgebraElement.from_terms(p0.source, p0.target, [(p, c) for c, p in terms], field)


class Ideal:
    """Two-sided ideal of kQ given by generators, stored canonically."""

    def __init__(self, quiver: Quiver, field: Field, generators: Sequence[AlgebraElement], bases: Mapping[Pair, Tuple[Vector, ...]]):
        self.quiver = quiver
        self.field = field
        self.generators = tuple(generators)
        self._bases = {k: tuple(v) for k, v in bases.items() if v}

    @cached_property
    def _pivots(self) -> Dict[Pair, List[int]]:
        out = {}
        for k, rows in self._bases.items():
            out[k] = [next(i for i, x in enumerate(r) if not self.field.is_zero(x)) for r in rows]
        return out

    def basis(self, source, target) -> Tuple[Vector, ...]:
        return self._bases.get((source, target), ())

    def basis_elements(self, source, target) -> List[AlgebraElement]:
        paths = self.quiver.paths(source, target)
        return [
            AlgebraElement.from_terms(source, target, zip(paths, row), self.field)
            for row in self.basis(source, target)
        ]

    def pairs(self) -> List[Pair]:
        """Endpoint pairs with a nonzero component, in vertex order."""
        order = {v: i for i, v in enumerate(self.quiver.vertices)}
        return sorted(self._bases, key=lambda k: (order[k[0]], order[k[1]]))

    def dimension(self, source, target) -> int:
        return len(self.basis(source, target))

    @cached_property
    def canonical_key(self) -> tuple:
        order = {v: i for i, v in enumerate(self.quiver.vertices)}
        return tuple(sorted(((order[k[0]], order[k[1]]), v) for k, v in self._bases.items()))

    def __eq__(self, other) -> bool:
        return ideal_equal(self, other)

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def contains(self, x: AlgebraElement) -> bool:
        return ideal_member(self, x)

    def format(self, style: str = "traversal") -> str:
        lines = []
        for s, t in self.pairs():
            for e in self.basis_elements(s, t):
                lines.append(f"({s},{t}): {e.format(style)}")
        return "\n".join(lines) if lines else "0"

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{gens}>"


def ideal_closure(q: Quiver, field: Field, gens: Sequence[AlgebraElement]) -> Ideal:
    """The two-sided ideal generated by ``gens``: span of all ``u*g*w``."""
    spans: Dict[Pair, List[AlgebraElement]] = {}
    into: Dict[Vertex, List[Path]] = {v: [] for v in q.vertices}
    out_of: Dict[Vertex, List[Path]] = {v: [] for v in q.vertices}
    for (s, t), ps in q.all_paths.items():
        into[t].extend(ps)
        out_of[s].extend(ps)
    for g in gens:
        if g.field != field:
            raise AlgebraError("generator over a different field")
        if g.is_zero():
            continue
        for u in into[g.source]:
            left = AlgebraElement.of_path(u, field) * g
            for w in out_of[g.target]:
                e = left * AlgebraElement.of_path(w, field)
                spans.setdefault(e.pair, []).append(e)
    bases = {}
    for pair, elems in spans.items():
        paths = q.paths(*pair)
        rows, _ = rref([e.vector(paths) for e in elems], field, len(paths))
        bases[pair] = tuple(rows)
    return Ideal(q, field, gens, bases)


def ideal_member(ideal: Ideal, x: AlgebraElement) -> bool:
    if x.is_zero():
        return True
    basis = ideal.basis(*x.pair)
    if not basis:
        return False
    return in_span(x.vector(ideal.quiver.paths(*x.pair)), basis, ideal._pivots[x.pair], ideal.field)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if not isinstance(J, Ideal):
        return NotImplemented
    return I.quiver == J.quiver and I.field == J.field and I._bases == J._bases


def ideal_from_basis(ideal: Ideal) -> Ideal:
    """Re-close an ideal from its canonical basis (used by idempotence checks)."""
    gens = [e for s, t in ideal.pairs() for e in ideal.basis_elements(s, t)]
    return ideal_closure(ideal.quiver, ideal.field, gens)


def is_monomial(ideal: Ideal) -> bool:
    return all(len(e.terms) == 1 for s, t in ideal.pairs() for e in ideal.basis_elements(s, t))


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    violations: Tuple[AlgebraElement, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def admissible_check(ideal: Ideal) -> AdmissibilityReport:
    """Admissible iff every basis element lives in paths of length >= 2.

    The other half of admissibility (containing a power of the arrow ideal)
    always holds because an acyclic quiver has finitely many paths.
    """
    bad = []
    for s, t in ideal.pairs():
        for e in ideal.basis_elements(s, t):
            if e.min_length() < 2:
                bad.append(e)
    return AdmissibilityReport(not bad, tuple(bad))


class Morphism:
    """Algebra endomorphism of kQ fixing vertices, given by arrow images.

    Construction checks that the induced map on the whole (finite) path
    basis is invertible, so every instance is an automorphism.
    """

    def __init__(self, quiver: Quiver, field: Field, images: Mapping[str, AlgebraElement], label: str = ""):
        self.quiver = quiver
        self.field = field
        self.label = label
        full = {}
        for a in quiver.arrows:
            img = images.get(a.name)
            if img is None:
                img = AlgebraElement.of_path(quiver.path(a.name), field)
            if img.pair != (a.source, a.target):
                raise AlgebraError(f"image of {a.name} is not parallel to {a.name}")
            if img.field != field:
                raise AlgebraError(f"image of {a.name} is over a different field")
            if img.is_zero() or img.min_length() < 1:
                raise AlgebraError(f"image of {a.name} must be a nonzero combination of paths of length >= 1")
            full[a.name] = img
        extra = set(images) - set(full)
        if extra:
            raise QuiverError(f"unknown arrow `{sorted(extra)[0]}`")
        self.images: Dict[str, AlgebraElement] = full
        self._inverse_blocks = self._check_invertible()

    def _check_invertible(self) -> Dict[Pair, List[Vector]]:
        inv_blocks = {}
        for pair, paths in self.quiver.all_paths.items():
            mat = [self.apply_path(p).vector(paths) for p in paths]
            inv = inverse(mat, self.field)
            if inv is None:
                raise AlgebraError(f"morphism is not invertible on paths {pair[0]} -> {pair[1]}")
            inv_blocks[pair] = inv
        return inv_blocks

    def apply_path(self, p: Path) -> AlgebraElement:
        out = AlgebraElement.of_path(Path(p.source, p.source, ()), self.field)
        for name in p.arrows:
            out = out * self.images[name]
        return out

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        acc = AlgebraElement.zero(x.source, x.target, self.field)
        for p, c in x.terms:
            acc = elem_combine(acc, self.apply_path(p), c)
        return acc

    def is_identity(self) -> bool:
        return all(len(img.terms) == 1 and img.terms[0][0].arrows == (a,) and img.terms[0][1] == self.field.one()
                   for a, img in self.images.items())

    def same_as(self, other: "Morphism") -> bool:
        return self.images == other.images

    def __repr__(self) -> str:
        if self.label:
            return f"Morphism({self.label})"
        body = ", ".join(f"{a} -> {img}" for a, img in sorted(self.images.items()))
        return f"Morphism({body})"


def make_morphism(q: Quiver, field: Field, images: Mapping[str, AlgebraElement], label: str = "") -> Morphism:
    return Morphism(q, field, images, label)


def identity_morphism(q: Quiver, field: Field) -> Morphism:
    return Morphism(q, field, {}, "id")


def bypasses(q: Quiver) -> List[Tuple[str, Path]]:
    """All bypasses ``(arrow, parallel path != arrow)`` in canonical order."""
    out = []
    for a in q.sorted_arrows:
        for p in q.paths(a.source, a.target):
            if p.arrows != (a.name,):
                out.append((a.name, p))
    return out


def make_transvection(q: Quiver, field: Field, arrow: str, bypass: Path, tau) -> Morphism:
    """The automorphism sending ``arrow`` to ``arrow + tau*bypass``."""
    a = q.arrow(arrow)
    tau = field.coerce(tau)
    if field.is_zero(tau):
        raise AlgebraError("transvection parameter must be nonzero")
    if (bypass.source, bypass.target) != (a.source, a.target):
        raise AlgebraError(f"{bypass} is not parallel to {arrow}")
    if bypass.arrows == (arrow,):
        raise AlgebraError("a bypass must differ from its arrow")
    if bypass.is_stationary():
        raise AlgebraError("a bypass must have positive length")
    base = AlgebraElement.of_path(q.path(arrow), field)
    img = elem_combine(base, AlgebraElement.of_path(bypass, field), tau)
    label = f"phi({arrow},{bypass},{field.format(tau)})"
    return Morphism(q, field, {arrow: img}, label)


def apply_morphism(m: Morphism, ideal: Ideal) -> Ideal:
    if m.quiver != ideal.quiver or m.field != ideal.field:
        raise AlgebraError("morphism and ideal live over different algebras")
    return ideal_closure(ideal.quiver, ideal.field, [m(g) for g in ideal.generators])


def compose_morphism(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1 o m2``: each arrow goes to ``m1(m2(arrow))``."""
    if m1.quiver != m2.quiver or m1.field != m2.field:
        raise AlgebraError("morphisms live over different algebras")
    images = {a: m1(img) for a, img in m2.images.items()}
    label = f"{m1.label}o{m2.label}" if m1.label and m2.label else ""
    return Morphism(m1.quiver, m1.field, images, label)


def invert_morphism(m: Morphism) -> Morphism:
    q, f = m.quiver, m.field
    images = {}
    for a in q.arrows:
        pair = (a.source, a.target)
        paths = q.paths(*pair)
        inv = m._inverse_blocks[pair]
        col = paths.index(q.path(a.name))
        # row vector e_a times the inverse block gives m^-1(a)
        images[a.name] = AlgebraElement.from_terms(a.source, a.target, zip(paths, inv[col]), f)
    return Morphism(q, f, images, f"inv({m.label})" if m.label else "")
