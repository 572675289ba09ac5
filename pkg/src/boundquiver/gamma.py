"""The quiver of homotopy relations of a family of presentations.

Vertices are the distinct homotopy relations met in a family.  There is an
arrow from one relation to a strictly coarser one when a single
transvection takes a member ideal of the first to an ideal whose relation
is the second.  Dilatations are never tried: they do not change
generating pairs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .algebra import Ideal, Morphism, admissible_check, apply_morphism, bypasses, make_transvection
from .field import Field, PrimeField
from .fpgroups import Answer, Decision
from .homotopy import HomotopyRelation, generating_pairs, relation_equal, relation_leq
from .quiver import Path, Quiver


class FamilyError(RuntimeError):
    """A family could not be built (inadmissible ideal or undecided comparison)."""

    def __init__(self, message: str, undecided: bool = False):
        super().__init__(message)
        self.undecided = undecided


def default_taus(field: Field) -> Tuple:
    if isinstance(field, PrimeField):
        return tuple(range(1, field.p))
    return tuple(Fraction(t) for t in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)))


@dataclass
class RelationClass:
    name: str
    relation: HomotopyRelation
    members: List[str] = field(default_factory=list)


class PresentationFamily:
    """Named admissible ideals grouped by homotopy relation."""

    def __init__(self, quiver: Quiver, field: Field):
        self.quiver = quiver
        self.field = field
        self.ideals: Dict[str, Ideal] = {}
        self.relations: Dict[str, HomotopyRelation] = {}
        self.classes: List[RelationClass] = []
        self.complete = True
        self.cap_exceeded = False
        self.notes: List[str] = []
        self._by_pairs: Dict[FrozenSet, int] = {}

    def classify_relation(self, R: HomotopyRelation) -> Optional[int]:
        """Index of the class whose relation equals ``R``, if any."""
        key = frozenset(R.pairs)
        if key in self._by_pairs:
            return self._by_pairs[key]
        for i, c in enumerate(self.classes):
            d = relation_equal(R, c.relation)
            if d.unknown:
                raise FamilyError(f"cannot compare relation of {R.provenance} with class {c.name}: {d.reason}",
                                  undecided=True)
            if d.yes:
                self._by_pairs[key] = i
                return i
        return None

    def add(self, name: str, ideal: Ideal) -> RelationClass:
        if name in self.ideals:
            raise FamilyError(f"duplicate ideal name {name!r}")
        if ideal.quiver != self.quiver or ideal.field != self.field:
            raise FamilyError(f"ideal {name} is over a different algebra")
        report = admissible_check(ideal)
        if not report.ok:
            raise FamilyError(f"ideal {name} is not admissible: {report.violations[0]}")
        R = HomotopyRelation(self.quiver, generating_pairs(ideal), (name,))
        self.ideals[name] = ideal
        self.relations[name] = R
        i = self.classify_relation(R)
        if i is None:
            self.classes.append(RelationClass(name, R, [name]))
            self._by_pairs[frozenset(R.pairs)] = len(self.classes) - 1
            return self.classes[-1]
        self.classes[i].members.append(name)
        return self.classes[i]

    def class_of(self, member: str) -> RelationClass:
        for c in self.classes:
            if member in c.members:
                return c
        raise KeyError(member)

    def __len__(self) -> int:
        return len(self.ideals)


def build_family(q: Quiver, f: Field, ideals: Sequence[Tuple[str, Ideal]]) -> PresentationFamily:
    fam = PresentationFamily(q, f)
    for name, ideal in ideals:
        fam.add(name, ideal)
    return fam


@dataclass(frozen=True)
class GammaArrow:
    source: str
    target: str
    ideal: str
    morphism: Morphism
    bypass: Optional[Tuple[str, Path, object]] = None
    """``(arrow, path, tau)`` when the witness is a transvection."""

    @property
    def label(self) -> str:
        return f"{self.morphism.label or 'automorphism'} on {self.ideal}"


@dataclass
class GammaQuiver:
    family: PresentationFamily
    vertices: List[str]
    arrows: List[GammaArrow]
    undetermined: List[Tuple[str, str, str]] = field(default_factory=list)

    def class_name(self, member: str) -> str:
        return self.family.class_of(member).name

    def relation(self, vertex: str) -> HomotopyRelation:
        return next(c.relation for c in self.family.classes if c.name == vertex)


def build_gamma(fam: PresentationFamily, taus: Sequence | None = None,
                extra_witnesses: Sequence[Tuple[str, Morphism]] = ()) -> GammaQuiver:
    """Arrows between relation classes witnessed by single transvections.

    ``extra_witnesses`` are ``(member ideal name, automorphism)`` pairs tried
    in addition.  The first witness found (classes in family order, then
    members, bypasses and ``taus`` in order) is kept.
    """
    if taus is None:
        taus = default_taus(fam.field)
    names = [c.name for c in fam.classes]
    strict: Dict[Tuple[int, int], Decision] = {}
    undetermined: List[Tuple[str, str, str]] = []

    def is_strict(i: int, j: int) -> Optional[bool]:
        if (i, j) not in strict:
            Ri, Rj = fam.classes[i].relation, fam.classes[j].relation
            up = relation_leq(Ri, Rj)
            if not up.yes:
                d = up if up.unknown else Decision(Answer.NO, "not contained")
            else:
                down = relation_leq(Rj, Ri)
                if down.unknown:
                    d = down
                else:
                    d = Decision(Answer.YES) if down.no else Decision(Answer.NO, "equal relations")
            strict[(i, j)] = d
        d = strict[(i, j)]
        return None if d.unknown else d.yes

    found: Dict[Tuple[int, int], GammaArrow] = {}

    def consider(i: int, member: str, m: Morphism, bp):
        img = apply_morphism(m, fam.ideals[member])
        R = HomotopyRelation(fam.quiver, generating_pairs(img))
        try:
            j = fam.classify_relation(R)
        except FamilyError as exc:
            undetermined.append((names[i], "?", str(exc)))
            return
        if j is None or j == i or (i, j) in found:
            return
        s = is_strict(i, j)
        if s is None:
            undetermined.append((names[i], names[j], strict[(i, j)].reason))
        elif s:
            found[(i, j)] = GammaArrow(names[i], names[j], member, m, bp)

    witnesses = list(extra_witnesses)
    bps = bypasses(fam.quiver)
    for i, c in enumerate(fam.classes):
        for member in c.members:
            for arrow, path in bps:
                for tau in taus:
                    m = make_transvection(fam.quiver, fam.field, arrow, path, tau)
                    consider(i, member, m, (arrow, path, fam.field.coerce(tau)))
            for wname, m in witnesses:
                if wname == member:
                    consider(i, member, m, None)
    arrows = [found[k] for k in sorted(found)]
    return GammaQuiver(fam, names, arrows, undetermined)


@dataclass(frozen=True)
class GammaReport:
    vertices: Tuple[str, ...]
    sources: Tuple[str, ...]
    sinks: Tuple[str, ...]
    reach: Dict[str, FrozenSet[str]]

    @property
    def source_count(self) -> int:
        return len(self.sources)

    def reachable(self, a: str, b: str) -> bool:
        """Whether a nonempty or empty path leads from ``a`` to ``b``."""
        return a == b or b in self.reach[a]


def analyze(g: GammaQuiver) -> GammaReport:
    succ: Dict[str, Set[str]] = {v: set() for v in g.vertices}
    indeg = {v: 0 for v in g.vertices}
    for a in g.arrows:
        succ[a.source].add(a.target)
        indeg[a.target] += 1
    reach = {}
    for v in g.vertices:
        seen: Set[str] = set()
        todo = deque(succ[v])
        while todo:
            w = todo.popleft()
            if w not in seen:
                seen.add(w)
                todo.extend(succ[w])
        reach[v] = frozenset(seen)
    sources = tuple(v for v in g.vertices if indeg[v] == 0)
    sinks = tuple(v for v in g.vertices if not succ[v])
    return GammaReport(tuple(g.vertices), sources, sinks, reach)


def has_cycle(g: GammaQuiver) -> bool:
    rep = analyze(g)
    return any(v in rep.reach[v] for v in g.vertices)


def orbit_search(seed: Ideal, taus: Sequence | None = None, depth: int = 1, node_cap: int = 2000,
                 seed_name: str = "I") -> PresentationFamily:
    """Ideals reachable from ``seed`` by at most ``depth`` transvections.

    The result is never complete in general (only sampled parameters, bounded
    depth); ``complete`` is always ``False`` and ``notes`` says why.  Each
    level is sorted by canonical form before naming, so the output does not
    depend on exploration order.
    """
    q, f = seed.quiver, seed.field
    if taus is None:
        taus = default_taus(f)
    fam = PresentationFamily(q, f)
    fam.add(seed_name, seed)
    fam.complete = False
    fam.notes.append(f"transvection parameters sampled from {len(taus)} values, depth {depth}")
    seen = {seed.canonical_key}
    frontier = [seed]
    bps = bypasses(q)
    morphisms = [make_transvection(q, f, a, p, t) for a, p in bps for t in taus]
    for level in range(1, depth + 1):
        new: Dict[tuple, Ideal] = {}
        for ideal in frontier:
            for m in morphisms:
                img = apply_morphism(m, ideal)
                key = img.canonical_key
                if key not in seen and key not in new:
                    new[key] = img
        ordered = [new[k] for k in sorted(new)]
        frontier = []
        for k, img in enumerate(ordered, 1):
            if len(fam) >= node_cap:
                fam.cap_exceeded = True
                fam.notes.append(f"node cap {node_cap} reached at depth {level}")
                return fam
            seen.add(img.canonical_key)
            fam.add(f"{seed_name}.{level}.{k}", img)
            frontier.append(img)
    return fam
