"""Minimal relations, homotopy relations and the fundamental group of (Q, I).

A relation ``sum c_i u_i`` of the ideal is minimal when no proper nonempty
sub-sum lies in the ideal.  Any two paths occurring together in a minimal
relation are homotopic; the homotopy relation is the smallest equivalence
on walks that contains these pairs, cancels a step followed by its inverse
and is compatible with concatenation.  Comparing two walks therefore comes
down to the word problem in the presentation built here.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, count, product
from typing import Dict, Iterable, List, Sequence, Tuple

from . import limits
from .algebra import AlgebraElement, Ideal, Pair, ideal_member
from .fpgroups import Answer, Decision, GroupFingerprint, Presentation, classify, word_trivial
from .linalg import combine, left_nullspace, rref
from .quiver import Path, Quiver, SpanningTree, Vertex, Walk, path_word, spanning_tree, walk_target, walk_word
from .words import Word, free_reduce, inverse


class SupportSearchError(RuntimeError):
    """A configured bound stopped the minimal-support search."""


@dataclass(frozen=True)
class MinimalSupport:
    pair: Pair
    support: Tuple[Path, ...]
    witness: AlgebraElement


def _restrict(vec: Sequence, keep: Iterable[int], field) -> tuple:
    keep = set(keep)
    return tuple(x if i in keep else field.zero() for i, x in enumerate(vec))


def _pair_supports(ideal: Ideal, pair: Pair, subset_bound: int, vector_cap: int) -> List[MinimalSupport]:
    q, f = ideal.quiver, ideal.field
    paths = q.paths(*pair)
    n = len(paths)
    if n > subset_bound:
        raise SupportSearchError(
            f"{n} parallel paths from {pair[0]} to {pair[1]} exceed the subset bound {subset_bound}"
        )
    basis = ideal.basis(*pair)

    def member(vec) -> bool:
        return ideal_member(ideal, AlgebraElement.from_terms(pair[0], pair[1], zip(paths, vec), f))

    def element_of(vec) -> AlgebraElement:
        return AlgebraElement.from_terms(pair[0], pair[1], zip(paths, vec), f)

    def good(vec, S) -> bool:
        if any(f.is_zero(vec[i]) for i in S):
            return False
        # J and S\J are equivalent tests, so fix the first element inside J
        first, rest = S[0], S[1:]
        for k in range(len(rest)):
            for extra in combinations(rest, k):
                if member(_restrict(vec, (first,) + extra, f)):
                    return False
        return True

    found = []
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            outside = [i for i in range(n) if i not in S]
            if outside:
                coeffs = left_nullspace([tuple(row[i] for i in outside) for row in basis], f)
                sub = [combine(c, basis, f, n) for c in coeffs]
                sub, _ = rref(sub, f, n)
            else:
                sub = list(basis)
            m = len(sub)
            if m == 0:
                continue
            if any(all(f.is_zero(row[i]) for row in sub) for i in S):
                continue
            witness = None
            if f.is_finite():
                if f.characteristic ** m > vector_cap:
                    raise SupportSearchError(
                        f"support search over GF({f.characteristic}) needs {f.characteristic}^{m} vectors, above the cap {vector_cap}"
                    )
                for c in _projective_points(f.characteristic, m):
                    vec = combine(c, sub, f, n)
                    if good(vec, S):
                        witness = vec
                        break
            else:
                # Over an infinite field V_S avoids a finite union of proper
                # subspaces iff none of them is all of V_S.
                first, rest = S[0], S[1:]
                blocked = any(
                    all(member(_restrict(row, (first,) + extra, f)) for row in sub)
                    for k in range(len(rest))
                    for extra in combinations(rest, k)
                )
                if blocked:
                    continue
                witness = _moment_curve_witness(sub, S, f, n, good)
            if witness is not None:
                found.append(MinimalSupport(pair, tuple(paths[i] for i in S), element_of(witness)))
    return found


def _projective_points(p: int, m: int):
    """Nonzero vectors of GF(p)^m with leading nonzero entry 1, in lex order."""
    for lead in range(m):
        for tail in product(range(p), repeat=m - lead - 1):
            yield (0,) * lead + (1,) + tail


def _moment_curve_witness(sub, S, f, n, good):
    # (1, t, t^2, ...) meets each proper subspace at most m-1 times, so the
    # loop ends after at most (m-1) * (#bad subspaces) + 1 values of t
    m = len(sub)
    if m == 1:
        return sub[0] if good(sub[0], S) else None
    for t in count(1):
        c = [f.coerce(t ** k) for k in range(m)]
        vec = combine(c, sub, f, n)
        if good(vec, S):
            return vec


def minimal_supports(ideal: Ideal, subset_bound: int | None = None, vector_cap: int | None = None) -> List[MinimalSupport]:
    """Every support of a minimal relation of ``ideal``, with one witness each.

    Supports come grouped by endpoint pair, then by size, then by the
    canonical order of their paths.
    """
    if subset_bound is None:
        subset_bound = limits.subset_bound()
    if vector_cap is None:
        vector_cap = limits.vector_cap()
    out: List[MinimalSupport] = []
    for pair in ideal.pairs():
        out.extend(_pair_supports(ideal, pair, subset_bound, vector_cap))
    return out


PathPair = Tuple[Path, Path]


def _pairs_of(supports: Iterable[MinimalSupport]) -> Tuple[PathPair, ...]:
    seen = set()
    for ms in supports:
        for p, r in combinations(ms.support, 2):
            seen.add((p, r) if p.key <= r.key else (r, p))
    order = lambda pr: (str(pr[0].source), str(pr[0].target), pr[0].key, pr[1].key)
    return tuple(sorted(seen, key=order))


def generating_pairs(ideal: Ideal, **kw) -> Tuple[PathPair, ...]:
    """Unordered pairs of distinct paths sharing some minimal support."""
    return _pairs_of(minimal_supports(ideal, **kw))


@dataclass(frozen=True)
class Surjection:
    source: Presentation
    target: Presentation
    images: Dict[str, Word]
    note: str = "surjective: every generator of the target is the image of a generator"


class HomotopyRelation:
    """The homotopy relation generated by a set of parallel path pairs."""

    def __init__(self, quiver: Quiver, pairs: Sequence[PathPair], provenance: Sequence[str] = ()):
        for p, r in pairs:
            if p == r or (p.source, p.target) != (r.source, r.target):
                raise ValueError(f"generating pair ({p}, {r}) must be distinct parallel paths")
        self.quiver = quiver
        self.pairs: Tuple[PathPair, ...] = tuple(pairs)
        self.provenance: Tuple[str, ...] = tuple(provenance)
        self._presentations: Dict[Vertex, Presentation] = {}

    @classmethod
    def of_ideal(cls, ideal: Ideal, name: str = "", **kw) -> "HomotopyRelation":
        return cls(ideal.quiver, generating_pairs(ideal, **kw), (name,) if name else ())

    @property
    def basepoint(self) -> Vertex:
        return self.quiver.vertices[0]

    def tree(self, basepoint: Vertex | None = None) -> SpanningTree:
        return spanning_tree(self.quiver, self.basepoint if basepoint is None else basepoint)

    def presentation(self, basepoint: Vertex | None = None) -> Presentation:
        bp = self.basepoint if basepoint is None else basepoint
        if bp not in self._presentations:
            self._presentations[bp] = pi1_presentation(self.quiver, self, bp)
        return self._presentations[bp]

    def raw_relators(self, basepoint: Vertex | None = None) -> List[Word]:
        t = self.tree(basepoint)
        return [free_reduce(path_word(p, t) + inverse(path_word(r, t))) for p, r in self.pairs]

    def fingerprint(self, basepoint: Vertex | None = None) -> GroupFingerprint:
        return classify(self.presentation(basepoint))

    def __repr__(self) -> str:
        name = ",".join(self.provenance) or "?"
        return f"HomotopyRelation({name}: {len(self.pairs)} pairs)"


def pi1_presentation(q: Quiver, R: HomotopyRelation, basepoint: Vertex) -> Presentation:
    """Non-tree arrows as generators, one relator ``word(p) word(r)^-1`` per pair.

    Relators are cyclically reduced and may be replaced by their inverse
    (see :func:`boundquiver.words.normalize_relator`).
    """
    t = spanning_tree(q, basepoint)
    rels = [free_reduce(path_word(p, t) + inverse(path_word(r, t))) for p, r in R.pairs]
    return Presentation(t.letters, tuple(rels))


def walks_homotopic(R: HomotopyRelation, w1: Walk, w2: Walk, **kw) -> Decision:
    q = R.quiver
    if w1.source != w2.source or walk_target(q, w1) != walk_target(q, w2):
        raise ValueError("walks are not parallel")
    t = R.tree()
    w = free_reduce(walk_word(w1, t) + inverse(walk_word(w2, t)))
    return word_trivial(R.presentation(), w, **kw)


def relation_leq(R1: HomotopyRelation, R2: HomotopyRelation, **kw) -> Decision:
    """Whether every pair generating ``R1`` is homotopic under ``R2``."""
    if R1.quiver != R2.quiver:
        raise ValueError("relations live on different quivers")
    unknown = None
    for p, r in R1.pairs:
        d = walks_homotopic(R2, Walk.from_path(p), Walk.from_path(r), **kw)
        if d.no:
            return Decision(Answer.NO, f"{p} ~ {r} fails")
        if d.unknown:
            unknown = d
    if unknown is not None:
        return Decision(Answer.UNKNOWN, unknown.reason)
    return Decision(Answer.YES)


def relation_equal(R1: HomotopyRelation, R2: HomotopyRelation, **kw) -> Decision:
    if set(R1.pairs) == set(R2.pairs):
        return Decision(Answer.YES, "same generating pairs")
    a = relation_leq(R1, R2, **kw)
    if a.no:
        return a
    b = relation_leq(R2, R1, **kw)
    if b.no:
        return b
    if a.unknown or b.unknown:
        return Decision(Answer.UNKNOWN, a.reason or b.reason)
    return Decision(Answer.YES)


def canonical_surjection(R1: HomotopyRelation, R2: HomotopyRelation, basepoint: Vertex | None = None) -> Surjection:
    """Identity on letters ``pi1(Q, R1) -> pi1(Q, R2)``; requires ``R1 <= R2``."""
    d = relation_leq(R1, R2)
    if not d.yes:
        raise ValueError(f"no canonical surjection: containment is {d.answer} ({d.reason})")
    src = R1.presentation(basepoint)
    dst = R2.presentation(basepoint)
    return Surjection(src, dst, {g: (i + 1,) for i, g in enumerate(src.generators)})
