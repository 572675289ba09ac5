"""Finitely presented groups: simplification, abelianization, coset enumeration.

Only what is needed to recognise small groups (free, cyclic, trivial,
small finite) is here.  Answers that cannot be certified within the budgets
come back as :attr:`Answer.UNKNOWN` rather than as a guess.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from . import limits
from .words import (
    Word,
    cyclic_reduce,
    exponent_sums,
    format_word,
    free_reduce,
    inverse,
    normalize_relator,
    substitute,
)


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Decision:
    answer: Answer
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def no(self) -> bool:
        return self.answer is Answer.NO

    @property
    def unknown(self) -> bool:
        return self.answer is Answer.UNKNOWN


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        n = len(self.generators)
        rels = []
        for r in self.relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise ValueError(f"relator {r} uses letters outside 1..{n}")
            r = normalize_relator(r)
            if r and r not in rels:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def format_word(self, w: Sequence[int]) -> str:
        return format_word(w, self.generators)

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"

    def exponent_matrix(self) -> List[List[int]]:
        return [exponent_sums(r, self.ngens) for r in self.relators]


@dataclass(frozen=True)
class Simplified:
    """Result of :func:`tietze_simplify`.

    ``rewrite`` sends each original letter (1-based) to a word in the
    simplified generators, so words can be carried across.
    """

    presentation: Presentation
    rewrite: Dict[int, Word]
    steps: int
    exhausted: bool

    def rewrite_word(self, w: Sequence[int]) -> Word:
        out: List[int] = []
        for x in w:
            img = self.rewrite[abs(x)]
            out.extend(img if x > 0 else inverse(img))
        return free_reduce(out)


def _rotations(w: Word):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def _shorten(r: Word, s: Word) -> Optional[Word]:
    """Use relator ``s`` to shorten ``r`` (both cyclic words), if possible.

    If a cyclic conjugate of ``s`` or ``s^-1`` splits as ``u v`` with ``u``
    longer than ``v`` and ``u`` occurs in a rotation of ``r``, replace that
    occurrence by ``v^-1``.
    """
    best = None
    n = len(r)
    for t in (s, inverse(s)):
        for c in _rotations(t):
            for k in range(len(c) // 2 + 1, len(c) + 1):
                u, v = c[:k], c[k:]
                if k > n:
                    break
                for rr in _rotations(r):
                    if rr[:k] == u:
                        new = cyclic_reduce(inverse(v) + rr[k:])
                        if len(new) < n and (best is None or (len(new), new) < (len(best), best)):
                            best = new
    return best


def tietze_simplify(p: Presentation, budget: int | None = None) -> Simplified:
    """Deterministic Tietze simplification.

    Moves, applied until nothing changes or ``budget`` moves were made:
    drop trivial and duplicate relators; eliminate a generator that occurs
    exactly once in a relator of length <= 2, or in a relator that is the
    only one mentioning it; shorten relators against each other.  Among
    eligible eliminations the shortest relator wins, then the earlier
    relator, then the earlier position within it.
    """
    if budget is None:
        budget = limits.tietze_budget()
    gens = list(p.generators)
    # live letters are tracked by their original index
    live = list(range(1, len(gens) + 1))
    rels: List[Word] = list(p.relators)
    rewrite: Dict[int, Word] = {i: (i,) for i in live}
    steps = 0

    def cleanup():
        nonlocal rels
        out = []
        for r in rels:
            r = normalize_relator(r)
            if r and r not in out:
                out.append(r)
        rels = out

    cleanup()
    while steps < budget:
        changed = False
        candidates = []
        for ri, r in enumerate(rels):
            for pos, x in enumerate(r):
                g = abs(x)
                if sum(1 for y in r if abs(y) == g) != 1:
                    continue
                elsewhere = any(g in map(abs, s) for sj, s in enumerate(rels) if sj != ri)
                if len(r) <= 2 or not elsewhere:
                    candidates.append((len(r), ri, pos))
        if candidates:
            _, ri, pos = min(candidates)
            r = rels[ri]
            x = r[pos]
            g = abs(x)
            rest = r[pos + 1:] + r[:pos]
            # x * rest = 1  =>  g = rest^-1 (x > 0) or rest (x < 0)
            img = inverse(rest) if x > 0 else tuple(rest)
            img = free_reduce(img)
            rels = [substitute(s, {g: img}) for sj, s in enumerate(rels) if sj != ri]
            for k in rewrite:
                rewrite[k] = substitute(rewrite[k], {g: img})
            live.remove(g)
            cleanup()
            steps += 1
            continue
        for i in range(len(rels)):
            for j in range(len(rels)):
                if i == j or steps >= budget:
                    continue
                new = _shorten(rels[i], rels[j])
                if new is not None:
                    rels[i] = new
                    steps += 1
                    changed = True
            if changed:
                break
        if changed:
            cleanup()
            continue
        break
    exhausted = steps >= budget
    # renumber survivors 1..m
    renum = {g: i + 1 for i, g in enumerate(live)}

    def ren(w: Word) -> Word:
        return tuple(renum[abs(x)] * (1 if x > 0 else -1) for x in w)

    pres = Presentation(tuple(gens[g - 1] for g in live), tuple(ren(r) for r in rels))
    return Simplified(pres, {k: ren(v) for k, v in rewrite.items()}, steps, exhausted)


@dataclass(frozen=True)
class SmithForm:
    diagonal: Tuple[int, ...]
    """Diagonal entries ``d1 | d2 | ...`` (length ``min(rows, cols)``)."""
    D: Tuple[Tuple[int, ...], ...]
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]
    rank: int
    ncols: int

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    @property
    def free_rank(self) -> int:
        return self.ncols - self.rank


def _identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Smith normal form ``D = U M V`` with unimodular ``U`` and ``V``."""
    A = [list(map(int, row)) for row in m]
    rows = len(A)
    cols = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for M in (A, V):
            for row in M:
                row[dst] += k * row[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = tuple(A[i][i] for i in range(min(rows, cols)))
    return SmithForm(
        diag,
        tuple(map(tuple, A)),
        tuple(map(tuple, U)),
        tuple(map(tuple, V)),
        sum(1 for d in diag if d),
        cols,
    )


def abelianization(p: Presentation) -> Tuple[int, ...]:
    """Abelian invariants: torsion coefficients, then one 0 per free factor."""
    snf = smith_normal_form(p.exponent_matrix(), p.ngens)
    return snf.torsion + (0,) * snf.free_rank


def abelian_image_trivial(p: Presentation, w: Sequence[int]) -> bool:
    """Whether ``w`` dies in the abelianization of ``p``."""
    v = exponent_sums(w, p.ngens)
    snf = smith_normal_form(p.exponent_matrix(), p.ngens)
    # v in rowspace(M)  <=>  (v V)_i divisible by d_i, zero beyond the rank
    vv = [sum(v[k] * snf.V[k][j] for k in range(p.ngens)) for j in range(p.ngens)]
    for j, x in enumerate(vv):
        d = snf.diagonal[j] if j < len(snf.diagonal) else 0
        if d == 0:
            if x:
                return False
        elif x % d:
            return False
    return True


@dataclass
class CosetTable:
    """Closed coset table of the trivial subgroup (regular action).

    ``table[c][col]`` is the image of coset ``c`` under column ``col``;
    column ``2k`` is generator ``k+1`` and ``2k+1`` its inverse.
    """

    ngens: int
    table: List[List[int]] = field(default_factory=list)

    @staticmethod
    def col(x: int) -> int:
        return 2 * (abs(x) - 1) + (0 if x > 0 else 1)

    @property
    def order(self) -> int:
        return len(self.table)

    def act(self, coset: int, w: Sequence[int]) -> int:
        for x in w:
            coset = self.table[coset][self.col(x)]
        return coset

    def is_valid(self, relators: Sequence[Word]) -> bool:
        """Complete with permutation columns, and every relator closes at every coset."""
        n = len(self.table)
        for row in self.table:
            if len(row) != 2 * self.ngens or any(not (0 <= c < n) for c in row):
                return False
        for k in range(self.ngens):
            fwd = [self.table[c][2 * k] for c in range(n)]
            if sorted(fwd) != list(range(n)):
                return False
            if any(self.table[fwd[c]][2 * k + 1] != c for c in range(n)):
                return False
        return all(self.act(c, r) == c for c in range(n) for r in relators)


def coset_enumeration(p: Presentation, max_cosets: int | None = None) -> Optional[CosetTable]:
    """HLT Todd-Coxeter over the trivial subgroup; ``None`` if over budget."""
    if max_cosets is None:
        max_cosets = limits.max_cosets()
    ncols = 2 * p.ngens
    if ncols == 0:
        return CosetTable(0, [[]])
    inv_col = [c ^ 1 for c in range(ncols)]
    table: List[List[Optional[int]]] = [[None] * ncols]
    parent = [0]
    rels = [[CosetTable.col(x) for x in r] for r in p.relators]

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def define(c, x) -> bool:
        if len(table) >= max_cosets:
            return False
        d = len(table)
        table.append([None] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][inv_col[x]] = c
        return True

    def coincidence(a, b):
        queue = []

        def merge(u, v):
            u, v = find(u), find(v)
            if u == v:
                return
            if u > v:
                u, v = v, u
            parent[v] = u
            queue.append(v)

        merge(a, b)
        qi = 0
        while qi < len(queue):
            g = queue[qi]
            qi += 1
            for x in range(ncols):
                d = table[g][x]
                if d is None:
                    continue
                table[g][x] = None
                if table[d][inv_col[x]] == g:
                    table[d][inv_col[x]] = None
                u, v = find(g), find(d)
                if table[u][x] is not None:
                    merge(v, table[u][x])
                elif table[v][inv_col[x]] is not None:
                    merge(u, table[v][inv_col[x]])
                else:
                    table[u][x] = v
                    table[v][inv_col[x]] = u

    def scan_and_fill(c, rel) -> bool:
        n = len(rel)
        while True:
            f, i = c, 0
            b, j = c, n - 1
            while i <= j and table[f][rel[i]] is not None:
                f = table[f][rel[i]]
                i += 1
            if i > j:
                if f != c:
                    coincidence(f, c)
                return True
            while j >= i and table[b][inv_col[rel[j]]] is not None:
                b = table[b][inv_col[rel[j]]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return True
            if i == j:
                table[f][rel[i]] = b
                table[b][inv_col[rel[i]]] = f
                return True
            if not define(f, rel[i]):
                return False

    c = 0
    while c < len(table):
        if find(c) == c:
            for rel in rels:
                if find(c) != c:
                    break
                if not scan_and_fill(c, rel):
                    return None
            if find(c) == c:
                for x in range(ncols):
                    if table[c][x] is None:
                        if not define(c, x):
                            return None
        c += 1
    live = [k for k in range(len(table)) if find(k) == k]
    index = {k: i for i, k in enumerate(live)}
    compact = [[index[find(table[k][x])] for x in range(ncols)] for k in live]
    return CosetTable(p.ngens, compact)


def todd_coxeter(p: Presentation, max_cosets: int | None = None) -> Optional[int]:
    """Group order if coset enumeration closes within the budget, else ``None``."""
    t = coset_enumeration(p, max_cosets)
    return None if t is None else t.order


@dataclass(frozen=True)
class GroupFingerprint:
    generators: int
    relators: int
    abelian_invariants: Tuple[int, ...]
    kind: str
    """One of ``free``, ``infinite-cyclic``, ``trivial``, ``finite``, ``unknown``."""
    rank: Optional[int] = None
    order: Optional[int] = None
    reason: str = ""
    presentation: Optional[Presentation] = None

    @property
    def tag(self) -> str:
        if self.kind == "free":
            return f"free({self.rank})"
        if self.kind == "finite":
            inv = ", ".join(map(str, self.abelian_invariants))
            return f"finite({self.order}, ({inv}))"
        if self.kind == "unknown":
            return f"unknown({self.reason})"
        return self.kind

    def __str__(self) -> str:
        return self.tag


def classify(p: Presentation, max_cosets: int | None = None, budget: int | None = None) -> GroupFingerprint:
    s = tietze_simplify(p, budget)
    sp = s.presentation
    inv = abelianization(sp)
    common = dict(generators=sp.ngens, relators=len(sp.relators), abelian_invariants=inv, presentation=sp)
    if not sp.relators:
        n = sp.ngens
        if n == 0:
            return GroupFingerprint(kind="trivial", order=1, **common)
        if n == 1:
            return GroupFingerprint(kind="infinite-cyclic", rank=1, **common)
        return GroupFingerprint(kind="free", rank=n, **common)
    free_rank = sum(1 for d in inv if d == 0)
    if free_rank:
        return GroupFingerprint(kind="unknown", reason=f"infinite, abelianization has free rank {free_rank}", **common)
    order = todd_coxeter(sp, max_cosets)
    if order is None:
        return GroupFingerprint(kind="unknown", reason="coset enumeration exceeded its budget", **common)
    if order == 1:
        return GroupFingerprint(kind="trivial", order=1, **common)
    return GroupFingerprint(kind="finite", order=order, **common)


def _abelian_strategy(p: Presentation, w: Word) -> Optional[Answer]:
    return None if abelian_image_trivial(p, w) else Answer.NO


def _free_strategy(p: Presentation, w: Word, budget) -> Optional[Answer]:
    s = tietze_simplify(p, budget)
    if s.presentation.relators:
        return None
    return Answer.YES if not s.rewrite_word(w) else Answer.NO


def _coset_strategy(p: Presentation, w: Word, max_cosets) -> Optional[Answer]:
    s = tietze_simplify(p)
    t = coset_enumeration(s.presentation, max_cosets)
    if t is None:
        return None
    return Answer.YES if t.act(0, s.rewrite_word(w)) == 0 else Answer.NO


def word_trivial(p: Presentation, w: Sequence[int], max_cosets: int | None = None,
                 budget: int | None = None, exhaustive: bool = False) -> Decision:
    """Decide whether ``w`` is trivial in the group presented by ``p``.

    Strategies in order: abelian image, free reduction after simplifying to
    a free group, coset table.  With ``exhaustive=True`` every applicable
    strategy runs and disagreement raises ``AssertionError``.
    """
    if any(x == 0 or abs(x) > p.ngens for x in w):
        raise ValueError(f"word {tuple(w)} uses letters outside the presentation")
    w = free_reduce(w)
    if not w:
        return Decision(Answer.YES, "empty word")
    results = []
    for name, run in (
        ("abelianization", lambda: _abelian_strategy(p, w)),
        ("free reduction", lambda: _free_strategy(p, w, budget)),
        ("coset table", lambda: _coset_strategy(p, w, max_cosets)),
    ):
        ans = run()
        if ans is not None:
            results.append((name, ans))
            if not exhaustive:
                break
    if not results:
        return Decision(Answer.UNKNOWN, "no strategy decided within the budgets")
    answers = {a for _, a in results}
    assert len(answers) == 1, f"word problem strategies disagree: {results}"
    name, ans = results[0]
    return Decision(ans, name)


def group_order_from_invariants(inv: Sequence[int]) -> Optional[int]:
    return None if any(d == 0 for d in inv) else prod(inv)
