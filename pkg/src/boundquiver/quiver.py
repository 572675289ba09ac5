"""Acyclic connected quivers, paths, walks and spanning-tree words.

Paths are stored in traversal order: ``Path(3, 1, ("b1", "a1"))`` runs
along ``b1`` first and then ``a1``.  Composition-style notation, where the
same path is written ``a1 b1``, is only produced by
:meth:`Path.format` with ``style="composition"``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

from .words import Word, free_reduce

Vertex = Hashable


class QuiverError(ValueError):
    """Invalid quiver, path or walk."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: Vertex
    target: Vertex


@dataclass(frozen=True, order=False)
class Path:
    source: Vertex
    target: Vertex
    arrows: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def key(self) -> tuple:
        """Canonical sort key: length, then arrow names."""
        return (len(self.arrows), self.arrows)

    def __lt__(self, other: "Path") -> bool:
        return (self.key, str(self.source), str(self.target)) < (other.key, str(other.source), str(other.target))

    def is_stationary(self) -> bool:
        return not self.arrows

    def format(self, style: str = "traversal") -> str:
        if not self.arrows:
            return f"e{self.source}"
        if style == "composition":
            return "".join(reversed(self.arrows))
        return "*".join(self.arrows)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class Walk:
    """A walk on the underlying graph; each step is ``(arrow, +1 | -1)``."""

    source: Vertex
    steps: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def from_path(cls, path: Path) -> "Walk":
        return cls(path.source, tuple((a, 1) for a in path.arrows))


@dataclass(frozen=True)
class SpanningTree:
    basepoint: Vertex
    tree_arrows: Tuple[str, ...]
    letters: Tuple[str, ...]
    """Non-tree arrows; the k-th one is free-group letter ``k`` (1-based)."""

    @cached_property
    def letter_index(self) -> Dict[str, int]:
        return {a: i + 1 for i, a in enumerate(self.letters)}


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[Vertex, ...]
    arrows: Tuple[Arrow, ...]
    _by_name: Dict[str, Arrow] = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise QuiverError(f"duplicate arrow name(s): {', '.join(dup)}")
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex names")
        vs = set(self.vertices)
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in vs:
                    raise QuiverError(f"arrow {a.name} has undeclared endpoint {end!r}")
        self._by_name.update((a.name, a) for a in self.arrows)
        cycle = self._find_cycle()
        if cycle is not None:
            raise QuiverError(f"quiver has an oriented cycle: {'*'.join(cycle)}")
        if not self._connected():
            raise QuiverError("underlying graph is not connected")

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise QuiverError(f"unknown arrow `{name}`") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    @cached_property
    def sorted_arrows(self) -> Tuple[Arrow, ...]:
        return tuple(sorted(self.arrows, key=lambda a: a.name))

    def _find_cycle(self):
        out: Dict[Vertex, List[Arrow]] = {v: [] for v in self.vertices}
        for a in sorted(self.arrows, key=lambda a: a.name):
            out[a.source].append(a)
        state = {v: 0 for v in self.vertices}
        stack_arrows: List[str] = []

        def dfs(v):
            state[v] = 1
            for a in out[v]:
                stack_arrows.append(a.name)
                if state[a.target] == 1:
                    # trim the prefix before the cycle starts at a.target
                    names = list(stack_arrows)
                    k = 0
                    while self._by_name[names[k]].source != a.target:
                        k += 1
                    return names[k:]
                if state[a.target] == 0:
                    found = dfs(a.target)
                    if found:
                        return found
                stack_arrows.pop()
            state[v] = 2
            return None

        for v in self.vertices:
            if state[v] == 0:
                found = dfs(v)
                if found:
                    return found
        return None

    def _connected(self) -> bool:
        if not self.vertices:
            return True
        adj: Dict[Vertex, set] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            v = todo.pop()
            for w in adj[v] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == len(self.vertices)

    @cached_property
    def all_paths(self) -> Dict[Tuple[Vertex, Vertex], Tuple[Path, ...]]:
        return enumerate_paths(self)

    def paths(self, source: Vertex, target: Vertex) -> Tuple[Path, ...]:
        return self.all_paths.get((source, target), ())

    def path(self, *names: str) -> Path:
        """Path through the named arrows in traversal order."""
        if not names:
            raise QuiverError("use Quiver.stationary for trivial paths")
        arrows = [self.arrow(n) for n in names]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise QuiverError(f"arrows {x.name} and {y.name} do not compose")
        return Path(arrows[0].source, arrows[-1].target, tuple(names))

    def stationary(self, v: Vertex) -> Path:
        if v not in self.vertices:
            raise QuiverError(f"unknown vertex {v!r}")
        return Path(v, v, ())

    @property
    def cyclomatic_number(self) -> int:
        return len(self.arrows) - len(self.vertices) + 1


def build_quiver(vertices: Iterable[Vertex], arrows: Iterable[Sequence]) -> Quiver:
    """Validated quiver from vertices and ``(name, source, target)`` triples."""
    return Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))


def enumerate_paths(q: Quiver) -> Dict[Tuple[Vertex, Vertex], Tuple[Path, ...]]:
    """All paths grouped by endpoints, each list in canonical order."""
    out: Dict[Vertex, List[Arrow]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        out[a.source].append(a)
    found: Dict[Tuple[Vertex, Vertex], List[Path]] = {}
    for v in q.vertices:
        todo = [Path(v, v, ())]
        while todo:
            p = todo.pop()
            found.setdefault((p.source, p.target), []).append(p)
            for a in out[p.target]:
                todo.append(Path(p.source, a.target, p.arrows + (a.name,)))
    return {k: tuple(sorted(ps, key=lambda p: p.key)) for k, ps in found.items()}


def spanning_tree(q: Quiver, basepoint: Vertex) -> SpanningTree:
    """Breadth-first spanning tree, arrows scanned in name order."""
    if basepoint not in q.vertices:
        raise QuiverError(f"basepoint {basepoint!r} is not a vertex")
    incident: Dict[Vertex, List[Arrow]] = {v: [] for v in q.vertices}
    for a in q.sorted_arrows:
        incident[a.source].append(a)
        incident[a.target].append(a)
    seen = {basepoint}
    tree: List[str] = []
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for a in incident[v]:
            w = a.target if a.source == v else a.source
            if w not in seen:
                seen.add(w)
                tree.append(a.name)
                queue.append(w)
    tree_set = set(tree)
    letters = tuple(a.name for a in q.sorted_arrows if a.name not in tree_set)
    return SpanningTree(basepoint, tuple(sorted(tree)), letters)


def walk_target(q: Quiver, w: Walk) -> Vertex:
    v = w.source
    for name, d in w.steps:
        a = q.arrow(name)
        start, end = (a.source, a.target) if d > 0 else (a.target, a.source)
        if start != v:
            raise QuiverError(f"walk step {name}{'' if d > 0 else '^-1'} does not start at {v!r}")
        v = end
    return v


def reduce_walk(w: Walk) -> Walk:
    """Cancel every step immediately followed by its inverse."""
    out: List[Tuple[str, int]] = []
    for step in w.steps:
        if out and out[-1][0] == step[0] and out[-1][1] == -step[1]:
            out.pop()
        else:
            out.append(step)
    return Walk(w.source, tuple(out))


def concat_walks(q: Quiver, w1: Walk, w2: Walk) -> Walk:
    if walk_target(q, w1) != w2.source:
        raise QuiverError("walks do not compose")
    return Walk(w1.source, w1.steps + w2.steps)


def reverse_walk(q: Quiver, w: Walk) -> Walk:
    return Walk(walk_target(q, w), tuple((a, -d) for a, d in reversed(w.steps)))


def walk_word(w: Walk, t: SpanningTree) -> Word:
    """Free-group word of a walk: tree arrows vanish, other arrows are letters."""
    idx = t.letter_index
    letters = []
    for name, d in w.steps:
        k = idx.get(name)
        if k is not None:
            letters.append(k if d > 0 else -k)
    return free_reduce(letters)


def path_word(p: Path, t: SpanningTree) -> Word:
    return walk_word(Walk.from_path(p), t)
