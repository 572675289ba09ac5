import random

import pytest
from hypothesis import given, settings, strategies as st

from boundquiver.quiver import (
    Path,
    QuiverError,
    Walk,
    build_quiver,
    concat_walks,
    enumerate_paths,
    reduce_walk,
    reverse_walk,
    spanning_tree,
    walk_target,
    walk_word,
)
from boundquiver.words import free_reduce, inverse

from conftest import random_quiver


def test_paper_quiver_accepted(Q):
    assert Q.vertices == ("1", "2", "3")
    assert [a.name for a in Q.arrows] == ["a1", "a2", "b1", "b2"]
    assert Q.cyclomatic_number == 2


def test_trivial_quiver():
    q = build_quiver(["1"], [])
    assert q.paths("1", "1") == (Path("1", "1", ()),)
    assert spanning_tree(q, "1").tree_arrows == ()
    assert spanning_tree(q, "1").letters == ()


def test_cycle_rejected_and_reported():
    with pytest.raises(QuiverError, match=r"a\*b"):
        build_quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])


@pytest.mark.parametrize(
    "vertices, arrows, msg",
    [
        (["1", "2"], [("a", "1", "2"), ("a", "1", "2")], "duplicate"),
        (["1"], [("a", "1", "2")], "undeclared"),
        (["1", "2", "3"], [("a", "1", "2")], "connected"),
    ],
)
def test_invalid_quivers(vertices, arrows, msg):
    with pytest.raises(QuiverError, match=msg):
        build_quiver(vertices, arrows)


def test_enumerate_paths_paper(Q):
    paths = enumerate_paths(Q)
    assert [p.arrows for p in paths[("3", "1")]] == [("b1", "a1"), ("b1", "a2"), ("b2", "a1"), ("b2", "a2")]
    assert ("1", "3") not in paths
    assert paths[("2", "2")] == (Path("2", "2", ()),)
    assert [p.arrows for p in paths[("2", "1")]] == [("a1",), ("a2",)]


def test_spanning_tree_paper(Q):
    t = spanning_tree(Q, "3")
    assert t.tree_arrows == ("a1", "b1")
    assert t.letters == ("a2", "b2")


def test_spanning_tree_path_quiver():
    q = build_quiver(["1", "2", "3"], [("u", "1", "2"), ("v", "2", "3")])
    t = spanning_tree(q, "1")
    assert t.tree_arrows == ("u", "v") and t.letters == ()


def test_spanning_tree_bad_basepoint(Q):
    with pytest.raises(QuiverError):
        spanning_tree(Q, "9")


def test_reduce_walk_examples():
    assert reduce_walk(Walk("3", (("b1", 1), ("b1", -1)))) == Walk("3", ())
    w = Walk("3", (("b1", 1), ("a1", 1)))
    assert reduce_walk(w) == w
    w = Walk("3", (("b1", 1), ("a1", 1), ("a1", -1), ("a2", 1)))
    assert reduce_walk(w) == Walk("3", (("b1", 1), ("a2", 1)))


def test_walk_words(Q):
    t = spanning_tree(Q, "3")
    assert walk_word(Walk.from_path(Q.path("b2", "a2")), t) == (2, 1)  # b*a
    assert walk_word(Walk.from_path(Q.path("b1", "a1")), t) == ()
    assert walk_word(Walk.from_path(Q.path("b1", "a2")), t) == (1,)


def test_composition_notation(Q):
    p = Q.path("b1", "a1")
    assert p.format() == "b1*a1"
    assert p.format("composition") == "a1b1"


def test_path_composability(Q):
    with pytest.raises(QuiverError):
        Q.path("a1", "b1")


def _random_walk(rng, q, start, steps, allowed=None):
    v = start
    out = []
    arrows = [a for a in q.arrows if allowed is None or a.name in allowed]
    for _ in range(steps):
        options = [(a.name, 1) for a in arrows if a.source == v] + [(a.name, -1) for a in arrows if a.target == v]
        if not options:
            break
        name, d = rng.choice(options)
        out.append((name, d))
        a = q.arrow(name)
        v = a.target if d > 0 else a.source
    return Walk(start, tuple(out))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_walk_properties(seed):
    rng = random.Random(seed)
    q = random_quiver(rng)
    base = rng.choice(q.vertices)
    t = spanning_tree(q, base)
    w1 = _random_walk(rng, q, base, rng.randint(0, 8))
    w2 = _random_walk(rng, q, walk_target(q, w1), rng.randint(0, 8))
    assert reduce_walk(reduce_walk(w1)) == reduce_walk(w1)
    assert walk_target(q, reduce_walk(w1)) == walk_target(q, w1)
    assert walk_word(concat_walks(q, w1, w2), t) == free_reduce(walk_word(w1, t) + walk_word(w2, t))
    assert walk_word(reverse_walk(q, w1), t) == inverse(walk_word(w1, t))
    in_tree = _random_walk(rng, q, base, rng.randint(0, 10), allowed=set(t.tree_arrows))
    closed = concat_walks(q, in_tree, reverse_walk(q, _tree_path_back(q, t, walk_target(q, in_tree))))
    assert walk_target(q, closed) == base
    assert walk_word(closed, t) == ()


def _tree_path_back(q, t, v):
    """Walk inside the tree from the basepoint to v."""
    from collections import deque

    prev = {t.basepoint: None}
    todo = deque([t.basepoint])
    while todo:
        x = todo.popleft()
        for name in t.tree_arrows:
            a = q.arrow(name)
            for s, e, d in ((a.source, a.target, 1), (a.target, a.source, -1)):
                if s == x and e not in prev:
                    prev[e] = (x, name, d)
                    todo.append(e)
    steps = []
    while prev[v] is not None:
        x, name, d = prev[v]
        steps.append((name, d))
        v = x
    return Walk(t.basepoint, tuple(reversed(steps)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_paths_enumerated_once(seed):
    q = random_quiver(random.Random(seed))
    paths = enumerate_paths(q)
    for (s, t), ps in paths.items():
        assert len(set(ps)) == len(ps)
        assert list(ps) == sorted(ps, key=lambda p: p.key)
        for p in ps:
            assert (p.source, p.target) == (s, t)
    tree = spanning_tree(q, q.vertices[0])
    assert len(tree.tree_arrows) == len(q.vertices) - 1
    assert len(tree.letters) == q.cyclomatic_number
