import random

import pytest

from boundquiver import build_quiver, element, ideal_closure, paper_document
from boundquiver.field import Rationals
from boundquiver.quiver import QuiverError

PAPER_NAMES = ("I", "I1", "I2", "I3", "I4")


@pytest.fixture(scope="session")
def doc():
    return paper_document()


@pytest.fixture(scope="session")
def Q(doc):
    return doc.quiver()


@pytest.fixture(scope="session")
def k():
    return Rationals()


@pytest.fixture(scope="session")
def ideals(doc):
    return {n: doc.ideal(n) for n in PAPER_NAMES}


@pytest.fixture
def el(Q, k):
    """``el((1, "b1*a1"), (-1, "b1*a2"))`` builds an element of the counter-example algebra."""

    def make(*terms):
        return element(Q, k, [(c, p.split("*")) for c, p in terms])

    return make


def random_quiver(rng: random.Random, max_vertices=4, max_arrows=6, multiple=True, max_paths=6):
    """Random connected acyclic quiver: arrows go from higher to lower index."""
    while True:
        n = rng.randint(1, max_vertices)
        vertices = [str(i) for i in range(n)]
        arrows = []
        # a random spanning tree keeps the graph connected
        for v in range(1, n):
            u = rng.randrange(v)
            arrows.append((v, u))
        for _ in range(rng.randint(0, max_arrows - len(arrows)) if max_arrows > len(arrows) else 0):
            u, v = sorted(rng.sample(range(n), 2)) if n > 1 else (0, 0)
            if u == v:
                break
            if not multiple and ((v, u) in arrows):
                continue
            arrows.append((v, u))
        named = [(f"x{i}", str(s), str(t)) for i, (s, t) in enumerate(arrows)]
        try:
            q = build_quiver(vertices, named)
        except QuiverError:
            continue
        if all(len(ps) <= max_paths for ps in q.all_paths.values()):
            return q


def random_ideal(rng, q, field, monomial=False, ngens=None, coeff=3):
    """Random admissible ideal of q (length >= 2 generators), possibly zero."""
    long_paths = {k: [p for p in ps if len(p) >= 2] for k, ps in q.all_paths.items()}
    long_paths = {k: v for k, v in long_paths.items() if v}
    gens = []
    if not long_paths:
        return ideal_closure(q, field, gens)
    keys = sorted(long_paths, key=str)
    for _ in range(rng.randint(1, 3) if ngens is None else ngens):
        ps = long_paths[rng.choice(keys)]
        if monomial:
            support = [rng.choice(ps)]
        else:
            support = rng.sample(ps, rng.randint(1, len(ps)))
        terms = []
        for p in support:
            c = 0
            while c == 0:
                c = rng.randint(-coeff, coeff)
            terms.append((c, p.arrows))
        gens.append(element(q, field, terms))
    return ideal_closure(q, field, gens)
