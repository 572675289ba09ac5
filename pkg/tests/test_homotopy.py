import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from boundquiver import apply_morphism, element, ideal_member, make_morphism
from boundquiver.algebra import AlgebraElement
from boundquiver.field import PrimeField, Rationals
from boundquiver.homotopy import (
    HomotopyRelation,
    SupportSearchError,
    canonical_surjection,
    generating_pairs,
    minimal_supports,
    relation_equal,
    relation_leq,
    walks_homotopic,
)
from boundquiver.quiver import Walk

from conftest import PAPER_NAMES, random_ideal, random_quiver


def supports(ideal):
    return [tuple(str(p) for p in ms.support) for ms in minimal_supports(ideal)]


def pairs(ideal):
    return [(str(p), str(q)) for p, q in generating_pairs(ideal)]


@pytest.fixture(scope="module")
def rel(ideals):
    return {n: HomotopyRelation.of_ideal(ideals[n], n) for n in PAPER_NAMES}


def test_minimal_supports_examples(ideals):
    assert supports(ideals["I"]) == [("b1*a1",), ("b2*a2",)]
    assert supports(ideals["I4"]) == [("b1*a1", "b2*a2"), ("b1*a2", "b2*a1")]
    assert supports(ideals["I3"]) == [("b2*a2",), ("b1*a1", "b1*a2", "b2*a1")]


def test_generating_pairs_examples(ideals):
    assert pairs(ideals["I"]) == []
    assert pairs(ideals["I1"]) == [("b1*a1", "b1*a2")]
    assert pairs(ideals["I4"]) == [("b1*a1", "b2*a2"), ("b1*a2", "b2*a1")]


def test_presentations(rel):
    assert str(rel["I"].presentation("3")) == "<a2, b2 | >"
    assert str(rel["I1"].presentation()) == "<a2, b2 | a2>"
    assert str(rel["I4"].presentation()) == "<a2, b2 | b2*a2, a2*b2^-1>"


def test_subset_bound_is_reported(ideals):
    with pytest.raises(SupportSearchError, match="from 3 to 1"):
        minimal_supports(ideals["I4"], subset_bound=3)


def test_vector_cap_is_reported(doc):
    with pytest.raises(SupportSearchError, match="cap"):
        minimal_supports(doc.ideal("I4", PrimeField(3)), vector_cap=2)


def test_walks_homotopic_examples(rel, Q):
    R = rel["I1"]
    w = lambda *names: Walk.from_path(Q.path(*names))
    assert walks_homotopic(R, w("b1", "a1"), w("b1", "a2")).yes
    assert walks_homotopic(R, w("a1"), w("a2")).yes
    assert walks_homotopic(R, w("b1"), w("b2")).no
    zigzag = Walk("2", (("a1", 1), ("a2", -1), ("a1", 1)))
    assert walks_homotopic(R, zigzag, w("a1")).yes
    with pytest.raises(ValueError):
        walks_homotopic(R, w("a1"), w("b1"))


def test_relation_leq_examples(rel):
    assert relation_leq(rel["I"], rel["I4"]).yes
    assert relation_leq(rel["I1"], rel["I3"]).yes
    assert relation_leq(rel["I1"], rel["I4"]).no
    assert relation_equal(rel["I1"], rel["I1"]).yes
    assert relation_equal(rel["I1"], rel["I2"]).no


def test_relation_order_properties(rel):
    names = list(PAPER_NAMES)
    leq = {(a, b): relation_leq(rel[a], rel[b]) for a in names for b in names}
    assert all(not d.unknown for d in leq.values())
    for a in names:
        assert leq[(a, a)].yes
    for a in names:
        for b in names:
            for c in names:
                if leq[(a, b)].yes and leq[(b, c)].yes:
                    assert leq[(a, c)].yes


def test_canonical_surjection(rel):
    s = canonical_surjection(rel["I"], rel["I4"])
    assert s.images == {"a2": (1,), "b2": (2,)}
    assert "surjective" in s.note
    assert canonical_surjection(rel["I4"], rel["I4"]).images == {"a2": (1,), "b2": (2,)}
    t = canonical_surjection(rel["I"], rel["I3"])
    assert t.target.relators  # every letter dies in the target
    with pytest.raises(ValueError):
        canonical_surjection(rel["I4"], rel["I"])


def test_paper_groups(rel):
    tags = {n: rel[n].fingerprint().tag for n in PAPER_NAMES}
    assert tags == {"I": "free(2)", "I1": "infinite-cyclic", "I2": "infinite-cyclic",
                    "I3": "trivial", "I4": "finite(2, (2))"}


@pytest.mark.parametrize("name", PAPER_NAMES)
def test_basepoint_invariance_paper(rel, Q, name):
    fps = {(rel[name].fingerprint(v).tag, rel[name].fingerprint(v).abelian_invariants) for v in Q.vertices}
    assert len(fps) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_monomial_ideals_have_free_groups(seed):
    rng = random.Random(seed)
    q = random_quiver(rng)
    I = random_ideal(rng, q, Rationals(), monomial=True)
    R = HomotopyRelation.of_ideal(I)
    assert R.pairs == ()
    fp = R.fingerprint()
    beta = q.cyclomatic_number
    assert fp.tag == ("trivial" if beta == 0 else "infinite-cyclic" if beta == 1 else f"free({beta})")


def _dilate(I, rng):
    q, f = I.quiver, I.field
    taus = {a.name: rng.choice([2, -1, 3, -2]) for a in q.arrows}
    m = make_morphism(q, f, {a: element(q, f, [(t, [a])]) for a, t in taus.items()})
    return apply_morphism(m, I)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["Q", 5, 7]))
def test_dilatation_invariance(seed, fname):
    rng = random.Random(seed)
    f = Rationals() if fname == "Q" else PrimeField(fname)
    q = random_quiver(rng)
    I = random_ideal(rng, q, f)
    J = _dilate(I, rng)
    assert [ms.support for ms in minimal_supports(I)] == [ms.support for ms in minimal_supports(J)]
    assert generating_pairs(I) == generating_pairs(J)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["Q", 2, 3]))
def test_witnesses_are_minimal(seed, fname):
    rng = random.Random(seed)
    f = Rationals() if fname == "Q" else PrimeField(fname)
    q = random_quiver(rng)
    I = random_ideal(rng, q, f)
    for ms in minimal_supports(I):
        w = ms.witness
        assert ideal_member(I, w)
        assert tuple(w.support()) == ms.support
        terms = list(w.terms)
        for r in range(1, len(terms)):
            for sub in combinations(terms, r):
                part = AlgebraElement.from_terms(w.source, w.target, sub, f)
                assert not ideal_member(I, part)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_basepoint_invariance_random(seed):
    rng = random.Random(seed)
    q = random_quiver(rng)
    R = HomotopyRelation.of_ideal(random_ideal(rng, q, Rationals()))
    fps = {(R.fingerprint(v).kind, R.fingerprint(v).abelian_invariants) for v in q.vertices}
    assert len(fps) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_walk_homotopy_reflexive_symmetric(seed):
    rng = random.Random(seed)
    q = random_quiver(rng)
    R = HomotopyRelation.of_ideal(random_ideal(rng, q, Rationals()))
    par = [ps for ps in q.all_paths.values() if len(ps) >= 2]
    if not par:
        return
    ps = rng.choice(par)
    w1, w2 = Walk.from_path(rng.choice(ps)), Walk.from_path(rng.choice(ps))
    assert walks_homotopic(R, w1, w1).yes
    assert walks_homotopic(R, w1, w2).answer == walks_homotopic(R, w2, w1).answer
