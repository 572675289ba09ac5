"""
Exploring transvection orbits
=============================

Starting from the monomial ideal I we apply every sampled transvection,
then every transvection again.  The class of I4 never shows up.
"""
import time

from boundquiver import paper_document
from boundquiver.gamma import analyze, build_gamma, orbit_search
from boundquiver.homotopy import HomotopyRelation, relation_equal

doc = paper_document()
targets = {n: HomotopyRelation.of_ideal(doc.ideal(n), n) for n in ["I", "I1", "I2", "I3", "I4"]}

for depth in (1, 2):
    t0 = time.perf_counter()
    fam = orbit_search(doc.ideal("I"), depth=depth)
    found = []
    for c in fam.classes:
        hit = [n for n, R in targets.items() if relation_equal(c.relation, R).yes]
        found.append(hit[0] if hit else "new")
    print(f"depth {depth}: {len(fam)} ideals, classes like {found} ({time.perf_counter() - t0:.1f}s)")
    print("   ", fam.notes)

g = build_gamma(fam)
print("sources of the orbit quiver:", analyze(g).sources)
