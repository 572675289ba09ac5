"""
The quiver of homotopy relations
================================

Vertices are the homotopy relations of the five presentations.  An arrow
needs a single transvection that turns a presentation of one class into a
presentation of a strictly coarser class.
"""
from boundquiver import paper_document
from boundquiver.gamma import analyze, build_family, build_gamma
from boundquiver.homotopy import canonical_surjection
from boundquiver.output import gamma_dot

doc = paper_document()
Q, k = doc.quiver(), doc.field()
names = ["I", "I1", "I2", "I3", "I4"]

fam = build_family(Q, k, [(n, doc.ideal(n)) for n in names])
g = build_gamma(fam)
for a in g.arrows:
    print(a.source, "->", a.target, "  via", a.label)

rep = analyze(g)
print("sources:", rep.sources)            # two of them
print("I reaches I4?", rep.reachable("I", "I4"))
print("I reaches I3?", rep.reachable("I", "I3"))

# even so, pi1(Q, I) maps onto pi1(Q, I4)
s = canonical_surjection(fam.relations["I"], fam.relations["I4"])
print(s.source, "->", s.target, s.images)

print(gamma_dot(g))
