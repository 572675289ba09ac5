"""
Fundamental groups of five presentations
========================================

The five ideals I, I1, .., I4 define isomorphic algebras, but their
homotopy relations differ and so do the groups.
"""
from boundquiver import paper_document
from boundquiver.homotopy import HomotopyRelation, minimal_supports

doc = paper_document()

for name in ["I", "I1", "I2", "I3", "I4"]:
    ideal = doc.ideal(name)
    R = HomotopyRelation.of_ideal(ideal, name)
    fp = R.fingerprint()
    print(name)
    for ms in minimal_supports(ideal):
        print("   minimal support", [str(p) for p in ms.support])
    print("   ", R.presentation(), "->", fp.presentation)
    print("   ", fp.tag, list(fp.abelian_invariants))

# the group does not depend on where we put the basepoint
R4 = HomotopyRelation.of_ideal(doc.ideal("I4"))
print([R4.fingerprint(v).tag for v in doc.vertices])
