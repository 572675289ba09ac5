"""
The group engine on its own
===========================
"""
from boundquiver.fpgroups import (Presentation, abelianization, classify,
                                  smith_normal_form, tietze_simplify,
                                  todd_coxeter, word_trivial)

# letters are 1-based; -k is the inverse of letter k
p = Presentation(("a", "b"), ((2, 1), (1, -2)))    # <a, b | b*a, a*b^-1>
print(p)
print(tietze_simplify(p).presentation)            # <a | a^2>
print(abelianization(p), todd_coxeter(p))

snf = smith_normal_form([[2, 0], [0, 3]])
print(snf.diagonal, snf.torsion, snf.free_rank)

# S3 has a trivial abelian image for the commutator, so the coset table decides
s3 = Presentation(("a", "b"), ((1, 1), (2, 2, 2), (1, 2, 1, 2)))
print(classify(s3))
print(word_trivial(s3, (1, 2, -1, -2)))

# and a group where no strategy finishes within a small budget
bs = Presentation(("a", "b"), ((1, 2, -1, -2, -2),))
print(word_trivial(bs, (1, 2, -1, -2), max_cosets=50))
