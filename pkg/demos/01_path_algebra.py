"""
Paths, ideals and transvections
===============================

A walk through the path algebra layer on the quiver

    3 ==b1,b2==> 2 ==a1,a2==> 1

Paths are written in traversal order, so b1*a1 means "b1, then a1".
"""
from fractions import Fraction

from boundquiver import (apply_morphism, build_quiver, element, ideal_closure,
                         ideal_member, make_transvection)
from boundquiver.field import Rationals

Q = build_quiver(["1", "2", "3"], [("a1", "2", "1"), ("a2", "2", "1"),
                                   ("b1", "3", "2"), ("b2", "3", "2")])
k = Rationals()

print(Q.cyclomatic_number)            # 4 arrows, 3 vertices -> 2 independent cycles
print([str(p) for p in Q.paths("3", "1")])   # the four long paths

# an ideal is given by generators and stored in a canonical basis
I = ideal_closure(Q, k, [element(Q, k, [(1, ["b1", "a1"])]),
                         element(Q, k, [(1, ["b2", "a2"])])])
print(I.format())

x = element(Q, k, [(3, ["b1", "a1"]), (Fraction(-1, 2), ["b2", "a2"])])
print(x, ideal_member(I, x))          # a combination of generators lies in I

# transvection: a1 -> a1 - a2, everything else fixed
t = make_transvection(Q, k, "a1", Q.path("a2"), -1)
print(t.label)
J = apply_morphism(t, I)
print(J.format())                     # b1*a1 - b1*a2 and b2*a2

# applying the opposite transvection brings the ideal back
back = make_transvection(Q, k, "a1", Q.path("a2"), 1)
print(apply_morphism(back, J) == I)
