"""
Strips and the Scott decomposition
==================================

A subdirect subgroup of A5^4 built from two diagonals splits back into them.
"""

from charsimple import Permutation, catalog
from charsimple.products import StripSpec, classify_subgroup, direct_product, join, make_strip, scott_decomposition

a5 = catalog.load("A5")
s = direct_product([a5] * 4, simple=True)

# relabel the second diagonal by a transposition of S5
tau = catalog.load("S5").generators[-1]
d01 = make_strip(s, StripSpec((0, 1), (Permutation.identity(5),)))
d23 = make_strip(s, StripSpec((2, 3), (tau,)))
h = join(s.degree, [d01, d23])

print("|H| =", h.order())
print(classify_subgroup(s, h))
print("blocks:", scott_decomposition(s, h).blocks)
