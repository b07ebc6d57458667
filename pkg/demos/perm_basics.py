"""
Permutations and stabilizer chains
==================================

Composition is left to right: ``p * q`` applies ``p`` first.
"""

from charsimple import Permutation, alternating_group, catalog

p = Permutation.from_cycles(3, (0, 1))
q = Permutation.from_cycles(3, (1, 2))
print("(0 1)(1 2) =", (p * q).cycles())

# conjugation is ~x * a * x
print("(0 1) ** (1 2) =", (p**q).cycles())

a5 = alternating_group(5)
print("|A5| =", a5.order(), "transitive:", a5.is_transitive())
print("stabilizer of 0 has order", a5.point_stabilizer(0).order())

m12 = catalog.load("M12")
print("|M12| =", m12.order(), "base", m12.chain.base)
print("an element count by enumeration:", sum(1 for _ in m12.elements()))
