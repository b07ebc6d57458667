"""
Wreath products in product action
=================================

A transitive A5 inside A6, squared, acts transitively on 36 points and stays
inside the base group.  Adding the coordinate swap leaves the base.
"""

from charsimple import Permutation, catalog
from charsimple.wreath import base_intersection, base_subgroup, components, is_in_base, top_element, WreathGroup

a5t = catalog.load("A5_in_A6_transitive")
h = base_subgroup([a5t, a5t])
print("degree", h.degree, "order", h.order(), "transitive", h.is_transitive())
print("in base:", is_in_base(h))

swap = top_element(6, Permutation.from_cycles(2, (0, 1)))
x = WreathGroup(6, 2, list(h.generators) + [swap])
print("with swap: order", x.order(), "in base:", is_in_base(x))
print("|x ∩ B| =", base_intersection(x).order())
print("component orders:", [c.order() for c in components(x)])
