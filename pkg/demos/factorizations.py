"""
Two simple subgroups that factorize their parent
================================================

A6 is the product of a point stabilizer A5 and a transitive A5; M12 is the
product of an intransitive and a transitive M11.
"""

from charsimple import arith, catalog
from charsimple.products import intersection, is_factorization

for label, parent, (a, b) in [
    ("A6", catalog.load("A6"), catalog.two_a5_in_a6()),
    ("M12", catalog.load("M12"), catalog.two_m11_in_m12()),
]:
    meet = intersection(a, b).order()
    print(f"{label}: |A|={a.order()} |B|={b.order()} |A ∩ B|={meet}")
    print("  factorization:", is_factorization(parent, a, b))
    print("  prime divisors:", sorted(arith.prime_divisor_set(parent.order())))
