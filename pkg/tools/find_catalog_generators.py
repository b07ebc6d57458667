"""Regenerate the pinned generator files in src/charsimple/data.

Run once; the output is frozen into the repository and validated by order and
tag checks whenever the catalog loads.  Searches use a fixed seed.
"""

import random
from pathlib import Path

from charsimple.groupfile import write_group
from charsimple.perm import GeneratedGroup, Permutation, alternating_group, symmetric_group

DATA = Path(__file__).resolve().parents[1] / "src" / "charsimple" / "data"
INF = 11


def projective_line(f, p):
    """Permutation of P^1(F_p) = {0..p-1, p=inf} induced by ``f``."""
    return Permutation([f(x) for x in range(p + 1)])


def m12():
    def shift(x):
        return INF if x == INF else (x + 1) % 11

    def invert(x):
        if x == INF:
            return 0
        if x == 0:
            return INF
        return (-pow(x, -1, 11)) % 11

    u = Permutation.from_cycles(12, (2, 6, 10, 7), (3, 9, 4, 5))
    return GeneratedGroup(12, [projective_line(shift, 11), projective_line(invert, 11), u])


def m11():
    return GeneratedGroup(
        11,
        [Permutation.from_cycles(11, tuple(range(11))), Permutation.from_cycles(11, (2, 6, 10, 7), (3, 9, 4, 5))],
    )


def a5_on_six():
    # PSL(2,5) on P^1(F_5): x -> x+1 and x -> -1/x
    def shift(x):
        return 5 if x == 5 else (x + 1) % 5

    def invert(x):
        if x == 5:
            return 0
        if x == 0:
            return 5
        return (-pow(x, -1, 5)) % 5

    return GeneratedGroup(6, [projective_line(shift, 5), projective_line(invert, 5)])


def affine(matrix, shift=0):
    """x -> M x + c on F_2^3, points encoded as 3-bit integers."""

    def apply(x):
        bits = [(x >> i) & 1 for i in range(3)]
        out = 0
        for i, row in enumerate(matrix):
            out |= (sum(a * b for a, b in zip(row, bits)) % 2) << i
        return out ^ shift

    return Permutation([apply(x) for x in range(8)])


def agl32():
    companion = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]
    transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    linear = GeneratedGroup(8, [affine(companion), affine(transvection)])
    assert linear.order() == 168
    return linear, GeneratedGroup(8, [*linear.generators, affine([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1)])


def small_generating_set(group, rng, tries=2000):
    target = group.order()
    for _ in range(tries):
        a, b = group.random_element(rng), group.random_element(rng)
        if GeneratedGroup(group.degree, [a, b]).order() == target:
            return GeneratedGroup(group.degree, [a, b])
    raise RuntimeError("no 2-generator set found")


def find_transitive(ambient, order, rng, tries=200000):
    for _ in range(tries):
        a, b = ambient.random_element(rng), ambient.random_element(rng)
        cand = GeneratedGroup(ambient.degree, [a, b])
        if cand.is_transitive() and cand.order() == order:
            return cand
    raise RuntimeError("search failed")


def main():
    rng = random.Random(20190101)
    big = m12()
    stab = small_generating_set(big.point_stabilizer(INF), rng)
    trans = find_transitive(big, 7920, rng)
    linear, agl = agl32()
    sl_trans = find_transitive(agl, 168, rng)
    files = {
        "A5": (alternating_group(5), "alternating group A5 on 5 points"),
        "A6": (alternating_group(6), "alternating group A6 on 6 points"),
        "S5": (symmetric_group(5), "symmetric group S5 on 5 points"),
        "A5_in_A6_transitive": (a5_on_six(), "PSL(2,5) on the projective line over F_5; transitive A5 inside A6"),
        "M11": (m11(), "Mathieu group M11 on 11 points"),
        "M12": (big, "Mathieu group M12 on P^1(F_11) (point 11 is infinity)"),
        "M11_in_M12_stabilizer": (stab, "stabilizer of point 11 in M12; intransitive M11"),
        "M11_in_M12_transitive": (trans, "transitive M11 inside M12 (seeded random search)"),
        "SL32": (linear, "SL(3,2) acting linearly on F_2^3 (fixes the zero vector)"),
        "AGL32": (agl, "affine group F_2^3 : SL(3,2) on 8 points"),
        "SL32_transitive": (sl_trans, "transitive complement SL(3,2) inside AGL(3,2) (seeded random search)"),
    }
    for name, (grp, comment) in files.items():
        write_group(DATA / f"{name}.txt", grp, comment)
        print(name, grp.degree, grp.order(), grp.is_transitive())


if __name__ == "__main__":
    main()
