import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from charsimple.perm import (
    BoundExceeded,
    DegreeMismatch,
    GeneratedGroup,
    NotASubgroup,
    Permutation,
    alternating_group,
    brute_force_closure,
    compose,
    coset_action,
    symmetric_group,
)


def cyc(n, *cycles):
    return Permutation.from_cycles(n, *cycles)


def test_bijection_is_enforced():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([1, 2, 3])
    with pytest.raises(ValueError):
        Permutation([])


def test_compose_identity_and_inverse():
    p = cyc(5, (0, 3, 1), (2, 4))
    e = Permutation.identity(5)
    assert compose(e, p) == p
    assert compose(p, ~p) == e
    assert compose(~p, p) == e


def test_compose_left_to_right():
    # (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
    p, q = cyc(3, (0, 1)), cyc(3, (1, 2))
    r = compose(p, q)
    assert r.images == (2, 0, 1)
    assert r == cyc(3, (0, 2, 1))
    assert all(r(x) == q(p(x)) for x in range(3))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_conjugation_convention():
    a, x = cyc(4, (0, 1)), cyc(4, (1, 2, 3))
    assert a**x == ~x * a * x
    # conjugating relabels points: the cycle (0 1) becomes (x(0) x(1))
    assert a**x == cyc(4, (x(0), x(1)))


def test_orbits():
    a5 = alternating_group(5)
    assert a5.orbit(0) == {0, 1, 2, 3, 4}
    assert GeneratedGroup(5).orbit(3) == {3}
    assert GeneratedGroup(4, [cyc(4, (0, 1))]).orbit(2) == {2}
    with pytest.raises(ValueError):
        a5.orbit(5)


def test_transitivity():
    assert alternating_group(5).is_transitive()
    assert not GeneratedGroup(4, [cyc(4, (0, 1))]).is_transitive()


def test_orders(groups):
    assert groups["M11"].order() == 7920
    assert groups["A6"].order() == 360
    assert GeneratedGroup(7).order() == 1
    assert groups["M12"].order() == 95040
    assert groups["SL32"].order() == 168
    for r in range(1, 8):
        assert symmetric_group(r).order() == [1, 1, 2, 6, 24, 120, 720, 5040][r]


def test_order_of_large_power_is_exact(groups):
    from charsimple.products import direct_product

    s = direct_product([groups["M12"]] * 4)
    assert s.group.order() == 95040**4 == 81587891664322560000
    assert s.group.order() > 2**64


def test_contains():
    a6 = alternating_group(6)
    for g in a6.generators:
        assert a6.contains(g)
    assert a6.contains(Permutation.identity(6))
    assert not a6.contains(cyc(6, (0, 1)))
    with pytest.raises(DegreeMismatch):
        a6.contains(Permutation.identity(5))


def test_point_stabilizer(groups):
    assert alternating_group(6).point_stabilizer(0).order() == 60
    assert groups["SL32_transitive"].point_stabilizer(0).order() == 21
    regular = GeneratedGroup(5, [cyc(5, (0, 1, 2, 3, 4))])
    assert regular.point_stabilizer(2).order() == 1
    with pytest.raises(ValueError):
        regular.point_stabilizer(9)


def test_elements(groups):
    assert sum(1 for _ in groups["M11"].elements(10**4)) == 7920
    assert list(GeneratedGroup(3).elements(1)) == [Permutation.identity(3)]
    with pytest.raises(BoundExceeded):
        alternating_group(5).elements(50)


def test_elements_are_distinct_and_in_group():
    g = alternating_group(5)
    els = list(g.elements(100))
    assert len(set(els)) == 60
    assert set(e.images for e in els) == brute_force_closure(5, g.generators, 100)


def test_coset_action_degrees(groups):
    from charsimple.products import StripSpec, direct_product, make_strip

    for name, expected in (("A5", 60), ("A6", 360)):
        q = groups[name]
        s = direct_product([q, q])
        diag = make_strip(s, StripSpec((0, 1), (Permutation.identity(q.degree),)))
        image = coset_action(s.group, diag)
        assert image.degree == expected
        assert image.is_transitive()
    a5 = groups["A5"]
    assert coset_action(a5, a5).degree == 1


def test_coset_action_kernel_is_core():
    # S4 on cosets of a Klein-four-containing D8: kernel V4 gives image S3
    s4 = symmetric_group(4)
    d8 = GeneratedGroup(4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    image = coset_action(s4, d8)
    assert image.degree == 3
    assert image.order() == 6


def test_coset_action_rejects_non_subgroup():
    with pytest.raises(NotASubgroup):
        coset_action(alternating_group(4), GeneratedGroup(4, [cyc(4, (0, 1))]))
    with pytest.raises(BoundExceeded):
        coset_action(alternating_group(6), GeneratedGroup(6), bound=100)


def test_coset_stabilizer_contains_subgroup(groups):
    from charsimple.perm import CosetSpace

    a6 = groups["A6"]
    h = groups["A5_in_A6_transitive"]
    space = CosetSpace(a6, h)
    image = space.image()
    stab = image.point_stabilizer(0)
    assert all(stab.contains(space.act(g)) for g in h.generators)
    assert image.order() // stab.order() == space.index == 6


perm_lists = st.integers(min_value=2, max_value=7).flatmap(
    lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3)
)


@settings(max_examples=60, deadline=None)
@given(perm_lists)
def test_chain_order_matches_closure_and_sympy(gens):
    n = len(gens[0])
    g = GeneratedGroup(n, [Permutation(p) for p in gens])
    closure = brute_force_closure(n, g.generators, 10**5)
    assert g.order() == len(closure)
    assert g.order() == PermutationGroup([SymPerm(list(p)) for p in gens]).order()
    assert {e.images for e in g.elements(10**5)} == closure


@settings(max_examples=40, deadline=None)
@given(perm_lists)
def test_orbit_sizes_divide_order(gens):
    n = len(gens[0])
    g = GeneratedGroup(n, [Permutation(p) for p in gens])
    for o in g.orbits():
        pt = min(o)
        assert g.order() % len(o) == 0
        assert g.point_stabilizer(pt).order() * len(o) == g.order()


gens_and_probe = st.integers(min_value=2, max_value=7).flatmap(
    lambda n: st.tuples(
        st.lists(st.permutations(range(n)), min_size=1, max_size=3),
        st.permutations(range(n)),
    )
)


@settings(max_examples=60, deadline=None)
@given(gens_and_probe)
def test_membership_matches_closure(data):
    gens, probe = data
    n = len(probe)
    g = GeneratedGroup(n, [Permutation(p) for p in gens])
    closure = brute_force_closure(n, g.generators, 10**5)
    q = Permutation(probe)
    assert g.contains(q) == (q.images in closure)


def test_random_elements_sift(groups):
    rng = random.Random(7)
    g = groups["A6"]
    everything = {e.images for e in g.elements(1000)}
    for _ in range(100):
        e = g.random_element(rng)
        assert e.images in everything and g.contains(e)


def test_chain_is_deterministic(groups):
    a = groups["M12"]
    b = GeneratedGroup(12, a.generators)
    assert a.chain.base == b.chain.base
    assert [len(lv.transversal) for lv in a.chain.levels] == [len(lv.transversal) for lv in b.chain.levels]
