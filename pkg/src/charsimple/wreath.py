"""Wreath products ``Sym(m) wr S_r`` in product action on ``m**r`` points.

An element ``(a_0, ..., a_{r-1}) b`` first applies ``a_i`` to coordinate ``i``
and then moves coordinate ``i`` to position ``b(i)``.  The point
``(g_0, ..., g_{r-1})`` has index ``sum(g_i * m**i)`` (little-endian).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .perm import DegreeMismatch, GeneratedGroup, Permutation

MAX_R = 6


@dataclass(frozen=True)
class WreathElement:
    bottom: tuple[Permutation, ...]
    top: Permutation

    def __post_init__(self):
        if len(self.bottom) != self.top.degree:
            raise DegreeMismatch(f"{len(self.bottom)} bottoms for a top of degree {self.top.degree}")
        if len({a.degree for a in self.bottom}) != 1:
            raise DegreeMismatch("bottom permutations differ in degree")

    @property
    def m(self) -> int:
        return self.bottom[0].degree

    @property
    def r(self) -> int:
        return self.top.degree

    @classmethod
    def identity(cls, m: int, r: int) -> WreathElement:
        return cls(tuple(Permutation.identity(m) for _ in range(r)), Permutation.identity(r))

    @classmethod
    def base(cls, bottom: Sequence[Permutation]) -> WreathElement:
        return cls(tuple(bottom), Permutation.identity(len(bottom)))

    def __mul__(self, other: WreathElement) -> WreathElement:
        if (self.m, self.r) != (other.m, other.r):
            raise DegreeMismatch("wreath elements of different shapes")
        b = self.top.images
        bottom = tuple(self.bottom[i] * other.bottom[b[i]] for i in range(self.r))
        return WreathElement(bottom, self.top * other.top)

    def __invert__(self) -> WreathElement:
        tinv = ~self.top
        # (a; b)^-1 = (a'; b^-1) with a'_j = a_{b^-1(j)}^-1
        bottom = tuple(~self.bottom[tinv.images[j]] for j in range(self.r))
        return WreathElement(bottom, tinv)

    def is_identity(self) -> bool:
        return self.top.is_identity() and all(a.is_identity() for a in self.bottom)

    def in_base(self) -> bool:
        return self.top.is_identity()


def point_index(coords: Sequence[int], m: int) -> int:
    return sum(c * m**i for i, c in enumerate(coords))


def point_coords(index: int, m: int, r: int) -> tuple[int, ...]:
    out = []
    for _ in range(r):
        index, c = divmod(index, m)
        out.append(c)
    return tuple(out)


def encode(e: WreathElement) -> Permutation:
    """The product-action permutation of ``e`` on ``m**r`` points."""
    m, r = e.m, e.r
    bots = [a.images for a in e.bottom]
    top = e.top.images
    weights = [m ** top[i] for i in range(r)]
    images = []
    for coords in itertools.product(range(m), repeat=r):
        # itertools.product varies the last coordinate fastest; reverse for little-endian
        coords = coords[::-1]
        images.append(sum(bots[i][coords[i]] * weights[i] for i in range(r)))
    return Permutation._raw(tuple(images))


def decode(p: Permutation, m: int, r: int) -> WreathElement:
    """Recover the structural form of a raw permutation known to lie in the wreath product.

    Only used to test that :func:`encode` is injective; raises ``ValueError``
    when ``p`` does not respect the product structure.
    """
    if p.degree != m**r:
        raise DegreeMismatch(f"degree {p.degree} is not {m}**{r}")
    # the image of the i-th unit line through the origin reveals where coordinate i goes
    origin = point_coords(p.images[0], m, r)
    top = []
    for i in range(r):
        moved = None
        for v in range(m):
            coords = [0] * r
            coords[i] = v
            img = point_coords(p.images[point_index(coords, m)], m, r)
            diff = [j for j in range(r) if img[j] != origin[j]]
            if len(diff) > 1:
                raise ValueError("not a product-action permutation")
            if diff:
                if moved is not None and diff[0] != moved:
                    raise ValueError("not a product-action permutation")
                moved = diff[0]
        if moved is None:
            raise ValueError("m must be at least 2 to decode")
        top.append(moved)
    bottom = []
    for i in range(r):
        images = []
        for v in range(m):
            coords = [0] * r
            coords[i] = v
            images.append(point_coords(p.images[point_index(coords, m)], m, r)[top[i]])
        bottom.append(Permutation(images))
    e = WreathElement(tuple(bottom), Permutation(top))
    if encode(e) != p:
        raise ValueError("not a product-action permutation")
    return e


class WreathGroup:
    """Subgroup of ``Sym(m) wr S_r`` given by structural generators."""

    def __init__(self, m: int, r: int, generators: Iterable[WreathElement], name: str | None = None):
        if r > MAX_R:
            raise ValueError(f"r={r} exceeds the supported maximum {MAX_R}")
        gens = tuple(generators)
        for g in gens:
            if (g.m, g.r) != (m, r):
                raise DegreeMismatch(f"generator of shape ({g.m}, {g.r}) in a ({m}, {r}) wreath")
        self.m = m
        self.r = r
        self.generators = gens
        self.name = name
        self._perm_group: GeneratedGroup | None = None

    def __repr__(self) -> str:
        return f"<{self.name or 'WreathGroup'} m={self.m} r={self.r} ngens={len(self.generators)}>"

    @property
    def degree(self) -> int:
        return self.m**self.r

    def as_permutation_group(self) -> GeneratedGroup:
        if self._perm_group is None:
            self._perm_group = GeneratedGroup(self.degree, [encode(g) for g in self.generators], name=self.name)
        return self._perm_group

    def order(self) -> int:
        return self.as_permutation_group().order()

    def is_transitive(self) -> bool:
        return self.as_permutation_group().is_transitive()

    def random_element(self, rng: random.Random, length: int = 20) -> WreathElement:
        e = WreathElement.identity(self.m, self.r)
        for _ in range(length):
            e = e * rng.choice(self.generators)
        return e


def base_subgroup(factors: Sequence[GeneratedGroup], name: str | None = None) -> WreathGroup:
    """Coordinatewise product of ``factors`` as a subgroup of the base group."""
    r = len(factors)
    m = factors[0].degree
    gens = []
    for i, f in enumerate(factors):
        if f.degree != m:
            raise DegreeMismatch("factors act on different point sets")
        for g in f.generators:
            bottom = [Permutation.identity(m)] * r
            bottom[i] = g
            gens.append(WreathElement.base(bottom))
    return WreathGroup(m, r, gens, name=name)


def top_element(m: int, top: Permutation) -> WreathElement:
    return WreathElement(tuple(Permutation.identity(m) for _ in range(top.degree)), top)


def wreath_product(q: GeneratedGroup, top: GeneratedGroup, name: str | None = None) -> WreathGroup:
    """``q wr top`` in product action."""
    base = base_subgroup([q] * top.degree)
    gens = list(base.generators) + [top_element(q.degree, t) for t in top.generators]
    return WreathGroup(q.degree, top.degree, gens, name=name)


def top_projection(x: WreathGroup | Iterable[WreathElement]) -> GeneratedGroup:
    gens = x.generators if isinstance(x, WreathGroup) else tuple(x)
    if not gens:
        raise ValueError("need at least one element to infer r")
    return GeneratedGroup(gens[0].r, [g.top for g in gens])


def is_in_base(x: WreathGroup | Iterable[WreathElement]) -> bool:
    return top_projection(x).order() == 1


def _top_words(x: WreathGroup) -> dict[tuple, WreathElement]:
    """One wreath element of ``x`` for every element of the top image."""
    words = {tuple(range(x.r)): WreathElement.identity(x.m, x.r)}
    queue = list(words)
    for t in queue:
        w = words[t]
        for g in x.generators:
            nt = tuple(g.top.images[i] for i in t)
            if nt not in words:
                words[nt] = w * g
                queue.append(nt)
    return words


def base_intersection(x: WreathGroup) -> WreathGroup:
    """Generators of ``x`` ∩ base group from Schreier generators over the top image."""
    words = _top_words(x)
    gens = []
    seen = set()
    for t, w in words.items():
        for g in x.generators:
            nt = tuple(g.top.images[i] for i in t)
            sg = w * g * ~words[nt]
            if sg.is_identity():
                continue
            key = tuple(a.images for a in sg.bottom)
            if key not in seen:
                seen.add(key)
                gens.append(sg)
    if not gens:
        gens = [WreathElement.identity(x.m, x.r)]
    return WreathGroup(x.m, x.r, gens)


def component(x: WreathGroup, j: int) -> GeneratedGroup:
    """Projection onto coordinate ``j`` of the subgroup of ``x`` whose top fixes ``j``."""
    if not 0 <= j < x.r:
        raise ValueError(f"coordinate {j} out of range for r={x.r}")
    reps = {j: WreathElement.identity(x.m, x.r)}
    queue = [j]
    for k in queue:
        for g in x.generators:
            nk = g.top.images[k]
            if nk not in reps:
                reps[nk] = reps[k] * g
                queue.append(nk)
    bottoms = []
    for k, w in reps.items():
        for g in x.generators:
            sg = w * g * ~reps[g.top.images[k]]
            assert sg.top.images[j] == j
            bottoms.append(sg.bottom[j])
    return GeneratedGroup(x.m, bottoms)


def components(x: WreathGroup) -> list[GeneratedGroup]:
    return [component(x, j) for j in range(x.r)]


def base_support(x: WreathGroup) -> set[int]:
    """Coordinates on which some generator has a nontrivial bottom (base subgroups only)."""
    if not is_in_base(x):
        raise ValueError("support is only defined here for base subgroups")
    return {i for g in x.generators for i in range(x.r) if not g.bottom[i].is_identity()}


def conjugate(x: WreathGroup, g: WreathElement) -> WreathGroup:
    return WreathGroup(x.m, x.r, [~g * h * g for h in x.generators])
