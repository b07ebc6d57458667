"""Direct products with coordinate blocks: strips, supports and factorizations.

A :class:`ProductGroup` places its factors on consecutive disjoint blocks of
points.  A subgroup "inside" the product is any :class:`GeneratedGroup` of the
same total degree whose generators lie in the product.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .perm import (
    DEFAULT_ENUM_BOUND,
    BoundExceeded,
    DegreeMismatch,
    GeneratedGroup,
    NotASubgroup,
    Permutation,
    _greedy_subgroup,
)


@dataclass(frozen=True)
class ProductGroup:
    factors: tuple[GeneratedGroup, ...]
    offsets: tuple[int, ...]
    degree: int
    group: GeneratedGroup
    simple: bool = False

    @property
    def r(self) -> int:
        return len(self.factors)

    def block(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i] + self.factors[i].degree)

    def embed(self, parts: Sequence[Permutation | None]) -> Permutation:
        """Element with coordinate ``i`` equal to ``parts[i]`` (``None`` for identity)."""
        if len(parts) != self.r:
            raise ValueError(f"expected {self.r} coordinates, got {len(parts)}")
        images = list(range(self.degree))
        for i, part in enumerate(parts):
            if part is None:
                continue
            if part.degree != self.factors[i].degree:
                raise DegreeMismatch(f"coordinate {i}: degree {part.degree}")
            off = self.offsets[i]
            for x, y in enumerate(part.images):
                images[off + x] = off + y
        return Permutation._raw(tuple(images))

    def coordinate(self, p: Permutation, i: int) -> Permutation:
        off = self.offsets[i]
        d = self.factors[i].degree
        return Permutation._raw(tuple(y - off for y in p.images[off : off + d]))

    def coordinates(self, p: Permutation) -> list[Permutation]:
        return [self.coordinate(p, i) for i in range(self.r)]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} against product of degree {self.degree}")
        for i in range(self.r):
            blk = self.block(i)
            if any(p.images[x] not in blk for x in blk):
                return False
            if not self.factors[i].contains(self.coordinate(p, i)):
                return False
        return True

    def embedded_factor(self, i: int) -> GeneratedGroup:
        parts: list[Permutation | None] = [None] * self.r
        gens = []
        for g in self.factors[i].generators:
            parts[i] = g
            gens.append(self.embed(parts))
        return GeneratedGroup(self.degree, gens)

    def check_inside(self, h: GeneratedGroup) -> None:
        if h.degree != self.degree:
            raise DegreeMismatch(f"subgroup degree {h.degree}, product degree {self.degree}")
        for g in h.generators:
            if not self.contains(g):
                raise NotASubgroup("generator does not lie in the product")


def direct_product(factors: Sequence[GeneratedGroup], simple: bool = False) -> ProductGroup:
    """Product acting on disjoint blocks; ``simple`` asserts every factor is simple."""
    if not factors:
        raise ValueError("need at least one factor")
    offsets = []
    total = 0
    for f in factors:
        offsets.append(total)
        total += f.degree
    shell = ProductGroup(tuple(factors), tuple(offsets), total, GeneratedGroup(total), simple)
    gens = []
    for i in range(len(factors)):
        gens.extend(shell.embedded_factor(i).generators)
    return ProductGroup(tuple(factors), tuple(offsets), total, GeneratedGroup(total, gens), simple)


def restrict(s: ProductGroup, h: GeneratedGroup, indices: Sequence[int]) -> GeneratedGroup:
    """Image of ``h`` under the projection onto ``indices``, kept in the full degree.

    Coordinates outside ``indices`` are replaced by the identity.
    """
    keep = set(indices)
    gens = []
    for g in h.generators:
        parts = [s.coordinate(g, i) if i in keep else None for i in range(s.r)]
        gens.append(s.embed(parts))
    return GeneratedGroup(s.degree, gens)


def projection(s: ProductGroup, i: int, h: GeneratedGroup) -> GeneratedGroup:
    """``h`` projected to coordinate ``i``, as a group on the factor's points."""
    s.check_inside(h)
    return GeneratedGroup(s.factors[i].degree, [s.coordinate(g, i) for g in h.generators])


def support(s: ProductGroup, h: GeneratedGroup) -> set[int]:
    s.check_inside(h)
    return {i for i in range(s.r) if any(not s.coordinate(g, i).is_identity() for g in h.generators)}


@dataclass(frozen=True)
class SubgroupFlags:
    is_strip: bool
    is_nontrivial_strip: bool
    is_full_strip: bool
    is_diagonal: bool
    is_subdirect: bool
    is_full_diagonal: bool


def classify_subgroup(s: ProductGroup, h: GeneratedGroup) -> SubgroupFlags:
    """Strip/diagonal/subdirect predicates, deciding injectivity of a projection by orders."""
    s.check_inside(h)
    n = h.order()
    if n == 1:
        raise ValueError("classification needs a nontrivial subgroup")
    proj = [projection(s, i, h).order() for i in range(s.r)]
    injective = [k == n for k in proj]
    full = [k == s.factors[i].order() for i, k in enumerate(proj)]
    supp = [i for i, k in enumerate(proj) if k != 1]
    is_strip = all(injective[i] or proj[i] == 1 for i in range(s.r))
    diagonal = all(injective)
    subdirect = all(full)
    return SubgroupFlags(
        is_strip=is_strip,
        is_nontrivial_strip=is_strip and len(supp) > 1,
        is_full_strip=is_strip and all(full[i] for i in supp),
        is_diagonal=diagonal,
        is_subdirect=subdirect,
        is_full_diagonal=diagonal and subdirect,
    )


@dataclass(frozen=True)
class StripSpec:
    """Support indices plus, for each index after the first, a conjugating relabeling.

    The isomorphism onto coordinate ``support[k]`` is ``q -> q ** maps[k-1]``.
    """

    support: tuple[int, ...]
    maps: tuple[Permutation, ...] = ()

    def __post_init__(self):
        if not self.support:
            raise ValueError("support must be nonempty")
        if len(set(self.support)) != len(self.support):
            raise ValueError("support indices repeat")
        if len(self.maps) != len(self.support) - 1:
            raise ValueError("need one map per support index after the first")


def make_strip(s: ProductGroup, spec: StripSpec, source: GeneratedGroup | None = None) -> GeneratedGroup:
    """``{(q, q^c_2, ...)}`` over the first support factor (or its subgroup ``source``)."""
    first = spec.support[0]
    src = s.factors[first] if source is None else source
    if src.degree != s.factors[first].degree:
        raise DegreeMismatch("source degree differs from its factor")
    for idx, c in zip(spec.support[1:], spec.maps):
        target = s.factors[idx]
        if c.degree != target.degree or target.degree != src.degree:
            raise DegreeMismatch(f"map into coordinate {idx} has the wrong degree")
        if not all(target.contains(g**c) for g in src.generators):
            raise NotASubgroup(f"map does not carry the source into factor {idx}")
    gens = []
    for g in src.generators:
        parts: list[Permutation | None] = [None] * s.r
        parts[first] = g
        for idx, c in zip(spec.support[1:], spec.maps):
            parts[idx] = g**c
        gens.append(s.embed(parts))
    return GeneratedGroup(s.degree, gens)


def join(degree: int, groups: Sequence[GeneratedGroup]) -> GeneratedGroup:
    return GeneratedGroup(degree, [g for grp in groups for g in grp.generators])


@dataclass
class ScottDecomposition:
    blocks: list[tuple[int, ...]]
    strips: list[GeneratedGroup]


def scott_decomposition(s: ProductGroup, h: GeneratedGroup) -> ScottDecomposition:
    """Split a subdirect subgroup of a product of simple groups into full strips.

    Coordinates ``i`` and ``j`` share a block exactly when the projection of
    ``h`` onto ``{i, j}`` is no larger than its projection onto ``i``.
    """
    if not s.simple:
        raise ValueError("Scott decomposition requires the factors to be marked simple")
    s.check_inside(h)
    proj = [projection(s, i, h).order() for i in range(s.r)]
    if any(k != s.factors[i].order() for i, k in enumerate(proj)):
        raise ValueError("h is not subdirect")
    parent = list(range(s.r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(s.r):
        for j in range(i + 1, s.r):
            if find(i) == find(j):
                continue
            if restrict(s, h, [i, j]).order() == proj[i]:
                parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for i in range(s.r):
        groups.setdefault(find(i), []).append(i)
    blocks = sorted(tuple(v) for v in groups.values())
    strips = [restrict(s, h, blk) for blk in blocks]
    return ScottDecomposition(blocks, strips)


def intersection(a: GeneratedGroup, b: GeneratedGroup, bound: int = DEFAULT_ENUM_BOUND) -> GeneratedGroup:
    """Enumerate the smaller group and sift each element into the larger."""
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree}")
    small, large = (a, b) if a.order() <= b.order() else (b, a)
    if small.order() > bound:
        raise BoundExceeded(f"smaller order {small.order()} exceeds enumeration bound {bound}")
    common = (e.images for e in small.elements(bound) if large.chain.contains_images(e.images))
    return _greedy_subgroup(a.degree, common, None)


def product_size(a: GeneratedGroup, b: GeneratedGroup, bound: int = DEFAULT_ENUM_BOUND) -> int:
    """``|AB| = |A||B|/|A ∩ B|``."""
    return a.order() * b.order() // intersection(a, b, bound).order()


def is_factorization(g: GeneratedGroup, a: GeneratedGroup, b: GeneratedGroup, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    if not (a.is_subgroup_of(g) and b.is_subgroup_of(g)):
        raise NotASubgroup("factors must be subgroups of g")
    return product_size(a, b, bound) == g.order()


def are_conjugate_subgroups(
    g: GeneratedGroup, a: GeneratedGroup, b: GeneratedGroup, bound: int = DEFAULT_ENUM_BOUND
) -> Permutation | None:
    """Some ``x`` in ``g`` with ``a ** x == b``, or ``None``; brute force over ``g``."""
    if a.order() != b.order():
        return None
    for x in g.elements(bound):
        xi = ~x
        if all(b.contains(xi * gen * x) for gen in a.generators):
            return x
    return None


def literal_product_set(a: GeneratedGroup, b: GeneratedGroup, bound: int = 10**4) -> set[tuple]:
    """The set ``{xy}`` computed element by element; small cases only."""
    xs = [e.images for e in a.elements(bound)]
    ys = [e.images for e in b.elements(bound)]
    return {tuple(y[i] for i in x) for x in xs for y in ys}
