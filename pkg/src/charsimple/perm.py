"""Permutations, generated groups and deterministic Schreier-Sims.

Points are ``0..n-1``.  Composition is left-to-right: ``p * q`` first applies
``p`` and then ``q``, so ``(p * q)(x) == q(p(x))``.  Conjugation follows the
same convention, ``a ** x == ~x * a * x``.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from operator import itemgetter

DEFAULT_ENUM_BOUND = 10**6
DEFAULT_COSET_BOUND = 10**6


class DegreeMismatch(ValueError):
    pass


class BoundExceeded(RuntimeError):
    """A computation would exceed a configured resource bound."""


class NotASubgroup(ValueError):
    pass


def _mul(a: tuple, b: tuple) -> tuple:
    # images of a followed by b
    if len(a) == 1:
        return (b[a[0]],)
    return itemgetter(*a)(b)


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class Permutation:
    """A bijection of ``{0..degree-1}`` stored as its image table."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if not images:
            raise ValueError("degree must be positive")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = None

    @classmethod
    def _raw(cls, images: tuple) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycles")
                seen.add(a)
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation._raw(_mul(self.images, other.images))

    def __invert__(self) -> Permutation:
        return Permutation._raw(_inv(self.images))

    inverse = __invert__

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return ~other * self * other
        n = int(other)
        base = self if n >= 0 else ~self
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            seen.add(i)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = n * len(c) // _gcd(n, len(c))
        return n

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p`` followed by ``q``."""
    return p * q


# ---------------------------------------------------------------------------
# stabilizer chains


@dataclass
class ChainLevel:
    base_point: int
    generators: list[tuple] = field(default_factory=list)
    transversal: dict[int, tuple] = field(default_factory=dict)
    inverse: dict[int, tuple] = field(default_factory=dict)

    def rebuild(self, degree: int) -> None:
        ident = tuple(range(degree))
        trans = {self.base_point: ident}
        queue = [self.base_point]
        for pt in queue:
            u = trans[pt]
            for s in self.generators:
                img = s[pt]
                if img not in trans:
                    trans[img] = _mul(u, s)
                    queue.append(img)
        self.transversal = trans
        self.inverse = {pt: _inv(u) for pt, u in trans.items()}


@dataclass
class StabilizerChain:
    """Base and strong generating set.

    Level ``i`` holds the transversal of the ``i``-th base point under the
    stabilizer of all earlier base points.
    """

    degree: int
    levels: list[ChainLevel]

    @property
    def base(self) -> list[int]:
        return [lv.base_point for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Strip ``g`` through the levels from ``start``.

        Returns the residue and the index of the level where sifting stopped
        (``len(levels)`` when it went all the way through).
        """
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            x = g[lv.base_point]
            inv = lv.inverse.get(x)
            if inv is None:
                return g, i
            g = _mul(g, inv)
        return g, len(self.levels)

    def contains_images(self, g: tuple) -> bool:
        h, _ = self.sift(g)
        return all(i == x for i, x in enumerate(h))

    def strong_generators(self) -> list[tuple]:
        return list(self.levels[0].generators) if self.levels else []


def _first_moved(g: tuple, avoid=()) -> int | None:
    for i, x in enumerate(g):
        if i != x and i not in avoid:
            return i
    return None


def build_chain(degree: int, generators: Iterable[tuple]) -> StabilizerChain:
    """Deterministic Schreier-Sims.

    Base points are chosen as first moved points of the generator that needs
    a new level.  Output depends only on the generator order.
    """
    ident = tuple(range(degree))
    gens = []
    for g in generators:
        if g != ident and g not in gens:
            gens.append(g)
    chain = StabilizerChain(degree, [])
    if not gens:
        return chain
    levels = chain.levels

    for g in gens:
        if all(g[lv.base_point] == lv.base_point for lv in levels):
            levels.append(ChainLevel(_first_moved(g)))
    for j, lv in enumerate(levels):
        fixed = [levels[k].base_point for k in range(j)]
        lv.generators = [g for g in gens if all(g[b] == b for b in fixed)]
        lv.rebuild(degree)

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = False
        for pt, u in list(lv.transversal.items()):
            for s in lv.generators:
                img = s[pt]
                sg = _mul(_mul(u, s), lv.inverse[img])
                if sg == ident:
                    continue
                h, j = chain.sift(sg, i + 1)
                if h == ident:
                    continue
                if j == len(levels):
                    levels.append(ChainLevel(_first_moved(h)))
                for k in range(i + 1, j + 1):
                    levels[k].generators.append(h)
                    levels[k].rebuild(degree)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return chain


# ---------------------------------------------------------------------------
# generated groups


class GeneratedGroup:
    """A permutation group given by generators; the chain is built lazily.

    Instances are treated as immutable once constructed.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name
        self._chain: StabilizerChain | None = None

    def __repr__(self) -> str:
        label = self.name or "GeneratedGroup"
        return f"<{label} degree={self.degree} ngens={len(self.generators)}>"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = build_chain(self.degree, (g.images for g in self.generators))
        return self._chain

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} against group of degree {self.degree}")
        return self.chain.contains_images(p.images)

    __contains__ = contains

    def is_subgroup_of(self, other: GeneratedGroup) -> bool:
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return all(other.contains(g) for g in self.generators)

    def orbit(self, point: int) -> set[int]:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        seen = {point}
        queue = [point]
        imgs = [g.images for g in self.generators]
        for x in queue:
            for g in imgs:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbits(self) -> list[set[int]]:
        left = set(range(self.degree))
        out = []
        while left:
            o = self.orbit(min(left))
            out.append(o)
            left -= o
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def point_stabilizer(self, point: int) -> GeneratedGroup:
        """Stabilizer of ``point`` via Schreier generators, reduced greedily."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        ident = tuple(range(self.degree))
        trans = {point: ident}
        queue = [point]
        gens = [g.images for g in self.generators]
        for x in queue:
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(trans[x], g)
                    queue.append(y)
        inverses = {x: _inv(u) for x, u in trans.items()}
        schreier = []
        for x, u in trans.items():
            for g in gens:
                sg = _mul(_mul(u, g), inverses[g[x]])
                if sg != ident:
                    schreier.append(sg)
        target = self.order() // len(trans)
        return _greedy_subgroup(self.degree, schreier, target, name=None)

    def elements(self, bound: int = DEFAULT_ENUM_BOUND) -> Iterator[Permutation]:
        """Yield every element exactly once; refuse if the order exceeds ``bound``."""
        n = self.order()
        if n > bound:
            raise BoundExceeded(f"group order {n} exceeds enumeration bound {bound}")
        return self._iter_elements()

    def _iter_elements(self) -> Iterator[Permutation]:
        levels = self.chain.levels
        if not levels:
            yield self.identity()
            return
        # g = u_k ... u_1 with u_1 from level 0
        reps = [list(lv.transversal.values()) for lv in reversed(levels)]

        def walk(depth: int, acc: tuple):
            if depth == len(reps):
                yield Permutation._raw(acc)
                return
            for u in reps[depth]:
                yield from walk(depth + 1, _mul(acc, u))

        yield from walk(0, tuple(range(self.degree)))

    def random_element(self, rng: random.Random) -> Permutation:
        acc = tuple(range(self.degree))
        for lv in reversed(self.chain.levels):
            acc = _mul(acc, lv.transversal[rng.choice(sorted(lv.transversal))])
        return Permutation._raw(acc)

    def conjugate(self, x: Permutation) -> GeneratedGroup:
        return GeneratedGroup(self.degree, [g ** x for g in self.generators])


def _greedy_subgroup(degree: int, candidates: Iterable[tuple], target: int | None, name=None) -> GeneratedGroup:
    """Group generated by ``candidates``, keeping only generators that enlarge it."""
    ident = tuple(range(degree))
    kept: list[tuple] = []
    chain = build_chain(degree, [])
    for c in candidates:
        if c == ident or chain.contains_images(c):
            continue
        kept.append(c)
        chain = build_chain(degree, kept)
        if target is not None and chain.order() == target:
            break
    grp = GeneratedGroup(degree, [Permutation._raw(k) for k in kept], name=name)
    grp._chain = chain
    return grp


def subgroup_from_elements(degree: int, elements: Iterable[Permutation], name=None) -> GeneratedGroup:
    return _greedy_subgroup(degree, (e.images for e in elements), None, name=name)


def orbit(g: GeneratedGroup, point: int) -> set[int]:
    return g.orbit(point)


def order(g: GeneratedGroup) -> int:
    return g.order()


def contains(g: GeneratedGroup, p: Permutation) -> bool:
    return g.contains(p)


def is_transitive(g: GeneratedGroup) -> bool:
    return g.is_transitive()


def point_stabilizer(g: GeneratedGroup, point: int) -> GeneratedGroup:
    return g.point_stabilizer(point)


def elements(g: GeneratedGroup, bound: int = DEFAULT_ENUM_BOUND) -> Iterator[Permutation]:
    return g.elements(bound)


def symmetric_group(n: int) -> GeneratedGroup:
    if n == 1:
        return GeneratedGroup(1, [], name="S1")
    gens = [Permutation.from_cycles(n, tuple(range(n)))]
    if n > 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    return GeneratedGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> GeneratedGroup:
    if n < 3:
        return GeneratedGroup(n, [], name=f"A{n}")
    gens = [Permutation.from_cycles(n, (i, i + 1, i + 2)) for i in range(n - 2)]
    return GeneratedGroup(n, gens, name=f"A{n}")


# ---------------------------------------------------------------------------
# coset actions


class CosetSpace:
    """Right cosets ``h x`` of ``h`` in ``g``, with ``g`` acting by right multiplication.

    A coset is keyed by its canonical element: at each level of ``h``'s chain
    the representative is moved so the base point lands on the smallest
    possible image.
    """

    def __init__(self, g: GeneratedGroup, h: GeneratedGroup, bound: int = DEFAULT_COSET_BOUND):
        if g.degree != h.degree:
            raise DegreeMismatch(f"degrees {g.degree} and {h.degree}")
        if not h.is_subgroup_of(g):
            raise NotASubgroup("h is not contained in g")
        index = g.order() // h.order()
        if index > bound:
            raise BoundExceeded(f"index {index} exceeds coset bound {bound}")
        self.g = g
        self.h = h
        self.index = index
        self._levels = h.chain.levels
        start = self.canonical(tuple(range(g.degree)))
        self.representatives: list[tuple] = [start]
        self._position = {start: 0}
        gens = [s.images for s in g.generators]
        for rep in self.representatives:
            for s in gens:
                c = self.canonical(_mul(rep, s))
                if c not in self._position:
                    self._position[c] = len(self.representatives)
                    self.representatives.append(c)
        assert len(self.representatives) == index

    def canonical(self, x: tuple) -> tuple:
        for lv in self._levels:
            best = min(lv.transversal, key=lambda pt: x[pt])
            x = _mul(lv.transversal[best], x)
        return x

    def act(self, p: Permutation) -> Permutation:
        """Image of ``p`` (an element of ``g``) in the coset action."""
        imgs = p.images
        return Permutation._raw(
            tuple(self._position[self.canonical(_mul(rep, imgs))] for rep in self.representatives)
        )

    def image(self, k: GeneratedGroup | None = None) -> GeneratedGroup:
        k = self.g if k is None else k
        return GeneratedGroup(self.index, [self.act(s) for s in k.generators])


def coset_action(g: GeneratedGroup, h: GeneratedGroup, bound: int = DEFAULT_COSET_BOUND) -> GeneratedGroup:
    """Permutation group induced by ``g`` on the right cosets of ``h``."""
    return CosetSpace(g, h, bound).image()


def elements_count(g: GeneratedGroup, bound: int = DEFAULT_ENUM_BOUND) -> int:
    return sum(1 for _ in g.elements(bound))


def brute_force_closure(degree: int, generators: Sequence[Permutation], bound: int) -> set[tuple]:
    """Element set by naive closure; independent of the stabilizer chain."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [g.images for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _mul(x, s)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > bound:
                        raise BoundExceeded(f"closure exceeds {bound} elements")
                    nxt.append(y)
        frontier = nxt
    return seen


__all__ = [
    "BoundExceeded",
    "CosetSpace",
    "DegreeMismatch",
    "GeneratedGroup",
    "NotASubgroup",
    "Permutation",
    "StabilizerChain",
    "alternating_group",
    "brute_force_closure",
    "build_chain",
    "compose",
    "contains",
    "coset_action",
    "elements",
    "is_transitive",
    "orbit",
    "order",
    "point_stabilizer",
    "subgroup_from_elements",
    "symmetric_group",
]
