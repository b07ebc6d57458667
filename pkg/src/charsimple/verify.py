"""Scenario engine: each scenario checks one statement and records evidence rows.

A row compares a computed value with an independently obtained expected value.
The verdict is derived from the rows, so a report can never claim ``pass``
with a mismatched row.
"""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import arith, catalog
from .catalog import CatalogError
from .perm import (
    DEFAULT_COSET_BOUND,
    DEFAULT_ENUM_BOUND,
    BoundExceeded,
    CosetSpace,
    GeneratedGroup,
    Permutation,
)
from .products import (
    ProductGroup,
    StripSpec,
    are_conjugate_subgroups,
    direct_product,
    intersection,
    is_factorization,
    join,
    make_strip,
    projection,
)
from .wreath import (
    WreathElement,
    WreathGroup,
    base_intersection,
    base_subgroup,
    components,
    is_in_base,
    top_element,
    top_projection,
)

DEFAULT_SEED = 20190101

# provenance vocabulary for evidence rows
PUBLISHED = "published"  # value stated in the source literature
DERIVED = "derived"  # obtained by an independent computation or by hand
DEFINITION = "definition"  # holds by construction


@dataclass
class VerifyConfig:
    enum_bound: int = DEFAULT_ENUM_BOUND
    coset_bound: int = DEFAULT_COSET_BOUND
    max_wreath_r: int = 6
    seed: int = DEFAULT_SEED
    data_dir: str | None = None
    p_max: int = 2000
    n_max: int = 2000
    q_max: int = 10**4
    include_ex4: bool = False

    def __post_init__(self):
        for name in ("enum_bound", "coset_bound", "max_wreath_r", "p_max", "n_max", "q_max"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Permutation):
        return list(value.images)
    return value


@dataclass(frozen=True)
class Evidence:
    claim: str
    computed: object
    expected: object
    provenance: str

    @property
    def holds(self) -> bool:
        return self.computed == self.expected

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "computed": _jsonable(self.computed),
            "expected": _jsonable(self.expected),
            "provenance": self.provenance,
        }


@dataclass
class Report:
    scenario: str
    paper_ref: str
    evidence: list[Evidence] = field(default_factory=list)
    seed: int | None = None
    millis: int = 0
    error: str | None = None
    error_kind: str | None = None  # "bound" or "load"

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "error"
        if self.evidence and all(e.holds for e in self.evidence):
            return "pass"
        return "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        out = {
            "scenario": self.scenario,
            "verdict": self.verdict,
            "paper_ref": self.paper_ref,
            "evidence": [e.to_json() for e in self.evidence],
            "millis": self.millis,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.error is not None:
            out["error"] = self.error
        return out


class Context:
    """Per-run state handed to a scenario: config, catalog access, evidence sink."""

    def __init__(self, report: Report, config: VerifyConfig):
        self.report = report
        self.config = config
        self._groups: dict[str, GeneratedGroup] = {}

    def load(self, name: str) -> GeneratedGroup:
        if name not in self._groups:
            self._groups[name] = catalog.load(name, self.config.data_dir)
        return self._groups[name]

    def check(self, claim: str, computed, expected, provenance: str = DERIVED) -> bool:
        row = Evidence(claim, computed, expected, provenance)
        self.report.evidence.append(row)
        return row.holds

    def rng(self) -> random.Random:
        self.report.seed = self.config.seed
        return random.Random(self.config.seed)

    def wreath(self, m: int, r: int, gens, name=None) -> WreathGroup:
        if r > self.config.max_wreath_r:
            raise BoundExceeded(f"wreath with r={r} exceeds max_wreath_r={self.config.max_wreath_r}")
        return WreathGroup(m, r, gens, name=name)


@dataclass(frozen=True)
class Scenario:
    id: str
    statement: str
    procedure: Callable[[Context], None]
    default: bool = True


SCENARIOS: dict[str, Scenario] = {}


def scenario(id: str, statement: str, default: bool = True):
    def register(fn):
        SCENARIOS[id] = Scenario(id, statement, fn, default)
        return fn

    return register


def _diagonal(s: ProductGroup, indices=None, maps=None) -> GeneratedGroup:
    indices = tuple(range(s.r)) if indices is None else tuple(indices)
    if maps is None:
        maps = tuple(Permutation.identity(s.factors[indices[0]].degree) for _ in indices[1:])
    return make_strip(s, StripSpec(indices, tuple(maps)))


def _factor_product(s: ProductGroup, parts) -> GeneratedGroup:
    """Coordinatewise product of subgroups ``parts[i]`` of the factors (``None`` = trivial)."""
    gens = []
    for i, part in enumerate(parts):
        if part is None:
            continue
        for g in part.generators:
            slots = [None] * s.r
            slots[i] = g
            gens.append(s.embed(slots))
    return GeneratedGroup(s.degree, gens)


# ---------------------------------------------------------------------------
# scenarios


@scenario("lemma_prime", "for p, n >= 2: p^n does not divide n!; p^(n-1) | n! forces p = 2 and n a power of 2; 4^(n-1) does not divide n!")
def _lemma_prime(ctx: Context) -> None:
    cfg = ctx.config
    rep = arith.check_lemma_prime(max(cfg.p_max, 2), max(cfg.n_max, 2))
    for clause in (1, 2, 3):
        ctx.check(
            f"violations of clause {clause} over p <= {rep.p_max}, n <= {rep.n_max}",
            sum(1 for v in rep.violations if v[2] == clause),
            0,
            PUBLISHED,
        )
    if cfg.n_max >= 8:
        ctx.check("v_2(8!) (boundary case p^(n-1) | n!, n = 2^3)", arith.legendre_valuation(2, 8), 7, DERIVED)


@scenario("qabt_desk", "a simple group factorized by two copies of one simple group: the prime divisors of all three orders agree")
def _qabt_desk(ctx: Context) -> None:
    bound = ctx.config.enum_bound
    a6 = ctx.load("A6")
    t1, t2 = catalog.two_a5_in_a6(ctx.config.data_dir)
    m12 = ctx.load("M12")
    a, b = catalog.two_m11_in_m12(ctx.config.data_dir)
    rows = [("A6", a6, t1, t2, 60, 10, PUBLISHED), ("M12", m12, a, b, 7920, 660, PUBLISHED)]
    for label, q, x, y, t_order, meet, prov in rows:
        ctx.check(f"{label}: orders of the two factors", (x.order(), y.order()), (t_order, t_order), prov)
        ctx.check(f"{label}: |A ∩ B|", intersection(x, y, bound).order(), meet, prov if label == "M12" else DERIVED)
        ctx.check(f"{label} = A B", is_factorization(q, x, y, bound), True, prov)
        pq, pa, pb = (arith.prime_divisor_set(g.order()) for g in (q, x, y))
        ctx.check(f"{label}: p(Q) = p(A) = p(B)", pq == pa == pb, True, DERIVED)
        ctx.check(f"{label}: p(Q)", pq, arith.prime_divisor_set(q.order()), DERIVED)
    # same-class pairs do not factorize
    ctx.check("A6: two point stabilizers do not factorize A6", is_factorization(a6, t1, a6.point_stabilizer(1), bound), False, DERIVED)
    shift = Permutation.from_cycles(6, (0, 1, 2))
    ctx.check("A6: two transitive A5 copies do not factorize A6", is_factorization(a6, t2, t2.conjugate(shift), bound), False, DERIVED)
    ctx.check("M12: two point stabilizers do not factorize M12", is_factorization(m12, a, m12.point_stabilizer(0), bound), False, DERIVED)


@scenario("hab_desk", "a product of two simple groups times a full diagonal covers Q^2 exactly when the factors factorize Q after twisting")
def _hab_desk(ctx: Context) -> None:
    bound = ctx.config.enum_bound
    a6 = ctx.load("A6")
    t1, t2 = catalog.two_a5_in_a6(ctx.config.data_dir)
    s = direct_product([a6, a6], simple=True)
    h = _factor_product(s, [t1, t2])
    for i in range(2):
        k = projection(s, i, h).order()
        ctx.check(f"1 < |H π_{i}| < |Q_{i}|", 1 < k < 360, True, DEFINITION)
    for label, c in [("identity", Permutation.identity(6)), ("conjugation by (0 1)", Permutation.from_cycles(6, (0, 1)))]:
        d = _diagonal(s, maps=[c])
        dh = is_factorization(s.group, d, h, bound)
        ctx.check(f"D H = Q^2 with α = {label}", dh, True, PUBLISHED)
        ctx.check(f"Q_1 = T_1 (T_2 α^-1) with α = {label}", is_factorization(a6, t1, t2.conjugate(~c), bound), True, PUBLISHED)
    embedded = [s.embedded_factor(i) for i in range(2)]
    ctx.check("|H ∩ Q_1|, |H ∩ Q_2|", tuple(intersection(h, e, bound).order() for e in embedded), (60, 60), DERIVED)
    ctx.check("|H| = |H ∩ Q_1| |H ∩ Q_2|", h.order(), 3600, DERIVED)
    # both factors from one class: neither side factorizes
    h_bad = _factor_product(s, [t1, t1])
    ctx.check("D (T_1 x T_1) = Q^2", is_factorization(s.group, _diagonal(s), h_bad, bound), False, DERIVED)
    ctx.check("Q_1 = T_1 T_1", is_factorization(a6, t1, t1, bound), False, DERIVED)


def _strip_layouts(r: int) -> list[tuple[tuple[int, ...], ...]]:
    """Families of pairwise disjoint supports, each of size at least two."""
    subsets = [c for k in range(2, r + 1) for c in combinations(range(r), k)]
    layouts = []
    for k in range(1, r // 2 + 1):
        for fam in combinations(subsets, k):
            flat = [i for blk in fam for i in blk]
            if len(flat) == len(set(flat)):
                layouts.append(fam)
    return layouts


def _strip_product(s: ProductGroup, layout, maps) -> GeneratedGroup:
    strips = [make_strip(s, StripSpec(blk, tuple(m))) for blk, m in zip(layout, maps)]
    return join(s.degree, strips)


def _relabelings(layout, auts, rng: random.Random, sampled: int):
    slots = sum(len(b) - 1 for b in layout)
    ident = auts[0]
    if all(len(b) == 2 for b in layout):
        combos = itertools.product(auts, repeat=slots)
    else:
        combos = itertools.chain(
            [(ident,) * slots],
            (tuple(rng.choice(auts) for _ in range(slots)) for _ in range(sampled)),
        )
    for combo in combos:
        it = iter(combo)
        yield [[next(it) for _ in range(len(b) - 1)] for b in layout]


def uniform2_pairs(ctx: Context, r: int, sampled: int = 200):
    """Yield ``(S, X, Y, layouts)`` over all pairs of strip layouts in A5^r.

    X carries identity relabelings, which loses nothing: conjugating by a
    coordinatewise automorphism normalizes X and maps Y to another admissible
    subgroup.  Y runs over every automorphism of A5 when all its supports
    have size two, and over a seeded sample plus the identity otherwise.
    """
    auts = sorted(ctx.load("S5").elements(ctx.config.enum_bound), key=lambda p: not p.is_identity())
    rng = ctx.rng()
    s = direct_product([ctx.load("A5")] * r, simple=True)
    layouts = _strip_layouts(r)
    for xl in layouts:
        x = _strip_product(s, xl, [[auts[0]] * (len(b) - 1) for b in xl])
        for yl in layouts:
            for maps in _relabelings(yl, auts, rng, sampled):
                yield s, x, _strip_product(s, yl, maps), (xl, yl)


@scenario("uniform2_desk", "two direct products of disjoint nontrivial full strips never multiply to T^r")
def _uniform2_desk(ctx: Context) -> None:
    bound = ctx.config.enum_bound
    for r in (2, 3):
        checked = 0
        covering = 0
        largest = Fraction(0)
        t_r = 60**r
        for s, x, y, _ in uniform2_pairs(ctx, r):
            size = x.order() * y.order() // intersection(x, y, bound).order()
            checked += 1
            covering += size == t_r
            largest = max(largest, Fraction(size, t_r))
        ctx.check(f"r={r}: pairs (X, Y) with X Y = T^r", covering, 0, PUBLISHED)
        ctx.check(f"r={r}: max |X||Y|/|X ∩ Y| / |T^r| < 1", largest < 1, True, PUBLISHED)
        ctx.check(f"r={r}: pairs examined > 0", checked > 0, True, DEFINITION)


def m12_lemma_groups(ctx: Context):
    """Concrete instance of the M12^4 configuration with every hypothesis on the factors met.

    A1 is a point stabilizer, A2 a transitive M11, psi is conjugation by an
    element g of M12 (so A3 = A2^g), and A4 is another point stabilizer.
    """
    m12 = ctx.load("M12")
    a1, a2 = catalog.two_m11_in_m12(ctx.config.data_dir)
    g = m12.generators[0]  # x -> x + 1 on the projective line
    t = m12.generators[1]  # x -> -1/x, moves infinity to 0
    a3 = a2.conjugate(g)
    a4 = a1.conjugate(t)
    return m12, (a1, a2, a3, a4), g


@scenario("m12_lemma", "in M12^4, X = {(p,p,q,q)} and Y = A1 x {(a, a^psi)} x A4 with every A_i = M11 never give XY = S")
def _m12_lemma(ctx: Context) -> None:
    bound = ctx.config.enum_bound
    m12, (a1, a2, a3, a4), g = m12_lemma_groups(ctx)
    q = m12.order()
    s = direct_product([m12] * 4, simple=True)
    ident = Permutation.identity(12)
    x = join(s.degree, [_diagonal(s, (0, 1), [ident]), _diagonal(s, (2, 3), [ident])])
    y = join(
        s.degree,
        [
            make_strip(s, StripSpec((0,)), source=a1),
            make_strip(s, StripSpec((1, 2), (g,)), source=a2),
            make_strip(s, StripSpec((3,)), source=a4),
        ],
    )
    ctx.check("|X| = |M12|^2", x.order(), q**2, DEFINITION)
    ctx.check("|Y| = |M11|^3", y.order(), 7920**3, DEFINITION)
    ctx.check("A_2 ψ = A_3", all(a3.contains(gen**g) for gen in a2.generators) and a3.order() == 7920, True, DEFINITION)

    # projections of S = XY onto the first and last pair of coordinates
    s2 = direct_product([m12] * 2, simple=True)
    d = _diagonal(s2, (0, 1), [ident])
    ctx.check("Q^2 = D_1 (A_1 x A_2)", is_factorization(s2.group, d, _factor_product(s2, [a1, a2]), bound), True, DERIVED)
    ctx.check("Q^2 = D_2 (A_3 x A_4)", is_factorization(s2.group, d, _factor_product(s2, [a3, a4]), bound), True, DERIVED)
    ctx.check("Q = A_1 A_2", is_factorization(m12, a1, a2, bound), True, PUBLISHED)
    ctx.check("Q = A_3 A_4", is_factorization(m12, a3, a4, bound), True, PUBLISHED)

    c1 = intersection(a1, a2, bound)
    c2 = intersection(a3, a4, bound).conjugate(~g)
    ctx.check("|A_1 ∩ A_2| = |C_1|", c1.order(), 660, PUBLISHED)
    ctx.check("|(A_3 ∩ A_4) ψ^-1| = |C_2|", c2.order(), 660, PUBLISHED)
    ctx.check("|M11|^2 / |M12|", Fraction(7920**2, q), 660, PUBLISHED)
    ctx.check("C_1, C_2 ≤ A_2", c1.is_subgroup_of(a2) and c2.is_subgroup_of(a2), True, DEFINITION)
    c12 = intersection(c1, c2, bound)

    # X ∩ Y lies in {(c, c, c^g, c^g) : c ∈ C_1}; test each candidate by sifting in degree 48
    meet = 0
    for c in c1.elements(bound):
        cand = s.embed([c, c, c**g, c**g])
        if x.contains(cand) and y.contains(cand):
            meet += 1
    ctx.check("|X ∩ Y| = |C_1 ∩ C_2|", meet, c12.order(), DERIVED)
    forced = Fraction(x.order() * y.order(), q**4)
    ctx.check("|X||Y|/|S|, the value |X ∩ Y| would need if S = XY", forced, 55, PUBLISHED)
    ctx.check("|X ∩ Y| equals that forced value", meet == forced, False, DERIVED)
    ctx.check("|X||Y|/|X ∩ Y| = |S|", Fraction(x.order() * y.order(), meet) == q**4, False, PUBLISHED)
    ctx.check("|C_1 C_2| = |A_2| (= 7920)", 660 * 660 // c12.order() == 7920, False, DERIVED)
    conj = are_conjugate_subgroups(a2, c1, c2, bound)
    ctx.check("C_1 and C_2 conjugate in A_2", conj is not None, True, PUBLISHED)
    if conj is not None:
        ctx.check("conjugator lies in A_2", a2.contains(conj), True, DEFINITION)


def curated_wreaths(ctx: Context) -> list[tuple[str, WreathGroup, bool]]:
    """Transitive subgroups of product-action wreaths; the flag marks characteristically simple ones."""
    a5 = ctx.load("A5")
    a6 = ctx.load("A6")
    a5t = ctx.load("A5_in_A6_transitive")
    agl = ctx.load("AGL32")
    slt = ctx.load("SL32_transitive")
    odd5 = Permutation.from_cycles(5, (0, 1))
    odd6 = Permutation.from_cycles(6, (0, 1))
    swap = Permutation.from_cycles(2, (0, 1))

    def with_tops(base: WreathGroup, tops, name, twist=None):
        gens = list(base.generators)
        for t in tops:
            e = top_element(base.m, t)
            if twist is not None:
                e = WreathElement.base(twist) * e
            gens.append(e)
        return ctx.wreath(base.m, base.r, gens, name=name)

    def base(factors, name):
        grp = base_subgroup(factors, name=name)
        return ctx.wreath(grp.m, grp.r, grp.generators, name=name)

    out = [
        ("A5^2 in A5 wr S2", base([a5, a5], "A5^2"), True),
        ("A5 x A5^(0 1) in A5 wr S2", base([a5, a5.conjugate(odd5)], "A5xA5'"), True),
        ("A6^2 in A6 wr S2", base([a6, a6], "A6^2"), True),
        ("transitive A5^2 in A6 wr S2", base([a5t, a5t], "A5t^2"), True),
        ("A5t x A5t^(0 1) in A6 wr S2", base([a5t, a5t.conjugate(odd6)], "A5t x A5t'"), True),
        ("SL(3,2)^2 in AGL(3,2) wr S2", base([slt, slt], "SL32t^2"), True),
        ("A5^3 in A5 wr S3", base([a5, a5, a5], "A5^3"), True),
    ]
    out += [
        ("A5 wr S2", with_tops(base([a5, a5], "A5^2"), [swap], "A5wrS2"), False),
        ("A5t^2 with twisted swap", with_tops(base([a5t, a5t], "A5t^2"), [swap], "A5t^2.2", twist=[odd6, odd6]), False),
        ("AGL(3,2) wr S2", with_tops(base([agl, agl], "AGL^2"), [swap], "AGLwrS2"), False),
        ("A5 wr C3", with_tops(base([a5] * 3, "A5^3"), [Permutation.from_cycles(3, (0, 1, 2))], "A5wrC3"), False),
        ("A5^3 with one coordinate swap", with_tops(base([a5] * 3, "A5^3"), [Permutation.from_cycles(3, (0, 1))], "A5^3.2"), False),
    ]
    return out


@scenario("imbase_curated", "a transitive nonabelian characteristically simple subgroup of Sym(m) wr S_r lies in the base group")
def _imbase_curated(ctx: Context) -> None:
    for label, x, char_simple in curated_wreaths(ctx):
        if not char_simple:
            continue
        ctx.check(f"{label}: transitive on {x.degree} points", x.is_transitive(), True, DEFINITION)
        ctx.check(f"{label}: inside the base group", is_in_base(x), True, PUBLISHED)
        ctx.check(f"{label}: |H ∩ B| = |H|", base_intersection(x).order(), x.order(), DERIVED)


@scenario("components_property", "every component of a transitive subgroup of a product-action wreath is transitive")
def _components_property(ctx: Context) -> None:
    for label, x, _ in curated_wreaths(ctx):
        ctx.check(f"{label}: transitive", x.is_transitive(), True, DEFINITION)
        top = top_projection(x)
        kernel = base_intersection(x)
        ctx.check(f"{label}: |x| = |x ∩ B| |top|", x.order(), kernel.order() * top.order(), DERIVED)
        ctx.check(f"{label}: every component transitive", all(c.is_transitive() for c in components(x)), True, PUBLISHED)
        if top.is_transitive():
            ctx.check(
                f"{label}: every component of x ∩ B transitive",
                all(c.is_transitive() for c in components(kernel)),
                True,
                PUBLISHED,
            )


@scenario("examples_s5", "concrete transitive characteristically simple subgroups for the affine, almost simple, diagonal and product types")
def _examples_s5(ctx: Context) -> None:
    bound = ctx.config.enum_bound
    # affine: SL(3,2) transitive in F_2^3 : SL(3,2), then squared in the product action
    agl, t = catalog.affine_example(ctx.config.data_dir)
    ctx.check("|V : SL(3,2)|", agl.order(), 1344, DERIVED)
    ctx.check("T transitive on 8 points", t.is_transitive(), True, PUBLISHED)
    ctx.check("|T_0|", t.point_stabilizer(0).order(), 21, DERIVED)
    t2 = ctx.wreath(8, 2, base_subgroup([t, t]).generators, name="T^2")
    ctx.check("T^2 transitive on 8^2 points", t2.is_transitive(), True, PUBLISHED)
    ctx.check("|(T^2)_0|", t2.as_permutation_group().point_stabilizer(0).order(), 21**2, DERIVED)

    # almost simple: A5^2 on the cosets of a corefree diagonal
    a5 = ctx.load("A5")
    s = direct_product([a5, a5], simple=True)
    image = CosetSpace(s.group, _diagonal(s), ctx.config.coset_bound).image()
    ctx.check("degree of A5^2 on cosets of the diagonal", image.degree, 60, DERIVED)
    ctx.check("that action is transitive", image.is_transitive(), True, PUBLISHED)
    ctx.check("that action is faithful (diagonal corefree)", image.order(), 3600, DERIVED)
    ctx.check("image lies in Alt(60)", all(g.sign() == 1 for g in image.generators), True, DERIVED)

    # diagonal: T_1 x T_2 on the cosets of the diagonal of A6^2
    a6 = ctx.load("A6")
    t1, t2_ = catalog.two_a5_in_a6(ctx.config.data_dir)
    s6 = direct_product([a6, a6], simple=True)
    space = CosetSpace(s6.group, _diagonal(s6), ctx.config.coset_bound)
    h_img = space.image(_factor_product(s6, [t1, t2_]))
    ctx.check("coset space degree |A6|", space.index, 360, DERIVED)
    ctx.check("T_1 x T_2 transitive on it", h_img.is_transitive(), True, PUBLISHED)
    stab = h_img.point_stabilizer(0).order()
    ctx.check("point stabilizer in T_1 x T_2", stab, intersection(t1, t2_, bound).order(), PUBLISHED)
    ctx.check("T_1 x T_2 not regular", stab != 1, True, PUBLISHED)

    # product: transitive A5 < A6, squared inside A6 wr S2
    a5t = ctx.load("A5_in_A6_transitive")
    ctx.check("A5 < A6 transitive", a5t.is_transitive() and a5t.is_subgroup_of(a6), True, DEFINITION)
    sq = ctx.wreath(6, 2, base_subgroup([a5t, a5t]).generators)
    ctx.check("A5^2 transitive on 36 points", sq.is_transitive(), True, PUBLISHED)
    ctx.check("A5^2 inside the base of A6 wr S2", is_in_base(sq), True, PUBLISHED)


@scenario("sd_degree", "for a full diagonal point stabilizer in Q^r the degree is |Q|^(r-1)")
def _sd_degree(ctx: Context) -> None:
    for name, r in (("A5", 2), ("A6", 2), ("A5", 3)):
        q = ctx.load(name)
        s = direct_product([q] * r, simple=True)
        image = CosetSpace(s.group, _diagonal(s), ctx.config.coset_bound).image()
        ctx.check(f"{name}^{r}: degree on cosets of the diagonal", image.degree, q.order() ** (r - 1), PUBLISHED)
        ctx.check(f"{name}^{r}: transitive", image.is_transitive(), True, DEFINITION)


def omega_ratio(q: int) -> Fraction:
    """``|Ω_7(q)|^3 / |PΩ_8^+(q)|^2`` from the standard order formulas."""
    from math import gcd

    d2, d4 = gcd(2, q - 1), gcd(4, q**4 - 1)
    omega7 = Fraction(q**9 * (q**2 - 1) * (q**4 - 1) * (q**6 - 1), d2)
    pomega8 = Fraction(q**12 * (q**2 - 1) * (q**4 - 1) ** 2 * (q**6 - 1), d4)
    return omega7**3 / pomega8**2


def omega_ratio_closed(q: int) -> Fraction:
    from math import gcd

    return Fraction(q**3 * (q**6 - 1) * gcd(4, q**4 - 1) ** 2, (q**2 + 1) * gcd(2, q - 1) ** 3)


def _is_prime_power(n: int) -> bool:
    ps = arith.prime_divisor_set(n)
    return len(ps) == 1


@scenario("pOmega_arith", "orders rule out a strip configuration: |A5|^3/|A6|^2 = 5/3 and an odd prime of q^2+1 misses q^3(q^6-1)")
def _pomega_arith(ctx: Context) -> None:
    ratio = arith.order_ratio_cubed_over_squared(60, 360)
    ctx.check("|A5|^3 / |A6|^2", ratio, Fraction(5, 3), PUBLISHED)
    ctx.check("that ratio is an integer", ratio.denominator == 1, False, PUBLISHED)
    failures = []
    for q in range(2, ctx.config.q_max + 1):
        try:
            arith.q2plus1_witness(q)
        except arith.WitnessNotFound:
            failures.append(q)
    ctx.check(f"q in [2, {ctx.config.q_max}] without an odd witness prime", failures, [], PUBLISHED)
    for q, p in ((2, 5), (3, 5), (7, 5)):
        if q <= ctx.config.q_max:
            ctx.check(f"witness for q={q}", arith.q2plus1_witness(q), p, DERIVED)
    qs = [q for q in range(2, 257) if _is_prime_power(q)]
    ctx.check("closed form of |Ω_7(q)|^3/|PΩ_8^+(q)|^2 for prime powers q <= 256",
              all(omega_ratio(q) == omega_ratio_closed(q) for q in qs), True, DERIVED)
    ctx.check("that ratio is never an integer", any(omega_ratio(q).denominator == 1 for q in qs), False, PUBLISHED)


@scenario("ex4_wreath", "(T_1 x T_2)^2 inside (A6^2 on 360 points) wr S2 is transitive on 360^2 points", default=False)
def _ex4_wreath(ctx: Context) -> None:
    a6 = ctx.load("A6")
    t1, t2 = catalog.two_a5_in_a6(ctx.config.data_dir)
    s6 = direct_product([a6, a6], simple=True)
    space = CosetSpace(s6.group, _diagonal(s6), ctx.config.coset_bound)
    h = space.image(_factor_product(s6, [t1, t2]))
    if space.index**2 > ctx.config.coset_bound:
        raise BoundExceeded(f"degree {space.index ** 2} exceeds coset bound {ctx.config.coset_bound}")
    x = ctx.wreath(space.index, 2, base_subgroup([h, h]).generators)
    ctx.check("degree", x.degree, 129600, DERIVED)
    ctx.check("H^2 transitive", len(x.as_permutation_group().orbit(0)) == x.degree, True, PUBLISHED)
    ctx.check("H^2 inside the base group", is_in_base(x), True, PUBLISHED)


# ---------------------------------------------------------------------------
# running


def scenario_ids(include_optional: bool = True) -> list[str]:
    return [sid for sid, sc in SCENARIOS.items() if include_optional or sc.default]


def run(scenario_id: str, config: VerifyConfig | None = None) -> Report:
    config = config or VerifyConfig()
    try:
        sc = SCENARIOS[scenario_id]
    except KeyError:
        raise KeyError(f"unknown scenario {scenario_id!r}") from None
    report = Report(sc.id, sc.statement)
    ctx = Context(report, config)
    start = time.perf_counter()
    try:
        sc.procedure(ctx)
    except BoundExceeded as exc:
        report.error, report.error_kind = str(exc), "bound"
    except (CatalogError, OSError) as exc:
        report.error, report.error_kind = str(exc), "load"
    report.millis = int((time.perf_counter() - start) * 1000)
    return report


def run_all(config: VerifyConfig | None = None, ids=None) -> list[Report]:
    config = config or VerifyConfig()
    if ids is None:
        ids = [sid for sid, sc in SCENARIOS.items() if sc.default or (sid == "ex4_wreath" and config.include_ex4)]
    return [run(sid, config) for sid in ids]


def aggregate_passed(reports: list[Report]) -> bool:
    return all(r.passed for r in reports)


__all__ = [
    "Evidence",
    "Report",
    "SCENARIOS",
    "VerifyConfig",
    "aggregate_passed",
    "run",
    "run_all",
    "scenario_ids",
]

