"""Derangements of transitive actions, and writing elements of A_n as products of two derangements."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .class_products import PermGroup, perm_group
from .errors import SearchExhausted, SizeGuardExceeded
from .perm import (AN, SN, Permutation, compose, conjugator,
                   cycles, group_order, inverse, is_derangement, is_even)

NATURAL = "natural"
K_SUBSETS = "k_subsets"
EXPLICIT = "explicit_images"


class GroupAction:
    """A transitive action of an enumerated group on points 0..points-1."""

    def __init__(self, group: PermGroup, points: int, image: Callable[[Permutation], tuple],
                 kind: str = EXPLICIT, check: bool = True):
        self.group = group
        self.points = points
        self.image = image
        self.kind = kind
        if check and not self.is_transitive():
            raise ValueError("action is not transitive")

    def act(self, g, p: int) -> int:
        return self.image(g)[p]

    def is_transitive(self) -> bool:
        if self.points == 1:
            return True
        seen = {0}
        frontier = [0]
        gens = self._generators()
        while frontier:
            p = frontier.pop()
            for g in gens:
                q = self.act(g, p)
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        return len(seen) == self.points

    def _generators(self) -> list[Permutation]:
        n = self.group.n
        if n < 3:
            return list(self.group.elements)
        if self.group.kind == SN:
            return [Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))])]
        # A_n is generated by the 3-cycles (0 1 i)
        return [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]

    def is_derangement(self, g) -> bool:
        return all(i != x for i, x in enumerate(self.image(g)))

    @classmethod
    def natural(cls, n: int, kind: str = AN) -> "GroupAction":
        return cls(perm_group(n, kind), n, lambda g: g, NATURAL, check=False)

    @classmethod
    def k_subsets(cls, n: int, k: int, kind: str = AN) -> "GroupAction":
        subsets = list(itertools.combinations(range(n), k))
        index = {s: i for i, s in enumerate(subsets)}

        def image(g):
            return tuple(index[tuple(sorted(g[x] for x in s))] for s in subsets)

        act = cls(perm_group(n, kind), len(subsets), image, K_SUBSETS)
        act.subsets = subsets
        return act


@dataclass
class DerangementReport:
    count: int
    proportion: Fraction
    witness_classes: list[str]
    elements: list[Permutation] = field(default_factory=list, repr=False)


def derangements(action: GroupAction, keep: bool = False) -> DerangementReport:
    """Count elements fixing no point, and check the status is constant on classes."""
    g = action.group
    status: dict[int, bool] = {}
    elems = []
    for x in g.elements:
        d = action.is_derangement(x)
        c = g.class_of(x)
        if status.setdefault(c, d) != d:
            raise AssertionError(f"derangement status is not a class function (class {c})")
        if d:
            elems.append(x)
    labels = [g.classes[c].label for c in sorted(status) if status[c]]
    return DerangementReport(len(elems), Fraction(len(elems), g.order), labels,
                             elems if keep else [])


def an_stabilizer_size(n: int, r: int) -> int:
    """|A_n intersected with the pointwise stabilizer of r points|."""
    if r >= n - 1:
        return 1
    return math.factorial(n - r) // 2


def an_derangement_count(n: int) -> int:
    """Inclusion-exclusion over pointwise stabilizers."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return sum((-1) ** r * math.comb(n, r) * an_stabilizer_size(n, r) for r in range(n + 1))


@dataclass
class BonferroniReport:
    n: int
    count: int
    partial_sums: list[Fraction]
    between: list[bool]

    @property
    def passed(self) -> bool:
        return all(self.between)


def bonferroni_betweenness(n: int) -> BonferroniReport:
    """Check the count lies between consecutive partial sums of sum_r (-1)^r n!/(2 r!).

    The series terms are exact only for r <= n-2, so the pairs checked are
    (S_R, S_{R+1}) with R+1 <= n-2.
    """
    count = an_derangement_count(n)
    fact = math.factorial(n)
    sums = []
    acc = Fraction(0)
    for r in range(n - 1):
        acc += Fraction((-1) ** r * fact, 2 * math.factorial(r))
        sums.append(acc)
    between = [min(a, b) <= count <= max(a, b) for a, b in zip(sums, sums[1:])]
    return BonferroniReport(n, count, sums, between)


def natural_derangements(n: int, kind: str = AN) -> list[Permutation]:
    return [g for g in perm_group(n, kind).elements if is_derangement(g)]


def three_cycle_representation_ratio(n: int, guard: int = 2 * 10**6) -> Fraction:
    """#{(d1, d2) in D x D : d1 d2 = (0 1 2)} * |A_n| / |D|^2."""
    if group_order(n, AN) > guard:
        raise SizeGuardExceeded(f"A_{n} above guard {guard}")
    d = natural_derangements(n)
    g = Permutation.from_cycles(n, [(0, 1, 2)])
    hits = sum(1 for x in d if is_derangement(compose(inverse(x), g)))
    return Fraction(hits * group_order(n, AN), len(d) ** 2)


# -- l-cycles ---------------------------------------------------------------------

def ell_set(n: int) -> set[int]:
    """Odd l with floor(3n/4) <= l <= n."""
    if n < 5:
        raise ValueError("n must be >= 5")
    return {l for l in range(3 * n // 4, n + 1) if l % 2}


def is_ell_cycle(g: Sequence[int], ell: int) -> bool:
    c = cycles(g, include_fixed=False)
    return len(c) == 1 and len(c[0]) == ell if ell > 1 else not c


def derangement_ell_criterion(action: GroupAction) -> int | None:
    """Largest l in L_n such that no l-cycle fixes point 0, or None."""
    g = action.group
    if g.kind != AN:
        raise ValueError("criterion is stated for A_n")
    in_stab = set()
    for x in g.elements:
        if action.act(x, 0) == 0:
            c = cycles(x, include_fixed=False)
            if len(c) == 1:
                in_stab.add(len(c[0]))
    free = [l for l in ell_set(g.n) if l not in in_stab]
    return max(free) if free else None


def random_ell_cycle(m: int, ell: int, rng: random.Random) -> Permutation:
    pts = rng.sample(range(m), ell)
    return Permutation.from_cycles(m, [pts]) if ell > 1 else Permutation.identity(m)


def _all_ell_cycles(m: int, ell: int):
    for support in itertools.combinations(range(m), ell):
        first, rest = support[0], support[1:]
        for order in itertools.permutations(rest):
            yield Permutation.from_cycles(m, [(first,) + order])


def two_ell_cycle_factorization(g: Sequence[int], ell: int, rng: random.Random | None = None,
                                tries: int | None = None,
                                guard: int = 10**6) -> tuple[Permutation, Permutation]:
    """l-cycles x1, x2 in S_m with x1 x2 = g, for even g and floor(3m/4) <= l <= m."""
    g = Permutation(g)
    m = len(g)
    if not 3 * m // 4 <= ell <= m or ell < 1:
        raise ValueError(f"l = {ell} outside [floor(3m/4), m] for m = {m}")
    if not is_even(g):
        raise ValueError("g must be even")
    rng = rng or random.Random(0)
    tries = tries if tries is not None else 50 * m + 200
    for _ in range(tries):
        x1 = random_ell_cycle(m, ell, rng)
        x2 = compose(inverse(x1), g)
        if is_ell_cycle(x2, ell):
            return x1, x2
    total = math.comb(m, ell) * math.factorial(ell - 1)
    if total > guard:
        raise SearchExhausted(f"no factorization after {tries} samples; {total} cycles above guard")
    for x1 in _all_ell_cycles(m, ell):
        x2 = compose(inverse(x1), g)
        if is_ell_cycle(x2, ell):
            return x1, x2
    raise SearchExhausted(f"{g} is not a product of two {ell}-cycles")


# -- two-derangement decomposition --------------------------------------------------

def _restrict(g: Sequence[int], points: Sequence[int]) -> Permutation:
    """g on an invariant set of points, relabelled 0..len-1 in the given order."""
    local = {p: i for i, p in enumerate(points)}
    return Permutation._trusted(tuple(local[g[p]] for p in points))


def _embed(n: int, parts: Sequence[tuple[Sequence[int], Sequence[int]]]) -> Permutation:
    """Glue local permutations (points, perm) with disjoint supports; identity elsewhere."""
    img = list(range(n))
    for points, perm in parts:
        for i, p in enumerate(points):
            img[p] = points[perm[i]]
    return Permutation._trusted(tuple(img))


def _random_even_derangement(n: int, rng: random.Random) -> Permutation:
    pts = list(range(n))
    while True:
        rng.shuffle(pts)
        p = Permutation._trusted(tuple(pts))
        if is_derangement(p) and is_even(p):
            return p


def _search(g: Permutation, rng: random.Random, trace: list[str], tries: int = 4000):
    n = len(g)
    for _ in range(tries):
        d1 = _random_even_derangement(n, rng)
        d2 = compose(inverse(d1), g)
        if is_derangement(d2):
            return d1, d2
    trace.append("fallback")
    return _exhaustive(g)


def _exhaustive(g: Permutation, guard: int = 2 * 10**6):
    n = len(g)
    if group_order(n, AN) > guard:
        raise SearchExhausted(f"exhaustive search over A_{n} above guard")
    for d1 in perm_group(n, AN).elements:
        if is_derangement(d1):
            d2 = compose(inverse(d1), g)
            if is_derangement(d2):
                return d1, d2
    raise SearchExhausted(f"{g} is not a product of two derangements")


def _with_standard_form(g: Permutation, g0: Permutation, h: Permutation):
    """Given g conjugate to g0 and g0 = (g0 h) h^-1, transport the factorization to g."""
    x = conjugator(g0, g)
    return (compose(g0, h).conjugate(x), inverse(h).conjugate(x))


def _b4_two_cycle(n: int) -> tuple[Permutation, Permutation]:
    # 1-based: g = (1..n-2)(n-1,n), h = (1,2,..,n-3,n-1)(n-2,n)
    g0 = Permutation.from_cycles(n, [tuple(range(n - 2)), (n - 2, n - 1)])
    h = Permutation.from_cycles(n, [tuple(range(n - 3)) + (n - 2,), (n - 3, n - 1)])
    return g0, h


def _b4_long_cycle(n: int) -> tuple[Permutation, Permutation]:
    # 1-based: g = (1..n-1), h = (1,n-3)(2,3,..,n-4,n-2,n-1,n)
    g0 = Permutation.from_cycles(n, [tuple(range(n - 1))])
    h = Permutation.from_cycles(n, [(0, n - 4), tuple(range(1, n - 4)) + (n - 3, n - 2, n - 1)])
    return g0, h


def _decompose(g: Permutation, rng: random.Random, trace: list[str]):
    n = len(g)
    if n % 2:
        trace.append(f"odd:{n}")
        return two_ell_cycle_factorization(g, n, rng)
    if n <= 10:
        trace.append(f"search:{n}")
        return _search(g, rng, trace)

    cyc = cycles(g)
    fixed = [c[0] for c in cyc if len(c) == 1]
    if len(fixed) >= 2:
        # (b1): two (n-2)-cycles on the complement, each times (i j)
        trace.append("b1")
        i, j = fixed[0], fixed[1]
        rest = [p for p in range(n) if p not in (i, j)]
        x1, x2 = two_ell_cycle_factorization(_restrict(g, rest), n - 2, rng)
        swap = ((i, j), (1, 0))
        return _embed(n, [(rest, x1), swap]), _embed(n, [(rest, x2), swap])

    odd = [c for c in cyc if len(c) % 2 and 5 <= len(c) <= n - 5]
    if odd:
        trace.append(f"b2:{len(odd[0])}")
        return _split(g, list(odd[0]), rng, trace)

    three = [c for c in cyc if len(c) == 3]
    if three:
        # g = (a b c) h: ((a c b) h1) ((a c b) h2)
        trace.append("b2:3")
        a, b, c = three[0]
        rest = [p for p in range(n) if p not in (a, b, c)]
        h1, h2 = _decompose(_restrict(g, rest), rng, trace)
        inv3 = ((a, b, c), (2, 0, 1))
        return _embed(n, [inv3, (rest, h1)]), _embed(n, [inv3, (rest, h2)])

    even = sorted((c for c in cyc if len(c) % 2 == 0), key=len)
    for t1, t2 in itertools.combinations(even, 2):
        if 6 <= len(t1) + len(t2) <= n - 6:
            trace.append(f"b3:{len(t1)}+{len(t2)}")
            return _split(g, list(t1) + list(t2), rng, trace)
    twos = [c for c in even if len(c) == 2]
    if len(twos) >= 2:
        # g = (a b)(c d) h: ((a c)(b d) h1) ((a d)(b c) h2)
        trace.append("b3:2+2")
        (a, b), (c, d) = twos[0], twos[1]
        quad = [a, b, c, d]
        rest = [p for p in range(n) if p not in quad]
        h1, h2 = _decompose(_restrict(g, rest), rng, trace)
        return (_embed(n, [(quad, (2, 3, 0, 1)), (rest, h1)]),
                _embed(n, [(quad, (3, 2, 1, 0)), (rest, h2)]))

    lengths = sorted(len(c) for c in cyc)
    if len(lengths) == 2 and lengths[0] % 2 == 0 and 4 <= lengths[0] <= n - 4:
        trace.append("b4:square")
        return compose(g, g), inverse(g)
    if lengths == [2, n - 2]:
        trace.append("b4:2")
        return _with_standard_form(g, *_b4_two_cycle(n))
    if lengths == [1, n - 1]:
        trace.append("b4:n-1")
        return _with_standard_form(g, *_b4_long_cycle(n))
    raise AssertionError(f"case tree does not cover cycle type {lengths}")


def _split(g: Permutation, block: list[int], rng, trace):
    """(b2): decompose on an invariant block and its complement separately."""
    n = len(g)
    rest = [p for p in range(n) if p not in set(block)]
    y1, z1 = _decompose(_restrict(g, block), rng, trace)
    y2, z2 = _decompose(_restrict(g, rest), rng, trace)
    return _embed(n, [(block, y1), (rest, y2)]), _embed(n, [(block, z1), (rest, z2)])


@dataclass
class Decomposition:
    d1: Permutation
    d2: Permutation
    trace: list[str]

    def __iter__(self):
        return iter((self.d1, self.d2))

    @property
    def used_fallback(self) -> bool:
        return "fallback" in self.trace


def _valid(g, d1, d2) -> bool:
    return (compose(d1, d2) == g and is_derangement(d1) and is_derangement(d2)
            and is_even(d1) and is_even(d2))


def two_derangement_decompose(g: Sequence[int], n: int | None = None,
                              rng: random.Random | None = None) -> Decomposition:
    """Derangements d1, d2 in A_n (natural action) with d1 d2 = g."""
    g = Permutation(g)
    if n is not None and len(g) != n:
        raise ValueError("degree mismatch")
    n = len(g)
    if n < 5 or not is_even(g):
        raise ValueError("need g in A_n with n >= 5")
    rng = rng or random.Random(0)
    trace: list[str] = []
    d1, d2 = _decompose(g, rng, trace)
    if not _valid(g, d1, d2):
        trace.append("fallback")
        d1, d2 = _exhaustive(g)
    return Decomposition(d1, d2, trace)


@dataclass
class DSquaredReport:
    order: int
    derangements: int
    gaps: list[Permutation]

    @property
    def passed(self) -> bool:
        return not self.gaps


def verify_d_squared(action: GroupAction, all_elements: bool = False) -> DSquaredReport:
    """For every g, look for d in D with d^-1 g in D.

    D is closed under conjugation, so D^2 is a union of classes and one
    representative per class settles it; ``all_elements`` scans the whole group.
    """
    rep = derangements(action, keep=True)
    d = rep.elements
    dset = set(d)
    inv = [inverse(x) for x in d]
    G = action.group
    targets = G.elements if all_elements else [G.representative(i) for i in range(len(G.classes))]
    gaps = []
    for g in targets:
        if not any(compose(xi, g) in dset for xi in inv):
            gaps.append(g)
    return DSquaredReport(G.order, len(d), gaps)
