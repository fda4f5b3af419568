"""Counting factorizations over conjugacy classes, and finite checks of product bounds.

Two independent routes are kept side by side: ``frobenius_count`` evaluates the
character sum over an explicit table, ``bruteforce_count`` scans group
elements.  Everything else in this module is built on one of the two.
"""
from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .characters import CharacterTable, character_table
from .errors import InvalidClass, NonIntegerCount, SizeGuardExceeded
from .perm import (DEFAULT_GUARD, SN, Permutation, class_index, compose,
                   conjugacy_classes, group_elements, group_order, inverse)
from .quadratic import QuadNumber, conj


class PermGroup:
    """S_n or A_n as an explicitly enumerated group."""

    def __init__(self, n: int, kind: str = SN, guard: int = DEFAULT_GUARD):
        self.n = n
        self.kind = kind
        self.guard = guard
        self.order = group_order(n, kind)
        self.classes = conjugacy_classes(n, kind)

    def __repr__(self):
        return f"PermGroup({self.n}, {self.kind!r})"

    @property
    def label(self) -> str:
        return f"{self.kind[0]}{self.n}"

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return group_elements(self.n, self.kind, self.guard)

    @cached_property
    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def class_of(self, g: Sequence[int]) -> int:
        return class_index(g, self.kind)

    @cached_property
    def class_members(self) -> list[list[Permutation]]:
        members: list[list[Permutation]] = [[] for _ in self.classes]
        for g in self.elements:
            members[self.class_of(g)].append(g)
        return members

    def representative(self, i: int) -> Permutation:
        return self.classes[i].representative()

    @property
    def table(self) -> CharacterTable:
        return character_table(self.n, self.kind)


@lru_cache(maxsize=None)
def perm_group(n: int, kind: str = SN) -> PermGroup:
    return PermGroup(n, kind)


@dataclass(frozen=True)
class NormalSubset:
    """A union of conjugacy classes of an enumerated group."""

    group: PermGroup
    member_classes: frozenset

    @property
    def size(self) -> int:
        return sum(self.group.classes[i].class_size for i in self.member_classes)

    def __contains__(self, g) -> bool:
        return self.group.class_of(g) in self.member_classes

    def elements(self) -> list[Permutation]:
        return [g for i in sorted(self.member_classes) for g in self.group.class_members[i]]

    @classmethod
    def from_predicate(cls, group: PermGroup, pred) -> "NormalSubset":
        """Classes whose representative satisfies ``pred`` (pred must be a class function)."""
        return cls(group, frozenset(i for i in range(len(group.classes))
                                    if pred(group.representative(i))))


@dataclass(frozen=True)
class FactorizationQuery:
    classes: tuple[int, ...]
    target: int | Permutation

    def __post_init__(self):
        if len(self.classes) < 1:
            raise ValueError("need at least one class")


def _target_class(table: CharacterTable, target) -> int:
    if isinstance(target, int):
        idx = target
    else:
        idx = class_index(target, table.kind)
    if not 0 <= idx < len(table.classes):
        raise InvalidClass(f"class index {idx} out of range")
    return idx


def frobenius_sum(table: CharacterTable, classes: Sequence[int], target) -> Fraction:
    """(prod |C_i| / |G|) * sum_chi prod chi(C_i) * conj(chi(g)) / chi(1)^(k-1), exactly."""
    t = _target_class(table, target)
    for c in classes:
        if not 0 <= c < len(table.classes):
            raise InvalidClass(f"class index {c} out of range")
    k = len(classes)
    total = QuadNumber()
    for row in table.values:
        deg = row[0]
        term = QuadNumber.coerce(conj(row[t]))
        for c in classes:
            term = term * row[c]
        total = total + term / Fraction(deg) ** (k - 1)
    scale = Fraction(math.prod(table.classes[c].class_size for c in classes), table.order)
    total = total * scale
    if not total.is_rational():
        raise NonIntegerCount(f"irrational character sum {total}")
    return total.rational_part()


def frobenius_count(table: CharacterTable, query: FactorizationQuery) -> int:
    """Number of tuples (g_1..g_k) in C_1 x ... x C_k with g_1 ... g_k = g."""
    val = frobenius_sum(table, query.classes, query.target)
    if val.denominator != 1 or val < 0:
        raise NonIntegerCount(f"count {val} is not a nonnegative integer")
    return int(val)


def bruteforce_count(n: int, group: str, subsets: Sequence[Iterable[Permutation]],
                     target: Sequence[int], guard: int = DEFAULT_GUARD) -> int:
    """Count tuples from explicit subsets whose product is ``target``.

    The last factor is never enumerated: for each prefix product p it is tested
    whether ``p^-1 * target`` lies in the last subset.
    """
    if group_order(n, group) > guard:
        raise SizeGuardExceeded(f"{group}({n}) above guard {guard}")
    sets = [s if isinstance(s, (set, frozenset)) else frozenset(s) for s in subsets]
    target = Permutation._trusted(tuple(target))
    if len(sets) == 1:
        return int(target in sets[0])

    def count(g, rest):
        if len(rest) == 1:
            return int(g in rest[0])
        return sum(count(compose(inverse(s), g), rest[1:]) for s in rest[0])

    return count(target, sets)


@dataclass
class CoverReport:
    classes: frozenset
    counts: list[int]
    cover_nontrivial: bool


def class_product_cover(table: CharacterTable, c1: int, c2: int) -> CoverReport:
    counts = [frobenius_count(table, FactorizationQuery((c1, c2), t))
              for t in range(len(table.classes))]
    hit = frozenset(i for i, v in enumerate(counts) if v > 0)
    ident = next(i for i, c in enumerate(table.classes) if all(p == 1 for p in c.cycle_type))
    cover = all(i in hit for i in range(len(counts)) if i != ident)
    return CoverReport(hit, counts, cover)


def min_nontrivial_degree(table: CharacterTable) -> int:
    p = table.principal_index()
    degs = [d for i, d in enumerate(table.degrees) if i != p]
    return min(degs) if degs else 1


def witten_zeta(table: CharacterTable, s):
    """sum_chi chi(1)^(-s); exact for integer s, float otherwise."""
    if Fraction(s).denominator == 1:
        s = int(s)
        return sum((Fraction(1, d) ** s if s >= 0 else Fraction(d) ** (-s))
                   for d in table.degrees)
    return sum(d ** (-float(s)) for d in table.degrees)


# -- product-set checks --------------------------------------------------------

def product_set(xs: Iterable[Permutation], ys: Iterable[Permutation]) -> set:
    ys = list(ys)
    return {compose(x, y) for x in set(xs) for y in ys}


@dataclass
class GowersReport:
    sizes: tuple[int, int, int]
    group_order: int
    m: int
    hypothesis: bool
    covers: bool
    missing: int

    @property
    def passed(self) -> bool:
        return self.covers or not self.hypothesis


def gowers_check(group: PermGroup, a, b, c) -> GowersReport:
    """Compare |A||B||C| >= |G|^3 / m(G) with a brute-force test of ABC = G."""
    a, b, c = set(a), set(b), set(c)
    m = min_nontrivial_degree(group.table)
    hyp = len(a) * len(b) * len(c) * m >= group.order**3
    abc = product_set(product_set(a, b), c)
    return GowersReport((len(a), len(b), len(c)), group.order, m, hyp,
                        len(abc) == group.order, group.order - len(abc))


def random_subset(group: PermGroup, size: int, rng: random.Random) -> list[Permutation]:
    return rng.sample(group.elements, size)


def convolve(subsets: Sequence[Iterable[Permutation]]) -> Counter:
    """N_g = #{(x_1..x_t) in C_1 x ... x C_t : x_1 ... x_t = g} for every g."""
    dist = Counter(subsets[0])
    for nxt in subsets[1:]:
        nxt = list(nxt)
        new: Counter = Counter()
        for x, w in dist.items():
            for y in nxt:
                new[compose(x, y)] += w
        dist = new
    return dist


@dataclass
class BnpReport:
    t: int
    alpha: Fraction
    hypothesis_met: bool
    expected: Fraction
    max_deviation: Fraction
    bound_holds: bool
    mass_conserved: bool

    @property
    def passed(self) -> bool:
        return self.mass_conserved and (self.bound_holds or not self.hypothesis_met)


def bnp_bound_check(group: PermGroup, subsets: Sequence[Iterable[Permutation]],
                    alpha=None) -> BnpReport:
    """Check |N_g - E| <= alpha^(-1/2) E for all g by exact convolution.

    Without ``alpha`` the largest value allowed by the hypothesis
    prod|C_i| >= alpha |G|^t / m(G)^(t-2) is used.
    """
    subsets = [list(set(s)) for s in subsets]
    t = len(subsets)
    if t < 3:
        raise ValueError("need t >= 3 subsets")
    m = min_nontrivial_degree(group.table)
    prod = math.prod(len(s) for s in subsets)
    best_alpha = Fraction(prod * m ** (t - 2), group.order**t)
    alpha = best_alpha if alpha is None else Fraction(alpha)
    hyp = alpha > 0 and alpha <= best_alpha
    dist = convolve(subsets)
    expected = Fraction(prod, group.order)
    max_dev = max(abs(dist.get(g, 0) - expected) for g in group.elements)
    # |N - E| <= E / sqrt(alpha)  <=>  alpha (N - E)^2 <= E^2
    holds = alpha > 0 and alpha * max_dev**2 <= expected**2
    return BnpReport(t, alpha, hyp, expected, max_dev, holds, sum(dist.values()) == prod)


@dataclass
class UniformBoundReport:
    lhs: float
    rhs: float
    rhs_scaled: float
    probability: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.passed))


def triple_class_uniform_bound(table: CharacterTable, c1: int, c2: int, c3: int,
                               g) -> UniformBoundReport:
    """|Pr_{C1,C2,C3}(g) - 1/|G|| against sum_{chi != 1} |chi(C1) chi(C2) chi(C3)| / chi(1).

    ``rhs_scaled`` is the same sum divided by |G|, which also bounds the left side.
    """
    count = frobenius_count(table, FactorizationQuery((c1, c2, c3), g))
    sizes = math.prod(table.classes[c].class_size for c in (c1, c2, c3))
    pr = Fraction(count, sizes)
    lhs = abs(pr - Fraction(1, table.order))
    p = table.principal_index()
    rhs = 0.0
    for i, row in enumerate(table.values):
        if i == p:
            continue
        rhs += abs(complex(QuadNumber.coerce(row[c1]))) * abs(complex(QuadNumber.coerce(row[c2]))) \
            * abs(complex(QuadNumber.coerce(row[c3]))) / row[0]
    return UniformBoundReport(float(lhs), rhs, rhs / table.order, pr)


# -- word maps -----------------------------------------------------------------

def free_reduce(word: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for letter, exp in word:
        if exp == 0:
            continue
        if out and out[-1][0] == letter:
            e = out[-1][1] + exp
            out.pop()
            if e:
                out.append((letter, e))
        else:
            out.append((letter, exp))
    return out


def evaluate_word(word: Sequence[tuple[int, int]], values: Sequence[Permutation]) -> Permutation:
    n = len(values[0])
    result = Permutation.identity(n)
    for letter, exp in word:
        base = values[letter] if exp > 0 else inverse(values[letter])
        for _ in range(abs(exp)):
            result = compose(result, base)
    return result


def word_image(word: Sequence[tuple[int, int]], group: PermGroup,
               guard: int = 10**7) -> NormalSubset:
    """The image w(G) of the word map G^d -> G, as a union of classes."""
    import itertools

    word = free_reduce(word)
    d = max((letter for letter, _ in word), default=-1) + 1
    if group.order ** max(d, 1) > guard:
        raise SizeGuardExceeded(f"|G|^{d} above guard {guard}")
    ident = group.identity
    if not word:
        image = {ident}
    else:
        image = {evaluate_word(word, vals) for vals in itertools.product(group.elements, repeat=d)}
    classes = frozenset(group.class_of(g) for g in image)
    for i in classes:
        if len(group.class_members[i]) != sum(1 for g in group.class_members[i] if g in image):
            raise AssertionError(f"word image is not a union of classes (class {i})")
    return NormalSubset(group, classes)


# -- distributions ---------------------------------------------------------------

def product_distribution(s: NormalSubset, t: NormalSubset) -> list[Fraction]:
    """Pr_{S,T}(g) for one representative g per class (the law is a class function)."""
    g = s.group
    s_elems = s.elements()
    total = s.size * t.size
    out = []
    for i in range(len(g.classes)):
        rep = g.representative(i)
        hits = sum(1 for x in s_elems if compose(inverse(x), rep) in t)
        out.append(Fraction(hits, total))
    return out


def product_distribution_distance(s: NormalSubset, t: NormalSubset) -> tuple[float, float]:
    """(||Pr_{S,T} - U_G||_1, max_g |Pr(g) |G| - 1|)."""
    l1, linf = product_distribution_distance_exact(s, t)
    return float(l1), float(linf)


def product_distribution_distance_exact(s: NormalSubset, t: NormalSubset) -> tuple[Fraction, Fraction]:
    g = s.group
    pr = product_distribution(s, t)
    uniform = Fraction(1, g.order)
    l1 = sum(c.class_size * abs(p - uniform) for c, p in zip(g.classes, pr))
    linf = max(abs(p * g.order - 1) for p in pr)
    return l1, linf
