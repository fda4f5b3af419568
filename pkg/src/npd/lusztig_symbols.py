"""Symbols (X, Y), their ranks, hooks and cohooks, and enumeration by rank.

A set X of size k with inefficiency i corresponds to the partition of i read
off from x_j - j; this turns enumeration of minimal symbols of rank r into a
walk over pairs of partitions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotACohook, NotAHook, SizeGuardExceeded
from .linear_strata import multiplicative_order
from .perm import partitions

SYMBOL_RANK_BOUND = 16

HOOK = "hook"
COHOOK = "cohook"
ODD = "odd"
TWO_MOD_FOUR = "two_mod_four"
ZERO_MOD_FOUR = "zero_mod_four"


def shift(xs: Iterable[int]) -> tuple[int, ...]:
    return (0,) + tuple(x + 1 for x in sorted(xs))


def inefficiency(xs: Iterable[int]) -> int:
    xs = list(xs)
    return sum(xs) - math.comb(len(xs), 2)


@dataclass(frozen=True)
class SymbolXY:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        for side in (self.x, self.y):
            if any(v < 0 for v in side) or list(side) != sorted(set(side)):
                raise ValueError(f"entries must be strictly increasing naturals: {side}")

    @classmethod
    def of(cls, x: Iterable[int], y: Iterable[int]) -> "SymbolXY":
        return cls(tuple(sorted(x)), tuple(sorted(y)))

    @property
    def defect(self) -> int:
        return len(self.x) - len(self.y)

    @property
    def degenerate(self) -> bool:
        return self.x == self.y

    def swap(self) -> "SymbolXY":
        return SymbolXY(self.y, self.x)

    def shifted(self) -> "SymbolXY":
        return SymbolXY(shift(self.x), shift(self.y))

    def side(self, name: str) -> tuple[int, ...]:
        return self.x if name == "X" else self.y

    def to_json(self) -> list:
        return [list(self.x), list(self.y)]

    def __repr__(self):
        return f"({{{','.join(map(str, self.x))}}},{{{','.join(map(str, self.y))}}})"


def rank_by_entries(s: SymbolXY) -> int:
    return -((len(s.x) + len(s.y) - 1) ** 2 // 4) + sum(s.x) + sum(s.y)


def rank_by_inefficiency(s: SymbolXY) -> int:
    return inefficiency(s.x) + inefficiency(s.y) + (len(s.x) - len(s.y)) ** 2 // 4


def rank(s: SymbolXY) -> int:
    r = rank_by_entries(s)
    if r != rank_by_inefficiency(s):
        raise AssertionError(f"rank forms disagree on {s}")
    return r


def minimal(s: SymbolXY) -> SymbolXY:
    """Un-shift while 0 lies in both sides, then order the sides (defect >= 0)."""
    x, y = s.x, s.y
    while x and y and x[0] == 0 and y[0] == 0:
        x = tuple(v - 1 for v in x[1:])
        y = tuple(v - 1 for v in y[1:])
    if len(x) < len(y) or (len(x) == len(y) and x > y):
        x, y = y, x
    return SymbolXY(x, y)


def equivalent(a: SymbolXY, b: SymbolXY) -> bool:
    return minimal(a) == minimal(b)


# -- hooks and cohooks -----------------------------------------------------------

@dataclass(frozen=True)
class HookRecord:
    side: str        # "X" or "Y": where the entry c lives
    pair: tuple[int, int]
    d: int
    kind: str

    @property
    def length(self) -> int:
        return self.pair[1] - self.pair[0]


def _other(side: str) -> str:
    return "Y" if side == "X" else "X"


def hooks(s: SymbolXY, d: int) -> list[HookRecord]:
    """Entries c of X (or Y) with c - d >= 0 not in the same side."""
    if d < 1:
        raise ValueError("d must be >= 1")
    out = []
    for name in ("X", "Y"):
        side = set(s.side(name))
        for c in sorted(side):
            b = c - d
            if b >= 0 and b not in side:
                out.append(HookRecord(name, (b, c), d, HOOK))
    return out


def cohooks(s: SymbolXY, d: int) -> list[HookRecord]:
    """Entries c of X (or Y) with c - d >= 0 not in the other side."""
    if d < 1:
        raise ValueError("d must be >= 1")
    out = []
    for name in ("X", "Y"):
        other = set(s.side(_other(name)))
        for c in s.side(name):
            b = c - d
            if b >= 0 and b not in other:
                out.append(HookRecord(name, (b, c), d, COHOOK))
    return out


def _replace(s: SymbolXY, name: str, new_side, other_side=None) -> SymbolXY:
    if name == "X":
        return SymbolXY.of(new_side, s.y if other_side is None else other_side)
    return SymbolXY.of(s.x if other_side is None else other_side, new_side)


def remove_hook(s: SymbolXY, h: HookRecord) -> SymbolXY:
    if h.kind != HOOK or h not in hooks(s, h.d):
        raise NotAHook(f"{h} is not a hook of {s}")
    b, c = h.pair
    side = [b if v == c else v for v in s.side(h.side)]
    return _replace(s, h.side, side)


def remove_cohook(s: SymbolXY, h: HookRecord) -> SymbolXY:
    if h.kind != COHOOK or h not in cohooks(s, h.d):
        raise NotACohook(f"{h} is not a cohook of {s}")
    b, c = h.pair
    side = [v for v in s.side(h.side) if v != c]
    other = list(s.side(_other(h.side))) + [b]
    return _replace(s, h.side, side, other)


def all_hook_cohook_lengths(s: SymbolXY) -> tuple[list[int], list[int]]:
    """Sorted multisets of c - b over every hook and every cohook."""
    top = max(s.x + s.y, default=0)
    hk = sorted(h.length for d in range(1, top + 1) for h in hooks(s, d))
    ck = sorted(h.length for d in range(1, top + 1) for h in cohooks(s, d))
    return hk, ck


def denominator_divisible(s: SymbolXY, q: int, ell: int) -> bool:
    """Does ell divide prod_hooks (q^d - 1) prod_cohooks (q^d + 1)?"""
    if q % ell == 0:
        raise ValueError("ell must not divide q")
    o = multiplicative_order(q, ell)
    hk, ck = all_hook_cohook_lengths(s)
    return any(d % o == 0 for d in hk) or any((2 * d) % o == 0 and d % o for d in ck)


# -- enumeration ------------------------------------------------------------------

def _set_from_partition(alpha: Sequence[int], size: int) -> tuple[int, ...]:
    """The set of given size whose inefficiency partition is alpha (parts decreasing)."""
    parts = list(alpha)[::-1]
    parts = [0] * (size - len(parts)) + parts
    return tuple(p + j for j, p in enumerate(parts))


@lru_cache(maxsize=None)
def _partitions_of(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(p) for p in partitions(m)) if m > 0 else ((),)


def defect_class(defect: int) -> str:
    d = abs(defect)
    if d % 2:
        return ODD
    return ZERO_MOD_FOUR if d % 4 == 0 else TWO_MOD_FOUR


@lru_cache(maxsize=None)
def _enumerate_all(r: int) -> tuple[SymbolXY, ...]:
    found = set()
    D = 0
    while D * D // 4 <= r:
        R = r - D * D // 4
        for a in range(R + 1):
            for alpha in _partitions_of(a):
                for beta in _partitions_of(R - a):
                    p, q = len(alpha), len(beta)
                    # |X| = l + D >= p, |Y| = l >= q, and 0 not in both sides
                    for l in {p - D, q}:
                        if l < 0 or l < q or l + D < p:
                            continue
                        if l + D != p and l != q:
                            continue
                        s = SymbolXY(_set_from_partition(alpha, l + D), _set_from_partition(beta, l))
                        found.add(minimal(s))
        D += 1
    return tuple(sorted(found, key=lambda s: (len(s.x) - len(s.y), s.x, s.y)))


def enumerate_symbols(r: int, defect_filter=None, minimal_only: bool = True,
                      bound: int = SYMBOL_RANK_BOUND) -> list[SymbolXY]:
    """One minimal, swap-normalized representative per class of rank r.

    ``defect_filter`` is a predicate on the (nonnegative) defect or one of the
    class names "odd", "two_mod_four", "zero_mod_four".
    """
    if r < 0:
        raise ValueError("rank must be >= 0")
    if r > bound:
        raise SizeGuardExceeded(f"rank {r} above bound {bound}")
    if not minimal_only:
        raise ValueError("only minimal representatives are enumerated")
    if isinstance(defect_filter, str):
        cls = defect_filter
        defect_filter = lambda d: defect_class(d) == cls  # noqa: E731
    syms = _enumerate_all(r)
    return [s for s in syms if defect_filter is None or defect_filter(s.defect)]


def bipartition_count(r: int) -> int:
    return sum(len(_partitions_of(a)) * len(_partitions_of(r - a)) for a in range(r + 1))


def satisfies(s: SymbolXY, constraints: Sequence[tuple[str, int]]) -> bool:
    for kind, d in constraints:
        found = hooks(s, d) if kind == HOOK else cohooks(s, d)
        if not found:
            return False
    return True


def count_constrained(r: int, constraints: Sequence[tuple[str, int]], defect_filter=None) -> int:
    for _, d in constraints:
        if not 1 <= d <= r:
            raise ValueError(f"constraint length {d} outside 1..{r}")
    return sum(1 for s in enumerate_symbols(r, defect_filter) if satisfies(s, constraints))


def classify_surviving_symbols(r: int, defect_class_name: str,
                               required: Sequence[tuple[str, int]]) -> list[SymbolXY]:
    if r < 4:
        raise ValueError("r must be >= 4")
    return [s for s in enumerate_symbols(r, defect_class_name) if satisfies(s, required)]


def disjoint_hook_violation(s: SymbolXY, d: int, d2: int, kind: str = HOOK,
                            distinct_tops: bool = False) -> bool:
    """True if s has disjoint d- and d2-(co)hooks although d + d2 - 1 > rank.

    Two (co)hooks are disjoint when they lie on different sides or start at
    different entries.  With ``distinct_tops`` a pair sharing its top entry is
    ignored; only that form is a genuine invariant (({3},{}) has disjoint
    2- and 3-hooks at rank 3).
    """
    if d + d2 - 1 <= rank(s):
        return False
    find = hooks if kind == HOOK else cohooks
    for h1 in find(s, d):
        for h2 in find(s, d2):
            if h1.side == h2.side and h1.pair[0] == h2.pair[0]:
                continue
            if distinct_tops and h1.side == h2.side and h1.pair[1] == h2.pair[1]:
                continue
            return True
    return False
