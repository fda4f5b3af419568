"""Cycle-count statistics: Stirling numbers, P_{n,m,a}, and residue-window normal sets.

p(sigma) is the number of cycles of sigma, fixed points included.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidWindow, SizeGuardExceeded
from .perm import (AN, DEFAULT_GUARD, SN, Permutation, compose, distinct_odd_partitions,
                   enumerate_group, group_order, inverse, num_cycles)


# -- Stirling numbers of the first kind ----------------------------------------

@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (n - 1) * (prev[k] if k < n else 0) + prev[k - 1]
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number c(n, k): permutations of n points with k cycles."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    return _stirling_row(n)[k]


@dataclass(frozen=True)
class StirlingTable:
    n_max: int
    c: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n_max: int) -> "StirlingTable":
        return cls(n_max, tuple(_stirling_row(n) for n in range(n_max + 1)))

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        return self.c[n][k] if k <= n else 0


# -- P_{n,m,a} ------------------------------------------------------------------

def count_p_mod(n: int, m: int, a: int, group: str = SN) -> int:
    """#{sigma in G : p(sigma) = a (mod m)} for G = S_n or A_n."""
    if m < 1:
        raise ValueError("m must be >= 1")
    row = _stirling_row(n)
    return sum(row[k] for k in range(n + 1)
               if (k - a) % m == 0 and (group == SN or (n - k) % 2 == 0))


def equidistribution_defect(n: int, m: int, group: str = SN) -> Fraction:
    """max_a |m P_{n,m,a} / |G| - 1|."""
    order = group_order(n, group)
    return max(abs(Fraction(m * count_p_mod(n, m, a, group), order) - 1) for a in range(m))


# -- integer polynomials modulo a cyclotomic polynomial ---------------------------
# coefficient lists, lowest degree first

def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic polynomial b over the integers."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [0], _trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _trim(q), _trim(a[:db] or [0])


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple[int, ...]:
    """Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic(d)))
            if rem != [0]:
                raise ArithmeticError(f"Phi_{d} does not divide x^{m} - 1")
    return tuple(num)


@dataclass
class RisingFactorialReport:
    n: int
    m: int
    lhs: list[int]
    rhs: list[int]

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def rising_factorial_identity_check(n: int, m: int) -> RisingFactorialReport:
    """sum_a zeta^a P_{n,m,a} == zeta (zeta + 1) ... (zeta + n - 1) in Z[x] / Phi_m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    phi = list(cyclotomic(m))
    lhs = [0] * m
    for a in range(m):
        lhs[a] = count_p_mod(n, m, a, SN)
    _, lhs = poly_divmod(_trim(lhs), phi)
    rhs = [1]
    for j in range(n):
        rhs = poly_mul(rhs, [j, 1])
        _, rhs = poly_divmod(rhs, phi)
    return RisingFactorialReport(n, m, lhs, rhs)


# -- residue windows --------------------------------------------------------------

@dataclass(frozen=True)
class ResidueSetPair:
    n: int
    m: int
    k: int
    l: int
    s_residues: frozenset
    t_residues: frozenset
    gap_ok: bool

    def in_s(self, sigma) -> bool:
        return _even(sigma, self.n) and num_cycles(sigma) % self.m in self.s_residues

    def in_t(self, sigma) -> bool:
        return _even(sigma, self.n) and num_cycles(sigma) % self.m in self.t_residues

    def s_size(self) -> int:
        return sum(count_p_mod(self.n, self.m, a, AN) for a in self.s_residues)

    def t_size(self) -> int:
        return sum(count_p_mod(self.n, self.m, a, AN) for a in self.t_residues)


def _even(sigma, n: int) -> bool:
    return (n - num_cycles(sigma)) % 2 == 0


def build_alt_sets(n: int, m: int, k: int, l: int) -> ResidueSetPair:
    """S: even sigma with p(sigma) in {2, 4, .., 2k-2}; T: p in {2k+2, .., 2l-2} (mod m)."""
    if m % 2 == 0 or m < 1:
        raise ValueError("m must be odd")
    if not 0 < k < l <= m:
        raise ValueError("need 0 < k < l <= m")
    s = frozenset(x % m for x in range(2, 2 * k - 1, 2))
    t = frozenset(x % m for x in range(2 * k + 2, 2 * l - 1, 2))
    if s & t:
        raise InvalidWindow(f"windows overlap mod {m}: {sorted(s & t)}")
    gap = not any((a + d - b) % m == 0 for a in s for b in t for d in (-2, 0, 2))
    return ResidueSetPair(n, m, k, l, s, t, gap)


def three_cycles(n: int) -> list[Permutation]:
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                out.append(Permutation.from_cycles(n, [(a, b, c)]))
                out.append(Permutation.from_cycles(n, [(a, c, b)]))
    return out


@dataclass
class GapReport:
    n: int
    m: int
    s_size: int
    t_size: int
    s_fraction: Fraction
    t_fraction: Fraction
    three_cycles_in_product: int
    p_difference_ok: bool

    @property
    def passed(self) -> bool:
        return self.three_cycles_in_product == 0 and self.p_difference_ok


def three_cycle_gap_check(pair: ResidueSetPair, guard: int = DEFAULT_GUARD) -> GapReport:
    """Brute force: count (sigma, g) with sigma in S, g a 3-cycle and sigma^-1 g in T."""
    n = pair.n
    if group_order(n, AN) > guard:
        raise SizeGuardExceeded(f"A_{n} above guard {guard}")
    cycles3 = three_cycles(n)
    s_elems = [s for s in enumerate_group(n, AN, guard) if pair.in_s(s)]
    hits = 0
    diff_ok = True
    for s in s_elems:
        s_inv = inverse(s)
        ps = num_cycles(s)
        for g in cycles3:
            tau = compose(s_inv, g)
            if pair.in_t(tau):
                hits += 1
            if num_cycles(tau) - ps not in (-2, 0, 2):
                diff_ok = False
    order = group_order(n, AN)
    t_size = pair.t_size()
    if len(s_elems) != pair.s_size():
        raise AssertionError("enumerated |S| disagrees with the Stirling count")
    return GapReport(n, pair.m, len(s_elems), t_size, Fraction(len(s_elems), order),
                     Fraction(t_size, order), hits, diff_ok)


def p_difference_exhaustive(n: int) -> bool:
    """For all sigma in A_n and 3-cycles g: p(sigma^-1 g) - p(sigma) in {-2, 0, 2}."""
    cycles3 = three_cycles(n)
    for s in enumerate_group(n, AN):
        s_inv = inverse(s)
        ps = num_cycles(s)
        for g in cycles3:
            if num_cycles(compose(s_inv, g)) - ps not in (-2, 0, 2):
                return False
    return True


def count_split_type(n: int) -> int:
    """#{sigma in S_n : cycle type has distinct odd parts}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fact = math.factorial(n)
    # distinct parts, so the centralizer order is just the product of the parts
    return sum(fact // math.prod(mu) for mu in distinct_odd_partitions(n))
