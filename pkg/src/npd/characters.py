"""Irreducible characters of S_n and A_n, hook lengths, and GL_n(q) unipotent degrees.

Character values of S_n come from the Murnaghan-Nakayama rule, with rim hooks
found on beta-sets (abacus positions): removing a rim d-hook from a partition
is the same as moving one bead from position b to an empty position b - d, and
the leg length is the number of beads strictly in between.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NonIntegerDegree, SizeGuardExceeded, SizeMismatch
from .perm import (AN, SN, ConjugacyClassSn, Partition, conjugacy_classes,
                   group_order, partitions, partitions_list)
from .quadratic import QuadNumber, conj

SN_TABLE_BOUND = 12
AN_TABLE_BOUND = 10


@dataclass(frozen=True)
class RimHookRemoval:
    source: Partition
    result: Partition
    length: int
    height: int

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


def hook_lengths(lam: Sequence[int]) -> list[int]:
    """Hook length of every box, row by row."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("empty partition")
    conj_ = lam.transpose()
    return [(lam[i] - j - 1) + (conj_[j] - i - 1) + 1
            for i in range(len(lam)) for j in range(lam[i])]


def degree_hook_formula(lam: Sequence[int]) -> int:
    """n! / prod(hook lengths)."""
    hooks = hook_lengths(lam)
    return math.factorial(len(hooks)) // math.prod(hooks)


def _beta_set(lam: Sequence[int]) -> list[int]:
    k = len(lam)
    return [lam[i] + (k - 1 - i) for i in range(k)]


def _from_beta(beta: Sequence[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return Partition._trusted(tuple(p for p in (beta[i] - (k - 1 - i) for i in range(k)) if p > 0))


def rim_hook_removals(lam: Sequence[int], d: int) -> list[RimHookRemoval]:
    """All rim hooks of length d in lam, ordered by the row where they start."""
    if d < 1:
        raise ValueError("d must be >= 1")
    lam = Partition(lam)
    beta = _beta_set(lam)
    beads = set(beta)
    out = []
    for b in beta:
        target = b - d
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [target if c == b else c for c in beta]
        out.append(RimHookRemoval(lam, _from_beta(new_beta), d, height))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    d, rest = mu[0], mu[1:]
    total = 0
    for r in rim_hook_removals(lam, d):
        total += r.sign * _mn(r.result, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam on the S_n class of cycle type mu (Murnaghan-Nakayama)."""
    lam = Partition(lam)
    mu = tuple(sorted(mu, reverse=True))
    if lam.size != sum(mu):
        raise SizeMismatch(f"|lambda| = {lam.size} but |mu| = {sum(mu)}")
    return _mn(lam, mu)


def diagonal_hooks(lam: Sequence[int]) -> tuple[int, ...]:
    """Hook lengths of the diagonal boxes (i, i)."""
    lam = Partition(lam)
    t = lam.transpose()
    return tuple(lam[i] + t[i] - 2 * i - 1 for i in range(len(lam)) if lam[i] > i)


# -- character tables ---------------------------------------------------------

@dataclass
class CharacterTable:
    group_label: str
    order: int
    classes: list[ConjugacyClassSn]
    char_labels: list[str]
    values: list[list] = field(repr=False)
    kind: str = SN
    n: int = 0

    @property
    def degrees(self) -> list[int]:
        return [int(QuadNumber.coerce(row[0]).to_rational()) for row in self.values]

    @property
    def class_sizes(self) -> list[int]:
        return [c.class_size for c in self.classes]

    def __len__(self) -> int:
        return len(self.values)

    def principal_index(self) -> int:
        for i, row in enumerate(self.values):
            if all(v == 1 for v in row):
                return i
        raise ValueError("table has no principal character")

    def check_orthogonality(self) -> bool:
        """Exact row and column orthogonality."""
        k = len(self.classes)
        sizes = self.class_sizes
        if len(self.values) != k or sum(sizes) != self.order:
            return False
        for a in range(k):
            for b in range(a, k):
                s = sum(sizes[c] * self.values[a][c] * conj(self.values[b][c]) for c in range(k))
                if s != (self.order if a == b else 0):
                    return False
        for c in range(k):
            for c2 in range(c, k):
                s = sum(self.values[x][c] * conj(self.values[x][c2]) for x in range(k))
                if s != (self.classes[c].centralizer_order if c == c2 else 0):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "group": self.group_label,
            "classes": [{"type": c.label, "size": c.class_size,
                         "centralizer": c.centralizer_order} for c in self.classes],
            "characters": [{"label": lab, "values": [_value_json(v) for v in row]}
                           for lab, row in zip(self.char_labels, self.values)],
        }


def _num_json(q: Fraction):
    return q.numerator if q.denominator == 1 else str(q)


def _value_json(v):
    if isinstance(v, QuadNumber):
        if v.is_rational():
            return _num_json(v.rational_part())
        a, b, d = v.as_parts()
        return {"a": _num_json(a), "b": _num_json(b), "D": d}
    if isinstance(v, Fraction):
        return _num_json(v)
    return v


def partition_label(lam: Sequence[int]) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


@lru_cache(maxsize=None)
def sn_character_table(n: int, bound: int = SN_TABLE_BOUND) -> CharacterTable:
    """Characters in decreasing lex order of lambda (trivial first)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise SizeGuardExceeded(f"S_{n} table above bound {bound}")
    classes = list(conjugacy_classes(n, SN))
    lams = partitions_list(n)
    values = [[mn_character(lam, c.cycle_type) for c in classes] for lam in lams]
    return CharacterTable(f"S{n}", math.factorial(n), classes,
                          [partition_label(lam) for lam in lams], values, SN, n)


@lru_cache(maxsize=None)
def an_character_table(n: int, bound: int = AN_TABLE_BOUND) -> CharacterTable:
    """Irreducible characters of A_n.

    Non-self-conjugate lambda restrict irreducibly (one row per pair {lambda,
    lambda^T}, labelled by the lex-larger member).  A self-conjugate lambda
    splits into lambda+ and lambda-; on the split classes of type h (its
    diagonal hooks) they take (eps +- sqrt(eps * prod h)) / 2 with
    eps = (-1)^((n - len h) / 2), and half of chi^lambda elsewhere.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise SizeGuardExceeded(f"A_{n} table above bound {bound}")
    classes = list(conjugacy_classes(n, AN))
    labels: list[str] = []
    values: list[list] = []
    for lam in partitions_list(n):
        lt = lam.transpose()
        if tuple(lam) < tuple(lt):
            continue
        row = [mn_character(lam, c.cycle_type) for c in classes]
        if lam != lt or n == 1:
            labels.append(partition_label(lam))
            values.append(row)
            continue
        h = diagonal_hooks(lam)
        eps = -1 if ((n - len(h)) // 2) % 2 else 1
        disc = eps * math.prod(h)
        for sign, suffix in ((1, "+"), (-1, "-")):
            split_row = []
            for c, v in zip(classes, row):
                if c.tag and tuple(c.cycle_type) == h:
                    split_row.append(QuadNumber.from_parts(Fraction(eps, 2),
                                                           Fraction(sign * c.tag, 2), disc))
                else:
                    if v % 2:
                        raise ArithmeticError(f"odd value {v} of self-conjugate {lam}")
                    split_row.append(v // 2)
            labels.append(partition_label(lam) + suffix)
            values.append(split_row)
    return CharacterTable(f"A{n}", group_order(n, AN), classes, labels, values, AN, n)


def character_table(n: int, group: str = SN) -> CharacterTable:
    return sn_character_table(n) if group == SN else an_character_table(n)


# -- GL_n(q) unipotent degrees -----------------------------------------------

def unipotent_gl_degree(lam: Sequence[int], q: int) -> int:
    """q^{sum C(lam_i, 2)} prod_{j<=n}(q^j - 1) / prod_boxes(q^h - 1), exactly."""
    if q < 2:
        raise ValueError("q must be >= 2")
    lam = Partition(lam)
    n = lam.size
    num = q ** sum(math.comb(p, 2) for p in lam) * math.prod(q**j - 1 for j in range(1, n + 1))
    den = math.prod(q**h - 1 for h in hook_lengths(lam))
    quo, rem = divmod(num, den)
    if rem:
        raise NonIntegerDegree(f"degree of {lam} at q={q} is not an integer")
    return quo


@dataclass
class ADegreeReport:
    n: int
    L: int
    q: int
    exponent_twice: int
    checked: int
    passed: bool
    min_log_ratio: float
    witness: Partition | None


def verify_adegree_bound(n: int, L: int, q: int) -> ADegreeReport:
    """Check deg > q^{(n^2 - n - 5L^2 + 3L - 4)/2} for every lambda |- n with lambda_1 = n - L."""
    if not (n > 2 * L >= 0) or q < 2:
        raise ValueError("need n > 2L >= 0 and q >= 2")
    e2 = n * n - n - 5 * L * L + 3 * L - 4
    passed = True
    best = None
    witness = None
    checked = 0
    for tail in partitions(L, n - L):
        lam = Partition((n - L,) + tuple(tail))
        deg = unipotent_gl_degree(lam, q)
        checked += 1
        # deg > q^{e2/2}  <=>  deg^2 > q^{e2}, compared exactly
        lhs, rhs = (deg * deg, q**e2) if e2 >= 0 else (deg * deg * q**(-e2), 1)
        if not lhs > rhs:
            passed = False
        log_ratio = math.log(deg, q) - e2 / 2
        if best is None or log_ratio < best:
            best, witness = log_ratio, lam
    return ADegreeReport(n, L, q, e2, checked, passed, best, witness)


def classify_nonvanishing_pair(n: int, mu1: Sequence[int], mu2: Sequence[int]):
    """All (lambda, chi(mu1), chi(mu2)) with lambda |- n and nonzero product."""
    if sum(mu1) != n or sum(mu2) != n:
        raise SizeMismatch("cycle types must be partitions of n")
    out = []
    for lam in partitions_list(n):
        v1 = mn_character(lam, mu1)
        if v1 == 0:
            continue
        v2 = mn_character(lam, mu2)
        if v2:
            out.append((lam, v1, v2))
    return out
