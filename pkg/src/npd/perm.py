"""Permutations of {0, ..., n-1}, partitions, and conjugacy classes of S_n and A_n.

Composition convention: ``a * b`` (and ``compose(a, b)``) applies ``b`` first,
then ``a``, so ``(a * b)[i] == a[b[i]]``.  Every decomposition returned by this
package uses this convention.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DegreeMismatch, SizeGuardExceeded

DEFAULT_GUARD = 5 * 10**8

SN = "Sn"
AN = "An"


class Permutation(tuple):
    """An immutable bijection of {0..n-1}; ``p[i]`` is the image of ``i``."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return tuple.__new__(cls, range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle {cyc} for degree {n}")
                seen.add(a)
                img[a] = b
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse ``"[1,0,2]"`` (image list) or ``"(0 1)(2 3 4)"`` (cycles)."""
        text = text.strip()
        if text.startswith("["):
            return cls(int(t) for t in re.findall(r"-?\d+", text))
        cycles = [[int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
                  for body in re.findall(r"\(([^)]*)\)", text)]
        if n is None:
            n = max((max(c) for c in cycles if c), default=-1) + 1
        return cls.from_cycles(n, [c for c in cycles if c])

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(len(self))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = compose(base, result)
        return result

    def inverse(self) -> "Permutation":
        return inverse(self)

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        return cycles(self, include_fixed)

    def cycle_type(self) -> "Partition":
        return cycle_type(self)

    def num_cycles(self) -> int:
        return num_cycles(self)

    def is_even(self) -> bool:
        return is_even(self)

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self) if i == x]

    def is_derangement(self) -> bool:
        return all(i != x for i, x in enumerate(self))

    def conjugate(self, x: "Permutation") -> "Permutation":
        """Return ``x * self * x^-1``."""
        return compose(compose(x, self), inverse(x))

    def cycle_notation(self) -> str:
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        if not self:
            return self
        return Partition._trusted(tuple(sum(1 for p in self if p > j) for j in range(self[0])))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Return ``a o b``: apply ``b`` first, then ``a``."""
    if len(a) != len(b):
        raise DegreeMismatch(f"degrees {len(a)} and {len(b)} differ")
    return tuple.__new__(Permutation, [a[j] for j in b])


def inverse(a: Sequence[int]) -> Permutation:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple.__new__(Permutation, inv)


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def cycles(a: Sequence[int], include_fixed: bool = True) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest point, ordered by that point."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = a[i]
        if include_fixed or len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_lengths(a: Sequence[int]) -> list[int]:
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            length += 1
            i = a[i]
        out.append(length)
    return out


def cycle_type(a: Sequence[int]) -> Partition:
    return Partition._trusted(tuple(sorted(cycle_lengths(a), reverse=True)))


def num_cycles(a: Sequence[int]) -> int:
    return len(cycle_lengths(a))


def is_even(a: Sequence[int]) -> bool:
    return (len(a) - num_cycles(a)) % 2 == 0


def sign_by_transpositions(a: Sequence[int]) -> int:
    """Sign computed by sorting with transpositions; independent of cycle counting."""
    work = list(a)
    swaps = 0
    for i in range(len(work)):
        while work[i] != i:
            j = work[i]
            work[i], work[j] = work[j], work[i]
            swaps += 1
    return -1 if swaps % 2 else 1


def is_derangement(a: Sequence[int]) -> bool:
    return all(i != x for i, x in enumerate(a))


# -- partitions -------------------------------------------------------------

def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition._trusted(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition._trusted((first,) + rest)


@lru_cache(maxsize=None)
def partitions_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def distinct_odd_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` into pairwise distinct odd parts, decreasing lex order."""
    if max_part is None:
        max_part = n if n % 2 else n - 1
    if n == 0:
        yield Partition._trusted(())
        return
    top = min(max_part, n)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        for rest in distinct_odd_partitions(n - first, first - 2):
            yield Partition._trusted((first,) + rest)


def centralizer_order(mu: Sequence[int]) -> int:
    """z_mu = prod_k k^{m_k} m_k!, the order of the S_n-centralizer of type mu."""
    z = 1
    for k in set(mu):
        m = mu.count(k)
        z *= k**m * math.factorial(m)
    return z


def splits_in_an(mu: Sequence[int]) -> bool:
    """True iff the S_n class of type mu splits into two A_n classes."""
    return all(p % 2 == 1 for p in mu) and len(set(mu)) == len(mu)


def is_even_type(mu: Sequence[int]) -> bool:
    return (sum(mu) - len(mu)) % 2 == 0


def standard_representative(mu: Sequence[int]) -> Permutation:
    """Permutation of type mu whose cycles are consecutive runs of points."""
    img = []
    start = 0
    for part in mu:
        img.extend(range(start + 1, start + part))
        img.append(start)
        start += part
    return tuple.__new__(Permutation, img)


def conjugator(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Some x with ``x * a * x^-1 == b``; requires equal cycle types.

    Cycles are matched greedily by length, in the order produced by ``cycles``.
    """
    ca = sorted(cycles(a), key=len, reverse=True)
    cb = sorted(cycles(b), key=len, reverse=True)
    if [len(c) for c in ca] != [len(c) for c in cb]:
        raise ValueError("cycle types differ")
    x = [0] * len(a)
    for u, v in zip(ca, cb):
        for i, j in zip(u, v):
            x[i] = j
    return tuple.__new__(Permutation, x)


def an_split_tag(a: Sequence[int]) -> int:
    """+1/-1 naming which A_n class of a split type ``a`` lies in; 0 if unsplit.

    Class +1 is the A_n class of ``standard_representative``.  A conjugating
    permutation can be adjusted by centralizer elements, which are all even for
    split types, so its parity is well defined.
    """
    mu = cycle_type(a)
    if not (is_even_type(mu) and splits_in_an(mu)):
        return 0
    x = conjugator(standard_representative(mu), a)
    return 1 if is_even(x) else -1


# -- conjugacy classes --------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClassSn:
    """A conjugacy class of S_n, or of A_n when ``tag`` is set.

    ``tag`` is 0 for S_n classes and unsplit A_n classes, and +1/-1 for the two
    halves of a split S_n class.
    """

    cycle_type: Partition
    class_size: int
    centralizer_order: int
    splits_in_An: bool
    tag: int = 0

    @property
    def label(self) -> str:
        body = ",".join(map(str, self.cycle_type)) or "-"
        return body + {0: "", 1: "+", -1: "-"}[self.tag]

    def representative(self) -> Permutation:
        rep = standard_representative(self.cycle_type)
        if self.tag == -1:
            n = len(rep)
            t = Permutation.from_cycles(n, [(0, 1)])
            rep = rep.conjugate(t)
        return rep


def _check_kind(group: str) -> str:
    if group not in (SN, AN):
        raise ValueError(f"group must be 'Sn' or 'An', got {group!r}")
    return group


@lru_cache(maxsize=None)
def conjugacy_classes(n: int, group: str = SN) -> tuple[ConjugacyClassSn, ...]:
    """Classes ordered by cycle type, increasing lexicographically (identity first)."""
    _check_kind(group)
    if n < 1:
        raise ValueError("n must be >= 1")
    fact = math.factorial(n)
    out = []
    for mu in reversed(partitions_list(n)):
        z = centralizer_order(mu)
        split = splits_in_an(mu)
        if group == SN:
            out.append(ConjugacyClassSn(mu, fact // z, z, split))
        elif is_even_type(mu):
            if split and n > 1:
                for tag in (1, -1):
                    out.append(ConjugacyClassSn(mu, fact // z // 2, z, True, tag))
            else:
                # For n = 1 the identity type is formally "split" but A_1 is trivial.
                out.append(ConjugacyClassSn(mu, fact // z if n > 1 else 1,
                                            z // 2 if n > 1 else 1, split))
    return tuple(out)


@lru_cache(maxsize=None)
def _class_index_map(n: int, group: str) -> dict:
    return {(c.cycle_type, c.tag): i for i, c in enumerate(conjugacy_classes(n, group))}


def class_index(a: Sequence[int], group: str = SN) -> int:
    """Index in ``conjugacy_classes(len(a), group)`` of the class containing ``a``."""
    n = len(a)
    mu = cycle_type(a)
    tag = an_split_tag(a) if group == AN and n > 1 else 0
    try:
        return _class_index_map(n, group)[(mu, tag)]
    except KeyError:
        raise ValueError(f"{a} is not in {group}({n})") from None


def group_order(n: int, group: str = SN) -> int:
    f = math.factorial(n)
    return f if group == SN or n < 2 else f // 2


def enumerate_group(n: int, group: str = SN, guard: int = DEFAULT_GUARD) -> Iterator[Permutation]:
    """Stream every element of S_n or A_n exactly once, in lexicographic order."""
    _check_kind(group)
    if group_order(n, group) > guard:
        raise SizeGuardExceeded(f"|{group}({n})| = {group_order(n, group)} exceeds guard {guard}")
    make = Permutation._trusted
    if group == SN:
        for p in itertools.permutations(range(n)):
            yield make(p)
    else:
        for p in itertools.permutations(range(n)):
            if is_even(p):
                yield make(p)


@lru_cache(maxsize=16)
def group_elements(n: int, group: str = SN, guard: int = DEFAULT_GUARD) -> tuple[Permutation, ...]:
    """Materialized, cached copy of ``enumerate_group`` for repeated oracle scans."""
    return tuple(enumerate_group(n, group, guard))


# -- cycle statistics ----------------------------------------------------------

def sigma_k_sets(a: Sequence[int]) -> list[int]:
    """``[|Sigma_1|, ..., |Sigma_n|]``: points whose orbit has size at most k."""
    n = len(a)
    by_len = [0] * (n + 1)
    for length in cycle_lengths(a):
        by_len[length] += length
    out = []
    acc = 0
    for k in range(1, n + 1):
        acc += by_len[k]
        out.append(acc)
    return out


def e_statistic(a: Sequence[int]) -> float:
    """E(sigma) = sum_k e_k / k with n^{e_1+...+e_k} = max(|Sigma_k|, 1)."""
    n = len(a)
    if n < 2:
        raise ValueError("E(sigma) needs n >= 2")
    total = 0.0
    prev = 0.0
    for k, s in enumerate(sigma_k_sets(a), start=1):
        cur = math.log(max(s, 1), n)
        total += (cur - prev) / k
        prev = cur
    return total
