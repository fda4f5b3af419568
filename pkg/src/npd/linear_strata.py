"""Small finite fields, SL_n(F_q) by enumeration, and fixed-space strata.

Field elements are integer codes 0..q-1: for q = p^e the code of
c_0 + c_1 x + ... is c_0 + c_1 p + ...  Arithmetic goes through lookup tables,
which also vectorize with numpy for the batched checks.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cycle_statistics import cyclotomic
from .errors import SizeGuardExceeded

STRATA_GUARD = 25_000_000

# (p, e) -> irreducible modulus, lowest degree first, monic
MODULI = {
    (2, 2): (1, 1, 1),      # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),   # x^3 + x + 1
    (3, 2): (1, 0, 1),      # x^2 + 1
}


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                break
            return p, e
    raise ValueError(f"{q} is not a prime power")


class GF:
    """The field with q elements for q prime or q in {4, 8, 9}."""

    def __init__(self, q: int):
        p, e = _prime_power(q)
        if e > 1 and (p, e) not in MODULI:
            raise ValueError(f"no modulus configured for q = {q}")
        self.q, self.p, self.e = q, p, e
        digits = [self._digits(a) for a in range(q)]
        self.add = [[self._code([(x + y) % p for x, y in zip(digits[a], digits[b])])
                     for b in range(q)] for a in range(q)]
        self.mul = [[self._code(self._polymul(digits[a], digits[b])) for b in range(q)]
                    for a in range(q)]
        self.neg = [self._code([(-x) % p for x in digits[a]]) for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)
        self.add_np = np.array(self.add, dtype=np.int64)
        self.mul_np = np.array(self.mul, dtype=np.int64)

    def __repr__(self):
        return f"GF({self.q})"

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _code(self, digits) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _polymul(self, a, b) -> list[int]:
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        if e > 1:
            mod = MODULI[(p, e)]
            for i in range(len(prod) - 1, e - 1, -1):
                c = prod[i]
                if c:
                    for j in range(e + 1):
                        prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return prod[:e]

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def pow(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self.mul[r][a]
        return r


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    return GF(q)


@dataclass(frozen=True)
class FqElement:
    """A field element with operator syntax, for spot checks."""

    q: int
    code: int

    @property
    def field(self) -> GF:
        return gf(self.q)

    def __add__(self, o):
        return FqElement(self.q, self.field.add[self.code][o.code])

    def __sub__(self, o):
        return FqElement(self.q, self.field.sub(self.code, o.code))

    def __mul__(self, o):
        return FqElement(self.q, self.field.mul[self.code][o.code])

    def __neg__(self):
        return FqElement(self.q, self.field.neg[self.code])

    def inverse(self) -> "FqElement":
        if self.code == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FqElement(self.q, self.field.inv[self.code])

    def __pow__(self, k: int):
        return FqElement(self.q, self.field.pow(self.code, k))


def _rank(rows: list[list[int]], F: GF) -> int:
    rows = [list(r) for r in rows]
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv[rows[rank][col]]
        rows[rank] = [F.mul[inv][x] for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [F.sub(x, F.mul[c][y]) for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _det(rows: list[list[int]], F: GF) -> int:
    rows = [list(r) for r in rows]
    n = len(rows)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = F.neg[det]
        det = F.mul[det][rows[col][col]]
        inv = F.inv[rows[col][col]]
        for r in range(col + 1, n):
            if rows[r][col]:
                c = F.mul[rows[r][col]][inv]
                rows[r] = [F.sub(x, F.mul[c][y]) for x, y in zip(rows[r], rows[col])]
    return det


class MatrixFq:
    """Square matrix over GF(q), entries as integer codes, rows as tuples."""

    __slots__ = ("q", "rows")

    def __init__(self, q: int, rows):
        self.q = q
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> GF:
        return gf(self.q)

    @classmethod
    def identity(cls, n: int, q: int) -> "MatrixFq":
        return cls(q, [[int(i == j) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, MatrixFq) and self.q == other.q and self.rows == other.rows

    def __hash__(self):
        return hash((self.q, self.rows))

    def __repr__(self):
        return f"MatrixFq(q={self.q}, {list(map(list, self.rows))})"

    def __mul__(self, other: "MatrixFq") -> "MatrixFq":
        F = self.field
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for x, y in zip(r, c):
                    acc = F.add[acc][F.mul[x][y]]
                row.append(acc)
            out.append(row)
        return MatrixFq(self.q, out)

    def det(self) -> int:
        return _det(list(map(list, self.rows)), self.field)

    def is_identity(self) -> bool:
        return all(x == int(i == j) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)


def fixed_space_dim(M: MatrixFq) -> int:
    """dim ker(M - I), by elimination."""
    F = M.field
    shifted = [[F.sub(x, int(i == j)) for j, x in enumerate(r)] for i, r in enumerate(M.rows)]
    return M.n - _rank(shifted, F)


def is_transvection(M: MatrixFq) -> bool:
    return not M.is_identity() and fixed_space_dim(M) == M.n - 1


def sl_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * math.prod(q**j - 1 for j in range(2, n + 1))


def gaussian_binomial(k: int, m: int, q: int) -> int:
    if not 0 <= m <= k:
        raise ValueError("need 0 <= m <= k")
    num = math.prod(q**k - q**i for i in range(m))
    den = math.prod(q**m - q**i for i in range(m))
    return num // den


def grass_sandwich(k: int, m: int, q: int) -> bool:
    """q^{m(k-m)} <= [k, m]_q < 4 q^{m(k-m)}."""
    g = gaussian_binomial(k, m, q)
    low = q ** (m * (k - m))
    return low <= g < 4 * low


def _vectors(n: int, q: int):
    return itertools.product(range(q), repeat=n)


def _in_span_set(basis: list[tuple], F: GF) -> set:
    span = {tuple([0] * len(basis[0]))} if basis else set()
    for b in basis:
        new = set()
        for v in span:
            for c in range(F.q):
                new.add(tuple(F.add[x][F.mul[c][y]] for x, y in zip(v, b)))
        span = new
    return span


def enumerate_sl(n: int, q: int, guard: int = STRATA_GUARD) -> np.ndarray:
    """All of SL_n(F_q) as an (N, n, n) array, rows chosen independent one at a time."""
    if sl_order(n, q) > guard:
        raise SizeGuardExceeded(f"|SL_{n}({q})| = {sl_order(n, q)} above guard {guard}")
    F = gf(q)
    vecs = list(_vectors(n, q))
    out = []

    def extend(rows):
        span = _in_span_set(rows, F) if rows else {tuple([0] * n)}
        for v in vecs:
            if v in span:
                continue
            if len(rows) == n - 1:
                if _det([list(r) for r in rows] + [list(v)], F) == 1:
                    out.append(rows + [v])
            else:
                extend(rows + [v])

    if n == 1:
        return np.ones((1, 1, 1), dtype=np.int64)
    extend([])
    arr = np.array(out, dtype=np.int64)
    if len(arr) != sl_order(n, q):
        raise AssertionError("enumeration disagrees with the order formula")
    return arr


@lru_cache(maxsize=8)
def sl_elements(n: int, q: int) -> np.ndarray:
    arr = enumerate_sl(n, q)
    arr.setflags(write=False)
    return arr


def batch_matmul(a: np.ndarray, b: np.ndarray, F: GF) -> np.ndarray:
    """Products a[i] @ b[i] (or broadcast) over GF(q), via the add/mul tables."""
    if F.e == 1:
        return np.matmul(a, b) % F.p
    a, b = np.broadcast_arrays(a, b)
    n = a.shape[-1]
    out = np.zeros(a.shape, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            acc = np.zeros(a.shape[:-2], dtype=np.int64)
            for k in range(n):
                acc = F.add_np[acc, F.mul_np[a[..., i, k], b[..., k, j]]]
            out[..., i, j] = acc
    return out


def batch_fixed_dim(mats: np.ndarray, F: GF) -> np.ndarray:
    """dim of the fixed space of each matrix, by counting fixed vectors (q^dim of them)."""
    n = mats.shape[-1]
    vecs = np.array(list(_vectors(n, F.q)), dtype=np.int64)  # (V, n)
    if F.e == 1:
        images = np.matmul(mats, vecs.T) % F.p  # (..., n, V)
        counts = np.sum(np.all(images == vecs.T, axis=-2), axis=-1)
        return _log_q(counts, F.q)
    counts = np.zeros(mats.shape[:-2], dtype=np.int64)
    for v in vecs:
        fixed = np.ones(mats.shape[:-2], dtype=bool)
        for i in range(n):
            acc = np.zeros(mats.shape[:-2], dtype=np.int64)
            for k in range(n):
                acc = F.add_np[acc, F.mul_np[mats[..., i, k], v[k]]]
            fixed &= acc == v[i]
        counts += fixed
    return _log_q(counts, F.q)


def _log_q(counts: np.ndarray, q: int) -> np.ndarray:
    dims = np.rint(np.log(counts) / math.log(q)).astype(np.int64)
    if not np.all(q ** dims == counts):
        raise AssertionError("fixed-vector count is not a power of q")
    return dims


@dataclass
class StratumCensus:
    n: int
    q: int
    counts: dict[int, int]
    upper_ok: dict[int, bool] = field(default_factory=dict)
    lower_ok: dict[int, bool] = field(default_factory=dict)
    top_variant_ok: bool = True

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def at_least(self, m: int) -> int:
        return sum(c for k, c in self.counts.items() if k >= m)

    @property
    def passed(self) -> bool:
        return (self.total == sl_order(self.n, self.q) and self.counts.get(self.n) == 1
                and all(self.upper_ok.values()) and all(self.lower_ok.values())
                and self.top_variant_ok)


def stratum_census(n: int, q: int, guard: int = STRATA_GUARD) -> StratumCensus:
    """Exact |SL_n(F_q)_m| for every m, with both stratum bounds checked exactly."""
    F = gf(q)
    dims = batch_fixed_dim(sl_elements(n, q) if sl_order(n, q) <= guard
                           else enumerate_sl(n, q, guard), F)
    counts = {m: int(np.sum(dims == m)) for m in range(n + 1)}
    census = StratumCensus(n, q, counts)
    order = sl_order(n, q)
    for m in range(1, n):
        # |SL_{>=m}| < 16 q^{-m^2} |SL|
        census.upper_ok[m] = census.at_least(m) * q ** (m * m) < 16 * order
    for m in range(n + 1):
        # |SL_m| >= (1 - 128 q^{-m}) q^{-m^2} |SL|
        census.lower_ok[m] = counts[m] * q ** (m * m + m) >= (q**m - 128) * order
    # the m = n case with 16 q^{1 - m^2}
    census.top_variant_ok = census.at_least(n) * q ** (n * n) < 16 * q * order
    return census


@dataclass
class FixedQReport:
    n: int
    q: int
    s: int
    t: int
    s_fraction: Fraction
    t_fraction: Fraction
    transvections: int
    hits: int
    separation_ok: bool

    @property
    def passed(self) -> bool:
        return self.hits == 0 or not self.separation_ok


def fixed_q_product_check(n: int, q: int, s: int, t: int) -> FixedQReport:
    """Does SL_n(F_q)_s * SL_n(F_q)_t contain a transvection?

    S is closed under inversion, so rho in S T iff sigma rho in T for some sigma in S.
    With t < s + 2 the check still runs but the result is not asserted.
    """
    F = gf(q)
    elems = sl_elements(n, q)
    dims = batch_fixed_dim(elems, F)
    S = elems[dims == s]
    T_size = int(np.sum(dims == t))
    nonid = ~np.all(elems == np.eye(n, dtype=np.int64), axis=(1, 2))
    rhos = elems[(dims == n - 1) & nonid]
    hits = 0
    if len(S):
        for rho in rhos:
            prod = batch_matmul(S, rho[None, :, :], F)
            hits += int(np.sum(batch_fixed_dim(prod, F) == t))
    order = len(elems)
    return FixedQReport(n, q, s, t, Fraction(len(S), order), Fraction(T_size, order),
                        len(rhos), hits, t >= s + 2)


def intersection_bound_sample(n: int, q: int, pairs: int, rng: np.random.Generator,
                              chunk: int = 200_000) -> int:
    """Count sampled pairs violating dim Fix(st) >= dim Fix(s) + dim Fix(t) - n."""
    F = gf(q)
    elems = sl_elements(n, q)
    dims = batch_fixed_dim(elems, F)
    bad = 0
    done = 0
    while done < pairs:
        k = min(chunk, pairs - done)
        i = rng.integers(0, len(elems), k)
        j = rng.integers(0, len(elems), k)
        prod = batch_matmul(elems[i], elems[j], F)
        bad += int(np.sum(batch_fixed_dim(prod, F) < dims[i] + dims[j] - n))
        done += k
    return bad


# -- primitive prime divisors --------------------------------------------------------

def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % p == 0:
            return m == p
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def multiplicative_order(q: int, l: int) -> int:
    k, x = 1, q % l
    while x != 1:
        x = x * q % l
        k += 1
    return k


def zsygmondy_prime(q: int, e: int) -> int | None:
    """Smallest prime l with ord_l(q) = e, or None.

    Such primes are exactly the prime divisors of Phi_e(q) not dividing e, and
    all of them are 1 mod e.
    """
    if q < 2 or e < 1:
        raise ValueError("need q >= 2 and e >= 1")
    phi = cyclotomic(e)
    N = sum(c * q**i for i, c in enumerate(phi))
    for p in range(2, e + 1):
        if e % p == 0 and _is_prime(p):
            while N % p == 0:
                N //= p
    if N == 1:
        return None
    l = e + 1
    while l * l <= N:
        if N % l == 0 and _is_prime(l):
            break
        l += e
    else:
        l = N
    if multiplicative_order(q, l) != e:
        raise AssertionError(f"{l} is not a primitive divisor of {q}^{e} - 1")
    return l
