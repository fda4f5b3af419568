"""Exact arithmetic in the multiquadratic field Q(sqrt(d) : d squarefree, possibly negative).

A :class:`QuadNumber` is a finite rational combination of basis elements
``i^e * sqrt(m)`` with ``m`` squarefree positive and ``e`` in {0, 1}.  These are
linearly independent over Q, so equality is coefficientwise.  This is enough for
A_n character values, which live in Q(sqrt(D)) with a class-dependent D.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


@lru_cache(maxsize=None)
def squarefree_split(m: int) -> tuple[int, int]:
    """Write m > 0 as k^2 * s with s squarefree; return (k, s)."""
    k, s = 1, 1
    rest = m
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1
    s *= rest
    return k, s


class QuadNumber:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: {(m, e): Fraction}, zero coefficients dropped
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def rational(cls, q) -> "QuadNumber":
        return cls({(1, 0): Fraction(q)})

    @classmethod
    def sqrt(cls, d: int) -> "QuadNumber":
        """The principal square root of an integer d (i*sqrt|d| when d < 0)."""
        if d == 0:
            return cls()
        k, s = squarefree_split(abs(d))
        return cls({(s, 1 if d < 0 else 0): Fraction(k)})

    @classmethod
    def from_parts(cls, a, b, d: int) -> "QuadNumber":
        """a + b*sqrt(d)."""
        return cls.rational(a) + cls.sqrt(d) * b

    @staticmethod
    def coerce(x) -> "QuadNumber":
        if isinstance(x, QuadNumber):
            return x
        if isinstance(x, (int, Rational)):
            return QuadNumber.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadNumber")

    def is_rational(self) -> bool:
        return all(k == (1, 0) for k in self.terms)

    def rational_part(self) -> Fraction:
        return self.terms.get((1, 0), Fraction(0))

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.rational_part()

    def as_parts(self) -> tuple[Fraction, Fraction, int]:
        """Return (a, b, D) with self == a + b*sqrt(D); requires at most one radical."""
        irr = [(k, v) for k, v in self.terms.items() if k != (1, 0)]
        if len(irr) > 1:
            raise ValueError(f"{self} has more than one radical")
        if not irr:
            return self.rational_part(), Fraction(0), 1
        (m, e), b = irr[0]
        return self.rational_part(), b, -m if e else m

    def conjugate(self) -> "QuadNumber":
        """Complex conjugate: flips the sign of the i*sqrt(m) components."""
        return QuadNumber({k: (-v if k[1] else v) for k, v in self.terms.items()})

    def __complex__(self) -> complex:
        z = 0j
        for (m, e), v in self.terms.items():
            z += float(v) * (m ** 0.5) * (1j if e else 1)
        return z

    def __abs__(self) -> float:
        return abs(complex(self))

    def __add__(self, other):
        try:
            other = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return QuadNumber(out)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-QuadNumber.coerce(other))

    def __rsub__(self, other):
        return QuadNumber.coerce(other) - self

    def __mul__(self, other):
        try:
            other = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for (m1, e1), v1 in self.terms.items():
            for (m2, e2), v2 in other.terms.items():
                k, s = squarefree_split(m1 * m2)
                coeff = v1 * v2 * k
                e = e1 + e2
                if e == 2:
                    coeff, e = -coeff, 0
                key = (s, e)
                out[key] = out.get(key, 0) + coeff
        return QuadNumber(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadNumber):
            if not other.is_rational():
                raise ValueError("division by an irrational QuadNumber is not supported")
            other = other.rational_part()
        return QuadNumber({k: v / Fraction(other) for k, v in self.terms.items()})

    def __eq__(self, other):
        try:
            other = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_part())
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, e), v in sorted(self.terms.items()):
            rad = "" if m == 1 else f"sqrt({m})"
            unit = "i" if e else ""
            basis = "*".join(x for x in (unit, rad) if x)
            parts.append(f"{v}" + (f"*{basis}" if basis else ""))
        return " + ".join(parts)


def conj(x):
    """Complex conjugate for ints, Fractions, and QuadNumbers."""
    if isinstance(x, QuadNumber):
        return x.conjugate()
    return x
