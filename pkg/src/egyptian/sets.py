"""Numerator sets and symbolic infinite discrete denominator sets.

Denominator sets are never materialized.  Every descriptor generates a
strictly increasing, unbounded sequence of positive rationals, and consumers
only ever look at bounded windows of it through :meth:`Descriptor.between`
and :meth:`Descriptor.least_above`.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Iterator

from egyptian.arith import as_rational, ceil, floor, rat_format

ZERO = Fraction(0)

# Largest index range scanned when proving a polynomial is increasing.
POLY_MONOTONE_LIMIT = 10_000


class TriBool(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class NumeratorSet:
    elements: tuple

    def __init__(self, elements: Iterable):
        vals = sorted({as_rational(e) for e in elements})
        if not vals:
            raise ValueError("numerator set must be nonempty")
        if vals[0] <= 0:
            raise ValueError(f"numerators must be positive, got {rat_format(vals[0])}")
        object.__setattr__(self, "elements", tuple(vals))

    @property
    def max(self) -> Fraction:
        return self.elements[-1]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, q):
        return q in self.elements

    def to_json(self) -> list:
        return [rat_format(a) for a in self.elements]


class Descriptor:
    """An infinite discrete set of positive rationals, listed in increasing order.

    Subclasses implement :meth:`least_above`; the other queries have generic
    fallbacks built on it and are overridden where a closed form exists.
    """

    kind: ClassVar[str]

    def least_above(self, x: Fraction) -> Fraction:
        """The smallest element strictly greater than ``x``."""
        raise NotImplementedError

    def between(self, lo: Fraction, hi: Fraction) -> Iterator[Fraction]:
        """Elements ``e`` with ``lo < e <= hi``, ascending."""
        e = self.least_above(lo)
        while e <= hi:
            yield e
            e = self.least_above(e)

    def least_at_least(self, x: Fraction) -> Fraction:
        if self.contains(x):
            return Fraction(x)
        return self.least_above(x)

    def min_element(self) -> Fraction:
        return self.least_above(ZERO)

    def contains(self, q: Fraction) -> bool:
        if q <= 0:
            return False
        upto = list(self.between(ZERO, q))
        return bool(upto) and upto[-1] == q

    def scaled(self, lam: Fraction) -> Descriptor | None:
        """``{lam * b : b in self}`` as a descriptor, or None if not expressible."""
        return self if lam == 1 else None

    @property
    def integer_valued(self) -> bool:
        return False

    @property
    def integer_cofinal(self) -> bool:
        """True when the set contains every sufficiently large positive integer."""
        return False

    @property
    def scaling_closed(self) -> bool:
        """True when ``k * b`` is in the set for every element b and integer k >= 1."""
        return False

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Naturals(Descriptor):
    kind: ClassVar[str] = "naturals"

    def least_above(self, x):
        return Fraction(max(1, floor(Fraction(x)) + 1))

    def between(self, lo, hi):
        start = max(1, floor(Fraction(lo)) + 1)
        for k in range(start, floor(Fraction(hi)) + 1):
            yield Fraction(k)

    def contains(self, q):
        q = Fraction(q)
        return q.denominator == 1 and q >= 1

    def scaled(self, lam):
        lam = Fraction(lam)
        return self if lam == 1 else Arithmetic(lam, lam)

    integer_valued = True
    integer_cofinal = True
    scaling_closed = True

    def to_json(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class Arithmetic(Descriptor):
    """``first, first + step, first + 2*step, ...``"""

    kind: ClassVar[str] = "arithmetic"
    first: Fraction
    step: Fraction

    def __post_init__(self):
        object.__setattr__(self, "first", as_rational(self.first))
        object.__setattr__(self, "step", as_rational(self.step))
        if self.first <= 0 or self.step <= 0:
            raise ValueError("arithmetic descriptor needs positive first and step")

    def least_above(self, x):
        x = Fraction(x)
        if x < self.first:
            return self.first
        return self.first + (floor((x - self.first) / self.step) + 1) * self.step

    def between(self, lo, hi):
        hi = Fraction(hi)
        if hi < self.first:
            return
        e = self.least_above(lo)
        k = (e - self.first) / self.step
        k_hi = floor((hi - self.first) / self.step)
        for k in range(int(k), k_hi + 1):
            yield self.first + k * self.step

    def contains(self, q):
        q = Fraction(q)
        return q >= self.first and ((q - self.first) / self.step).denominator == 1

    def scaled(self, lam):
        lam = Fraction(lam)
        return Arithmetic(self.first * lam, self.step * lam)

    @property
    def integer_valued(self):
        return self.first.denominator == 1 and self.step.denominator == 1

    @property
    def integer_cofinal(self):
        return (1 / self.step).denominator == 1 and (self.first / self.step).denominator == 1

    @property
    def scaling_closed(self):
        return (self.first / self.step).denominator == 1

    def to_json(self):
        return {"kind": self.kind, "first": rat_format(self.first), "step": rat_format(self.step)}


@dataclass(frozen=True)
class Geometric(Descriptor):
    """``first, first*ratio, first*ratio**2, ...`` with ratio > 1."""

    kind: ClassVar[str] = "geometric"
    first: Fraction
    ratio: Fraction

    def __post_init__(self):
        object.__setattr__(self, "first", as_rational(self.first))
        object.__setattr__(self, "ratio", as_rational(self.ratio))
        if self.first <= 0:
            raise ValueError("geometric descriptor needs positive first")
        if self.ratio <= 1:
            raise ValueError("geometric descriptor needs ratio > 1")

    def least_above(self, x):
        e = self.first
        while e <= x:
            e *= self.ratio
        return e

    def contains(self, q):
        q = Fraction(q)
        e = self.first
        while e < q:
            e *= self.ratio
        return e == q

    def scaled(self, lam):
        return Geometric(self.first * Fraction(lam), self.ratio)

    @property
    def integer_valued(self):
        return self.first.denominator == 1 and self.ratio.denominator == 1

    def to_json(self):
        return {"kind": self.kind, "first": rat_format(self.first), "ratio": rat_format(self.ratio)}


def _poly_eval(coeffs, m):
    v = 0
    for c in coeffs:
        v = v * m + c
    return v


@dataclass(frozen=True)
class Polynomial(Descriptor):
    """Values P(1), P(2), ... of an integer polynomial; coefficients highest degree first."""

    kind: ClassVar[str] = "polynomial"
    coeffs: tuple

    def __post_init__(self):
        cs = []
        for c in self.coeffs:
            c = as_rational(c)
            if c.denominator != 1:
                raise ValueError("polynomial coefficients must be integers")
            cs.append(int(c))
        while cs and cs[0] == 0:
            cs.pop(0)
        object.__setattr__(self, "coeffs", tuple(cs))
        if len(cs) < 2:
            raise ValueError("polynomial descriptor needs degree >= 1")
        if cs[0] <= 0:
            raise ValueError("polynomial descriptor needs a positive leading coefficient")
        if _poly_eval(cs, 1) <= 0:
            raise ValueError("polynomial descriptor needs P(1) > 0")
        self._check_increasing()

    def _check_increasing(self):
        # D(m) = P(m+1) - P(m); past its Cauchy root bound D keeps the sign of its
        # leading coefficient, so scanning up to the bound proves monotonicity.
        if len(self.coeffs) == 2:
            return
        d_coeffs = _difference_coeffs(self.coeffs)
        lead = d_coeffs[0]
        bound = 1 + max(Fraction(abs(c), abs(lead)) for c in d_coeffs[1:])
        limit = ceil(bound)
        if limit > POLY_MONOTONE_LIMIT:
            raise ValueError(
                f"cannot verify polynomial is increasing within {POLY_MONOTONE_LIMIT} samples"
            )
        for m in range(1, limit + 1):
            if _poly_eval(d_coeffs, m) <= 0:
                raise ValueError(f"polynomial values not increasing at m={m}")

    def value(self, m: int) -> Fraction:
        return Fraction(_poly_eval(self.coeffs, m))

    def _first_index_above(self, x):
        if self.value(1) > x:
            return 1
        lo, hi = 1, 2
        while self.value(hi) <= x:
            lo, hi = hi, hi * 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.value(mid) > x:
                hi = mid
            else:
                lo = mid
        return hi

    def least_above(self, x):
        return self.value(self._first_index_above(Fraction(x)))

    def between(self, lo, hi):
        m = self._first_index_above(Fraction(lo))
        v = self.value(m)
        while v <= hi:
            yield v
            m += 1
            v = self.value(m)

    def contains(self, q):
        q = Fraction(q)
        if q.denominator != 1 or q <= 0:
            return False
        return self.least_above(q - 1) == q

    integer_valued = True

    def to_json(self):
        return {"kind": self.kind, "coeffs": [str(c) for c in self.coeffs]}


def _difference_coeffs(coeffs):
    """Coefficients (highest first) of P(m+1) - P(m)."""
    deg = len(coeffs) - 1
    low = list(reversed(coeffs))  # low[k] is the coefficient of m**k
    out = [0] * deg
    for k, c in enumerate(low):
        # (m+1)**k - m**k = sum_{i<k} C(k, i) m**i
        for i in range(k):
            out[i] += c * math.comb(k, i)
    return list(reversed(out))


@dataclass(frozen=True)
class Primes(Descriptor):
    kind: ClassVar[str] = "primes"

    def least_above(self, x):
        from sympy import nextprime

        x = Fraction(x)
        if x < 2:
            return Fraction(2)
        return Fraction(int(nextprime(floor(x))))

    def between(self, lo, hi):
        # the module-level primerange is lazy; sieve.primerange would first
        # extend the sieve all the way to hi
        from sympy import primerange

        for p in primerange(max(2, floor(Fraction(lo)) + 1), floor(Fraction(hi)) + 1):
            yield Fraction(int(p))

    def contains(self, q):
        from sympy import isprime

        q = Fraction(q)
        return q.denominator == 1 and isprime(q.numerator)

    integer_valued = True

    def to_json(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class WithPrefix(Descriptor):
    """A finite explicit prefix followed by the elements of ``tail``."""

    kind: ClassVar[str] = "with-prefix"
    prefix: tuple
    tail: Descriptor

    def __post_init__(self):
        pre = tuple(as_rational(p) for p in self.prefix)
        object.__setattr__(self, "prefix", pre)
        if not isinstance(self.tail, Descriptor):
            raise ValueError("with-prefix tail must be a descriptor")
        if any(p <= 0 for p in pre):
            raise ValueError("prefix elements must be positive")
        if any(a >= b for a, b in zip(pre, pre[1:])):
            raise ValueError("prefix must be strictly increasing")
        if pre and pre[-1] >= self.tail.min_element():
            raise ValueError("prefix must lie below the tail's least element")

    def least_above(self, x):
        i = bisect.bisect_right(self.prefix, x)
        if i < len(self.prefix):
            return self.prefix[i]
        return self.tail.least_above(x)

    def between(self, lo, hi):
        for p in self.prefix:
            if lo < p <= hi:
                yield p
        yield from self.tail.between(lo, hi)

    def contains(self, q):
        return q in self.prefix or self.tail.contains(q)

    def scaled(self, lam):
        lam = Fraction(lam)
        if lam == 1:
            return self
        tail = self.tail.scaled(lam)
        if tail is None:
            return None
        return WithPrefix(tuple(p * lam for p in self.prefix), tail)

    @property
    def integer_valued(self):
        return all(p.denominator == 1 for p in self.prefix) and self.tail.integer_valued

    @property
    def integer_cofinal(self):
        return self.tail.integer_cofinal

    def to_json(self):
        return {
            "kind": self.kind,
            "prefix": [rat_format(p) for p in self.prefix],
            "tail": self.tail.to_json(),
        }


REGISTRY: dict[str, type] = {
    cls.kind: cls for cls in (Naturals, Arithmetic, Geometric, Polynomial, Primes, WithPrefix)
}


def descriptor_from_json(obj: dict) -> Descriptor:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"descriptor object needs a 'kind' field: {obj!r}")
    kind = obj["kind"]
    if kind == "naturals":
        return Naturals()
    if kind == "primes":
        return Primes()
    if kind == "arithmetic":
        return Arithmetic(obj["first"], obj["step"])
    if kind == "geometric":
        return Geometric(obj["first"], obj["ratio"])
    if kind == "polynomial":
        return Polynomial(tuple(obj["coeffs"]))
    if kind == "with-prefix":
        return WithPrefix(tuple(obj["prefix"]), descriptor_from_json(obj["tail"]))
    raise ValueError(f"unknown descriptor kind {kind!r}")


def elements_upto(d: Descriptor, x) -> list[Fraction]:
    x = as_rational(x)
    if x < 0:
        raise ValueError("elements_upto needs a nonnegative bound")
    return list(d.between(ZERO, x))


def min_element(d: Descriptor) -> Fraction:
    return d.min_element()


def contains(d: Descriptor, q) -> bool:
    return d.contains(as_rational(q))


def _split_prefix(d: Descriptor) -> tuple[tuple, Descriptor]:
    prefix: tuple = ()
    while isinstance(d, WithPrefix):
        prefix += d.prefix
        d = d.tail
    return prefix, d


def _normalize(d: Descriptor) -> Descriptor:
    return Arithmetic(1, 1) if isinstance(d, Naturals) else d


def _geometric_power(q: Fraction, r: Fraction) -> bool:
    """Is q an integer power (any sign) of r > 1?"""
    if q < 1:
        q = 1 / q
    while q > 1:
        q /= r
    return q == 1


def _decide_tails(d1: Descriptor, d2: Descriptor) -> TriBool:
    # NO from this function always means the two sets are disjoint.
    n1, n2 = _normalize(d1), _normalize(d2)
    if n1 == n2:
        return TriBool.YES
    if isinstance(n1, Arithmetic) and isinstance(n2, Arithmetic):
        den = math.lcm(
            n1.first.denominator, n1.step.denominator, n2.first.denominator, n2.step.denominator
        )
        s1 = int(n1.step * den)
        s2 = int(n2.step * den)
        delta = int((n2.first - n1.first) * den)
        # One common point forces infinitely many: shift by lcm of the steps.
        return TriBool.YES if delta % math.gcd(s1, s2) == 0 else TriBool.NO
    if isinstance(n1, Geometric) and isinstance(n2, Geometric) and n1.ratio == n2.ratio:
        same = _geometric_power(n2.first / n1.first, n1.ratio)
        return TriBool.YES if same else TriBool.NO
    if (d1.integer_cofinal and d2.integer_valued) or (d2.integer_cofinal and d1.integer_valued):
        return TriBool.YES
    return TriBool.UNKNOWN


def infinite_common_intersection(d1: Descriptor, d2: Descriptor) -> TriBool:
    """Three-valued test for ``d1 ∩ d2`` being infinite.

    YES and NO are only returned with a proof; everything else is UNKNOWN.
    """
    _, t1 = _split_prefix(d1)
    _, t2 = _split_prefix(d2)
    return _decide_tails(t1, t2)


def common_elements_if_finite(d1: Descriptor, d2: Descriptor) -> list[Fraction] | None:
    """All of ``d1 ∩ d2`` when it is provably finite, else None."""
    p1, t1 = _split_prefix(d1)
    p2, t2 = _split_prefix(d2)
    if _decide_tails(t1, t2) is not TriBool.NO:
        return None
    common = {p for p in p1 if d2.contains(p)} | {p for p in p2 if d1.contains(p)}
    return sorted(common)
