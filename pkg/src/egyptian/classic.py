"""Classical unit-fraction sums: splitting identities and distinct-denominator forms.

The two rewrites used everywhere here are

    1/k      = 1/(k+1) + 1/(k(k+1))
    2/(2k+1) = 1/(k+1) + 1/((k+1)(2k+1))

The first also covers a duplicated even denominator, since 2/(2k) = 1/k.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from egyptian.arith import ceil

DEFAULT_REWRITE_BUDGET = 10_000

_TERM_RE = re.compile(r"\A\s*(\d+)\s*(?:/\s*(\d+))?\s*\Z")


class InfeasibleConversion(ValueError):
    """No distinct-denominator sum of the requested length exists."""

    def __init__(self, message: str, value: Fraction, length: int):
        super().__init__(message)
        self.value = value
        self.length = length


class RewriteBudgetExceeded(RuntimeError):
    def __init__(self, denominators):
        super().__init__(f"rewrite budget exhausted at {sorted(denominators)}")
        self.denominators = tuple(sorted(denominators))


@dataclass(frozen=True)
class UnitFractionSum:
    """A multiset of unit-fraction denominators, kept sorted."""

    denominators: tuple

    def __init__(self, denominators: Iterable[int]):
        dens = tuple(sorted(int(b) for b in denominators))
        if any(b < 1 for b in dens):
            raise ValueError("unit fraction denominators must be positive integers")
        object.__setattr__(self, "denominators", dens)

    @property
    def value(self) -> Fraction:
        return sum((Fraction(1, b) for b in self.denominators), Fraction(0))

    @property
    def is_distinct(self) -> bool:
        return len(set(self.denominators)) == len(self.denominators)

    def __len__(self):
        return len(self.denominators)

    def __iter__(self):
        return iter(self.denominators)

    def format(self) -> str:
        return " + ".join(f"1/{b}" for b in self.denominators)

    @classmethod
    def parse(cls, text: str) -> UnitFractionSum:
        """Parse ``"1/2 + 1/3"``; a term ``a/b`` stands for a copies of 1/b."""
        dens = []
        for term in text.split("+"):
            m = _TERM_RE.match(term)
            if m is None:
                raise ValueError(f"malformed unit-fraction term {term!r}")
            a = int(m.group(1))
            b = int(m.group(2)) if m.group(2) is not None else 1
            if a < 1 or b < 1:
                raise ValueError(f"term {term.strip()!r} needs positive integers")
            dens.extend([b] * a)
        return cls(dens)


def split_unit(k: int) -> tuple[int, int]:
    if k < 1:
        raise ValueError("split_unit needs k >= 1")
    return k + 1, k * (k + 1)


def pair_merge_split(b: int) -> tuple[int, ...]:
    """Replace ``1/b + 1/b`` by distinct denominators with the same sum.

    b = 2 is the degenerate case ``2/2 = 1/1``: the single denominator (1,) is
    returned and the caller has lost one term.
    """
    if b < 2:
        raise ValueError("2/1 is not a unit fraction; pair_merge_split needs b >= 2")
    k, odd = divmod(b, 2)
    if odd:
        return k + 1, (k + 1) * b
    if k == 1:
        return (1,)
    return split_unit(k)


def distinct_representation(value: Fraction, length: int) -> tuple[int, ...] | None:
    """Lexicographically first strictly increasing denominators with the given sum.

    Exhaustive: None means no representation of that length exists.
    """
    value = Fraction(value)
    if length < 1 or value <= 0:
        return None

    def rec(t: Fraction, k: int, prev: int):
        if k == 1:
            if t.numerator == 1 and t.denominator > prev:
                return (t.denominator,)
            return None
        # the smallest of the k remaining terms is at least t/k
        b = max(prev + 1, ceil(1 / t))
        while b * t <= k:
            if sum(Fraction(1, b + i) for i in range(k)) < t:
                return None
            r = t - Fraction(1, b)
            if r > 0:
                tail = rec(r, k - 1, b)
                if tail is not None:
                    return (b,) + tail
            b += 1
        return None

    return rec(value, length, 0)


def _infeasible(value: Fraction, length: int) -> InfeasibleConversion:
    return InfeasibleConversion(
        f"no {length} distinct unit fractions sum to {value} (exhaustive search)", value, length
    )


def to_distinct(
    s: UnitFractionSum, budget: int = DEFAULT_REWRITE_BUDGET, trace: list | None = None
) -> UnitFractionSum:
    """Same sum, same length, pairwise distinct denominators.

    The largest duplicated denominator is rewritten first.  A duplicated 2
    merges into 1/1, and the lost term is restored by splitting the largest
    entry other than 1.  If the rewrites stall (a duplicated 1, or nothing left
    to split) an exhaustive search either supplies a distinct form or proves
    that none exists, in which case InfeasibleConversion is raised.
    """
    if len(s) < 1:
        raise ValueError("empty unit-fraction sum")
    value = s.value
    length = len(s)
    dens = Counter(s.denominators)
    if trace is not None:
        trace.append(tuple(sorted(dens.elements())))
    steps = 0
    while True:
        dups = [b for b, k in dens.items() if k > 1]
        if not dups:
            break
        b = max(dups)
        if b == 1:
            return _fallback(value, length)
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(dens.elements())
        dens[b] -= 2
        repl = pair_merge_split(b)
        dens.update(repl)
        if len(repl) == 1:
            rest = [d for d, k in dens.items() if k > 0 and d != 1]
            if not rest:
                return _fallback(value, length)
            m = max(rest)
            dens[m] -= 1
            dens.update(split_unit(m))
        dens = +dens
        current = tuple(sorted(dens.elements()))
        if UnitFractionSum(current).value != value:
            raise AssertionError(f"rewrite changed the sum: {current}")
        if trace is not None:
            trace.append(current)
    return UnitFractionSum(dens.elements())


def _fallback(value: Fraction, length: int) -> UnitFractionSum:
    found = distinct_representation(value, length)
    if found is None:
        raise _infeasible(value, length)
    return UnitFractionSum(found)


def extend_length(s: UnitFractionSum, n_prime: int) -> UnitFractionSum:
    """A distinct sum of length ``n_prime`` with the same value.

    The largest denominator m is split into m+1 and m(m+1), both larger than
    every other entry.  A lone 1/1 needs two extra slots (1 = 1/2 + 1/3 + 1/6);
    one extra slot is impossible since 1 is not a sum of two distinct unit
    fractions.
    """
    if not s.is_distinct:
        raise ValueError("extend_length needs distinct denominators")
    if n_prime < len(s):
        raise ValueError(f"cannot shorten a sum of length {len(s)} to {n_prime}")
    dens = list(s.denominators)
    while len(dens) < n_prime:
        m = max(dens)
        if m == 1:
            if n_prime - len(dens) < 2:
                found = distinct_representation(s.value, n_prime)
                if found is None:
                    raise _infeasible(s.value, n_prime)
                return UnitFractionSum(found)
            dens = [2, 3, 6]
            continue
        dens.remove(m)
        dens.extend(split_unit(m))
    return UnitFractionSum(dens)


def weighted_to_unit_sum(a: int, b: int) -> UnitFractionSum:
    if a < 1 or b < 1:
        raise ValueError("need positive integers")
    return UnitFractionSum([b] * a)


def weighted_rep_to_egyptian(r, budget: int = DEFAULT_REWRITE_BUDGET) -> UnitFractionSum:
    """Distinct-denominator form of a representation with positive integer coordinates."""
    dens = []
    for a, b in r.entries:
        a, b = Fraction(a), Fraction(b)
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError("weighted_rep_to_egyptian needs integer numerators and denominators")
        dens.extend(weighted_to_unit_sum(int(a), int(b)))
    return to_distinct(UnitFractionSum(dens), budget)


def greedy_expand(q) -> UnitFractionSum:
    """Greedy expansion: repeatedly take the largest unit fraction not exceeding the rest.

    Not one of the splitting rewrites; kept as an independent cross-check.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("greedy_expand needs 0 < q < 1")
    dens = []
    while q > 0:
        b = ceil(1 / q)
        dens.append(b)
        q -= Fraction(1, b)
    return UnitFractionSum(dens)
