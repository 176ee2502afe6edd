"""Exact gaps in the set E(A, B) of weighted Egyptian numbers.

Every c > 0 has a largest element of E strictly below it (E has no strictly
increasing sequence converging upward), so the gap below c is computed, not
estimated: the predecessor is found by branch-and-bound and the search itself
is the proof that nothing lies between it and c.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from egyptian.arith import as_rational, floor, rat_format
from egyptian.engine import (
    BudgetExceeded,
    Problem,
    Representation,
    SignedRepresentation,
    _Budget,
    _candidates,
    _floor_element,
    _local_a_star,
    _max_reachable,
    _twins,
    first_representation,
)
from egyptian.sets import ZERO


@dataclass(frozen=True)
class GapCertificate:
    """``(c - delta, c)`` contains no element of E(A, B).

    ``bound_trace`` lists, per search depth, the loosest ``(gap, bound)`` pair
    used: every element above the predecessor had to have its least remaining
    denominator at most ``bound``.  Re-checking with those caps needs no search.
    """

    c: Fraction
    predecessor: Fraction | None
    predecessor_witness: Representation | None
    delta: Fraction
    nodes_expanded: int
    bound_trace: tuple
    c_in_set: bool | None = None

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("gap certificate needs delta > 0")
        if self.predecessor is None:
            if self.delta != self.c:
                raise ValueError("without a predecessor delta must equal c")
        elif self.predecessor + self.delta != self.c or self.predecessor_witness is None:
            raise ValueError("inconsistent gap certificate")

    def to_json(self) -> dict:
        return {
            "c": rat_format(self.c),
            "predecessor": None if self.predecessor is None else rat_format(self.predecessor),
            "predecessor_witness": (
                None if self.predecessor_witness is None else self.predecessor_witness.to_json()
            ),
            "delta": rat_format(self.delta),
            "c_in_set": self.c_in_set,
            "nodes_expanded": self.nodes_expanded,
            "bound_trace": [[rat_format(g), rat_format(b)] for g, b in self.bound_trace],
        }


class _PredecessorSearch:
    def __init__(self, p: Problem, c: Fraction, budget: _Budget):
        self.p = p
        self.c = c
        self.budget = budget
        self.best: Fraction | None = None
        self.best_rep: Representation | None = None
        self.trace: dict[int, tuple] = {}

    def _offer(self, value, entries):
        if value < self.c and (self.best is None or value > self.best):
            self.best = value
            self.best_rep = Representation(tuple(entries))

    def seed(self):
        # Deterministic doubling sweep: each term pushed below c / n.
        p, c = self.p, self.c
        for k in itertools.count():
            entries = []
            for A, B in zip(p.numerators, p.denominators):
                a = A.max
                entries.append((a, B.least_above(p.n * a * 2**k / c)))
            total = sum((a / b for a, b in entries), ZERO)
            if total < c:
                self._offer(total, entries)
                return

    def _complete(self, s: Fraction, R: tuple, prefix: tuple):
        """Some completion of the prefix with total in (s, c)."""
        p = self.p
        room = self.c - s
        entries = [None] * p.n
        for j, a, b in prefix:
            entries[j] = (a, b)
        total = s
        for j in R:
            a = p.numerators[j].max
            b = p.denominators[j].least_above(len(R) * a / room)
            entries[j] = (a, b)
            total += a / b
        self._offer(total, entries)

    def _note(self, depth, gap, bound):
        old = self.trace.get(depth)
        if old is None or bound > old[1]:
            self.trace[depth] = (gap, bound)

    def run(self, s: Fraction, R: tuple, last, prefix: tuple, depth: int = 0):
        self.budget.tick()
        p = self.p
        if s + _max_reachable(p, R, last) <= self.best:
            return
        if s >= self.best:
            self._complete(s, R, prefix)
        room = self.c - s
        if len(R) == 1:
            j = R[0]
            B = p.denominators[j]
            lowest = _floor_element(B, last, j)
            for a in p.numerators[j]:
                x = a / room
                b = lowest if lowest > x else B.least_above(x)
                entries = [None] * p.n
                for jj, aa, bb in prefix:
                    entries[jj] = (aa, bb)
                entries[j] = (a, b)
                self._offer(s + a / b, entries)
            return
        a_star = _local_a_star(p, R)
        self._note(depth, self.best - s, len(R) * a_star / (self.best - s))
        skip = _twins(p, R, last)
        for k, j in enumerate(R):
            if j in skip:
                continue
            rest = R[:k] + R[k + 1 :]
            A = p.numerators[j]
            for b in _candidates(p.denominators[j], last, j, None, A.elements[0] / room):
                # the incumbent only grows, so this bound only tightens
                if b > len(R) * a_star / (self.best - s):
                    break
                for a in A:
                    v = s + a / b
                    if v >= self.c:
                        break
                    self.run(v, rest, (b, j), prefix + ((j, a, b),), depth + 1)

    def trace_tuple(self) -> tuple:
        return tuple(self.trace[d] for d in sorted(self.trace))


def _search_predecessor(p: Problem, c: Fraction, budget: _Budget) -> _PredecessorSearch:
    s = _PredecessorSearch(p, c, budget)
    s.seed()
    s.run(ZERO, tuple(range(p.n)), None, ())
    return s


def predecessor(
    p: Problem, c, budget: int | None = None
) -> tuple[Fraction, Representation] | None:
    """The largest element of E(A, B) below c, with a representation of it.

    Raises BudgetExceeded if ``budget`` nodes do not suffice.
    """
    c = as_rational(c)
    if c <= 0:
        raise ValueError("predecessor needs c > 0")
    s = _search_predecessor(p, c, _Budget(budget))
    if s.best is None:
        return None
    return s.best, s.best_rep


def gap_below(p: Problem, c, budget: int | None = None) -> GapCertificate:
    c = as_rational(c)
    if c <= 0:
        raise ValueError("gap_below needs c > 0")
    b = _Budget(budget)
    s = _search_predecessor(p, c, b)
    member = first_representation(p, c, b)
    if s.best is None:
        pred, rep, delta = None, None, c
    else:
        pred, rep, delta = s.best, s.best_rep, c - s.best
    return GapCertificate(
        c=c,
        predecessor=pred,
        predecessor_witness=rep,
        delta=delta,
        nodes_expanded=b.used,
        bound_trace=s.trace_tuple(),
        c_in_set=member is not None,
    )


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with least denominator in the open interval (lo, hi), 0 <= lo < hi."""
    n = floor(lo) + 1
    if n < hi:
        return Fraction(n)
    base = floor(lo)
    a, b = lo - base, hi - base
    if a == 0:
        return base + Fraction(1, floor(1 / b) + 1)
    return base + 1 / simplest_between(1 / b, 1 / a)


def find_avoiding_subinterval(
    p: Problem, u, v, budget: int = 1_000_000
) -> tuple[Fraction, Fraction] | None:
    """A nonempty open subinterval of (u, v) containing no element of E(A, B).

    Returns None (unknown) when the node budget runs out first.
    """
    result, _ = avoid_with_stats(p, u, v, budget)
    return result


def avoid_with_stats(p: Problem, u, v, budget: int = 1_000_000):
    u, v = as_rational(u), as_rational(v)
    if not (0 <= u < v):
        raise ValueError("need 0 <= u < v")
    # Anchor on the simplest rational in the window when it is an element.
    e = simplest_between(u, v)
    probe = _Budget(budget // 2)
    try:
        hit = first_representation(p, e, probe)
    except BudgetExceeded:
        hit = None
    used = probe.used
    if hit is not None:
        target, lo_default = e, u
    else:
        # Otherwise the largest element below v bounds an element-free tail.
        target, lo_default = v, u
    bud = _Budget(budget - used)
    try:
        s = _search_predecessor(p, target, bud)
    except BudgetExceeded as exc:
        return None, {"nodes": used + exc.used, "anchor": None}
    lo = lo_default if s.best is None else max(lo_default, s.best)
    anchor = e if hit is not None else None
    return (lo, target), {"nodes": used + bud.used, "anchor": anchor}


def signed_probe(
    p: Problem, u, v, denominator_cap
) -> list[tuple[Fraction, SignedRepresentation]]:
    """Signed sums with every denominator <= cap whose value lies in (u, v).

    A finite window into E±, not a statement about all of E± ∩ (u, v).
    """
    u, v, cap = as_rational(u), as_rational(v), as_rational(denominator_cap)
    if not u < v:
        raise ValueError("need u < v")
    if cap <= 0:
        raise ValueError("denominator cap must be positive")
    choices = [
        [(a, b, e) for b in B.between(ZERO, cap) for a in A for e in (1, -1)]
        for A, B in zip(p.numerators, p.denominators)
    ]
    out = []
    for entries in itertools.product(*choices):
        val = sum((e * a / b for a, b, e in entries), ZERO)
        if u < val < v:
            out.append((val, SignedRepresentation(entries)))
    out.sort(key=lambda vr: (vr[0], vr[1].sort_key()))
    return out
