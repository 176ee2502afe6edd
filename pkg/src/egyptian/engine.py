"""Enumeration and counting of weighted Egyptian representations.

Positions are 0-based throughout the Python API.

Both searches build each representation in a canonical order: the entries are
chosen by increasing ``(b, position)``.  At a node with residual ``t`` and
remaining positions ``R`` the smallest remaining denominator is at most
``|R| * a_star / |t|``, which makes every node's branching finite whenever
``t != 0``.  The ordering also means each tuple is produced at exactly one
leaf, so counts need no deduplication.
"""

from __future__ import annotations

import heapq
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from egyptian.arith import as_rational, rat_format
from egyptian.sets import (
    ZERO,
    Descriptor,
    NumeratorSet,
    TriBool,
    common_elements_if_finite,
    descriptor_from_json,
    infinite_common_intersection,
)

# Node budget handed to auxiliary searches that look for one zero-sum solution.
ZERO_PROBE_NODES = 20_000
PROBLEM_FILE_VERSION = 1


class BudgetExceeded(RuntimeError):
    def __init__(self, used: int):
        super().__init__(f"search budget exhausted after {used} nodes")
        self.used = used


class InvalidProblem(ValueError):
    pass


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.used)

    def child(self, cap: int) -> _Budget:
        room = cap if self.limit is None else max(0, min(cap, self.limit - self.used))
        return _Budget(room)

    def absorb(self, other: _Budget):
        self.used += other.used


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class Problem:
    numerators: tuple
    denominators: tuple
    a_star: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nums = tuple(a if isinstance(a, NumeratorSet) else NumeratorSet(a) for a in self.numerators)
        dens = tuple(self.denominators)
        if not nums:
            raise InvalidProblem("a problem needs at least one position")
        if len(nums) != len(dens):
            raise InvalidProblem(f"{len(nums)} numerator sets but {len(dens)} denominator sets")
        for d in dens:
            if not isinstance(d, Descriptor):
                raise InvalidProblem(f"not a denominator descriptor: {d!r}")
        object.__setattr__(self, "numerators", nums)
        object.__setattr__(self, "denominators", dens)
        object.__setattr__(self, "a_star", max(a.max for a in nums))

    @classmethod
    def unit(cls, n: int) -> Problem:
        """Classical Egyptian numbers of length n: all numerators 1, all denominators N."""
        from egyptian.sets import Naturals

        return cls(tuple(NumeratorSet([1]) for _ in range(n)), tuple(Naturals() for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.numerators)

    def restrict(self, positions: Iterable[int]) -> Problem:
        idx = positions.indices if isinstance(positions, IndexTuple) else tuple(positions)
        return Problem(
            tuple(self.numerators[i] for i in idx), tuple(self.denominators[i] for i in idx)
        )

    def to_json(self) -> dict:
        return {
            "version": PROBLEM_FILE_VERSION,
            "n": self.n,
            "numerators": [a.to_json() for a in self.numerators],
            "denominators": [d.to_json() for d in self.denominators],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Problem:
        try:
            version = obj.get("version", PROBLEM_FILE_VERSION)
            if version != PROBLEM_FILE_VERSION:
                raise InvalidProblem(f"unsupported problem file version {version}")
            n = obj["n"]
            nums, dens = obj["numerators"], obj["denominators"]
            if not (isinstance(n, int) and n >= 1 and len(nums) == n and len(dens) == n):
                raise InvalidProblem("n must match the lengths of numerators and denominators")
            return cls(
                tuple(NumeratorSet(a) for a in nums), tuple(descriptor_from_json(d) for d in dens)
            )
        except InvalidProblem:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidProblem(f"invalid problem: {exc}") from exc


@dataclass(frozen=True, order=True)
class Representation:
    """Entries ``(a_i, b_i)`` in position order."""

    entries: tuple

    def sort_key(self):
        return tuple(x for a, b in self.entries for x in (b, a))

    @property
    def value(self) -> Fraction:
        return sum((a / b for a, b in self.entries), ZERO)

    def to_json(self) -> list:
        return [[rat_format(a), rat_format(b)] for a, b in self.entries]


@dataclass(frozen=True)
class SignedRepresentation:
    """Entries ``(a_i, b_i, eps_i)`` in position order, eps in {+1, -1}."""

    entries: tuple

    def sort_key(self):
        return tuple(x for a, b, e in self.entries for x in (b, a, -e))

    @property
    def value(self) -> Fraction:
        return sum((e * a / b for a, b, e in self.entries), ZERO)

    def to_json(self) -> list:
        return [[rat_format(a), rat_format(b), e] for a, b, e in self.entries]


@dataclass(frozen=True)
class IndexTuple:
    """A strictly increasing selection of positions out of ``range(n)``."""

    indices: tuple
    n: int

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        if any(i >= j for i, j in zip(idx, idx[1:])):
            raise ValueError("indices must be strictly increasing")
        if idx and (idx[0] < 0 or idx[-1] >= self.n):
            raise ValueError("index out of range")

    @property
    def complement(self) -> IndexTuple:
        return IndexTuple(tuple(i for i in range(self.n) if i not in self.indices), self.n)

    def __len__(self):
        return len(self.indices)


def value_of(r: Representation | SignedRepresentation) -> Fraction:
    return r.value


def check_representation(p: Problem, r: Representation | SignedRepresentation) -> bool:
    """Coordinate membership of every entry (used before anything is emitted)."""
    if len(r.entries) != p.n:
        return False
    for entry, A, B in zip(r.entries, p.numerators, p.denominators):
        a, b = entry[0], entry[1]
        if a not in A or not B.contains(b):
            return False
        if len(entry) == 3 and entry[2] not in (1, -1):
            return False
    return True


# ---------------------------------------------------------------------------
# infinite zero-sum families


@dataclass(frozen=True)
class ZeroFamily:
    """An infinite family of signed representations sharing one value.

    ``fixed`` holds ``(position, a, b, eps)`` entries common to every member.
    kind ``"pair"``: positions ``i, j`` carry ``a_i/b_i - a_j/b_j`` with
    ``b_i = (a_i/a_j) * b_j``, b_i running over ``B_i`` ∩ ``(a_i/a_j) B_j``.
    kind ``"scaling"``: ``base`` is a zero-sum solution whose denominators are
    multiplied by k = 1, 2, 3, ...; every descriptor involved is closed under
    integer scaling.
    """

    n: int
    kind: str
    fixed: tuple
    pair: tuple = ()
    descriptors: tuple = ()
    base: tuple = ()

    def members(self, count: int) -> list[SignedRepresentation]:
        out = []
        for extra in itertools.islice(self._extras(), count):
            entries = [None] * self.n
            for pos, a, b, e in self.fixed + extra:
                entries[pos] = (a, b, e)
            out.append(SignedRepresentation(tuple(entries)))
        return out

    def _extras(self) -> Iterator[tuple]:
        if self.kind == "pair":
            i, a_i, j, a_j = self.pair
            B_i, B_j = self.descriptors
            lam = a_i / a_j
            b = ZERO
            while True:
                b = B_i.least_above(b)
                if B_j.contains(b / lam):
                    yield ((i, a_i, b, 1), (j, a_j, b / lam, -1))
        else:
            for k in itertools.count(1):
                yield tuple((pos, a, b * k, e) for pos, a, b, e in self.base)

    def describe(self) -> str:
        fixed = ", ".join(
            f"[{pos}]={'+' if e > 0 else '-'}{rat_format(a)}/{rat_format(b)}"
            for pos, a, b, e in self.fixed
        )
        if self.kind == "pair":
            i, a_i, j, a_j = self.pair
            core = (
                f"+{rat_format(a_i)}/b at [{i}] and -{rat_format(a_j)}/b' at [{j}]"
                f" with b = {rat_format(a_i / a_j)}*b'"
            )
        else:
            base = ", ".join(
                f"[{pos}]={'+' if e > 0 else '-'}{rat_format(a)}/({rat_format(b)}k)"
                for pos, a, b, e in self.base
            )
            core = f"{base} for k = 1, 2, 3, ..."
        return core + (f"; fixed {fixed}" if fixed else "")

    def to_json(self, sample: int = 10) -> dict:
        return {
            "kind": self.kind,
            "description": self.describe(),
            "first_members": [m.to_json() for m in self.members(sample)],
        }


@dataclass(frozen=True)
class Finite:
    count: int
    max_bound: Fraction | None = None

    tag = "finite"


@dataclass(frozen=True)
class Infinite:
    witness: ZeroFamily

    tag = "infinite"


@dataclass(frozen=True)
class BudgetExhausted:
    found_so_far: int

    tag = "budget-exhausted"


Classification = Union[Finite, Infinite, BudgetExhausted]


# ---------------------------------------------------------------------------
# shared search helpers


def min_denominator_bound(t, remaining: int, a_star) -> Fraction:
    """Upper bound on the least denominator of ``remaining`` terms summing to at least t."""
    t, a_star = as_rational(t), as_rational(a_star)
    if t <= 0:
        raise ValueError("residual must be positive")
    if remaining < 1 or a_star <= 0:
        raise ValueError("need remaining >= 1 and a_star > 0")
    return remaining * a_star / t


def _after(last, j: int, b: Fraction) -> bool:
    """Is ``(b, j)`` lexicographically after the last chosen ``(b, position)``?"""
    if last is None:
        return True
    lb, lj = last
    return b > lb or (b == lb and j > lj)


def _floor_element(d: Descriptor, last, j: int) -> Fraction:
    if last is None:
        return d.min_element()
    lb, lj = last
    if j > lj and d.contains(lb):
        return lb
    return d.least_above(lb)


def _candidates(d: Descriptor, last, j: int, hi, above=None) -> Iterator[Fraction]:
    """Elements of d allowed after ``last`` at position j and strictly above ``above``,
    up to hi (None = unbounded), ascending."""
    if last is None:
        lo, inclusive = ZERO, False
    else:
        lo, lj = last
        inclusive = j > lj
    if above is not None and above >= lo:
        lo, inclusive = above, False
    if inclusive and d.contains(lo):
        if hi is not None and lo > hi:
            return
        yield lo
    if hi is not None:
        yield from d.between(lo, hi)
        return
    e = lo
    while True:
        e = d.least_above(e)
        yield e


def _tagged(stream, j):
    for b in stream:
        yield b, j


def _max_reachable(p: Problem, R: Sequence[int], last) -> Fraction:
    return sum(
        (p.numerators[j].max / _floor_element(p.denominators[j], last, j) for j in R), ZERO
    )


def _local_a_star(p: Problem, R: Sequence[int]) -> Fraction:
    return max(p.numerators[j].max for j in R)


def _twins(p: Problem, R: Sequence[int], last) -> set:
    """Positions of R whose branches only repeat values of an identical earlier position.

    Swapping two positions with equal numerator and denominator sets maps a
    canonical tuple to another canonical tuple of the same value, so searches
    that only care about values may branch on the first of the two.  The
    earlier twin must itself be free of the floor constraint.
    """
    skip = set()
    for k, j in enumerate(R):
        for i in R[:k]:
            if (
                (last is None or i > last[1])
                and p.numerators[i] == p.numerators[j]
                and p.denominators[i] == p.denominators[j]
            ):
                skip.add(j)
                break
    return skip


# ---------------------------------------------------------------------------
# unsigned search


class _Found(Exception):
    def __init__(self, rep):
        self.rep = rep


class _UnsignedSearch:
    def __init__(self, p: Problem, budget: _Budget | None = None, first_only: bool = False):
        self.p = p
        self.budget = budget or _Budget()
        self.first_only = first_only
        self.found: list[Representation] = []

    def _emit(self, prefix):
        entries = [None] * self.p.n
        for j, a, b in prefix:
            entries[j] = (a, b)
        rep = Representation(tuple(entries))
        if self.first_only:
            raise _Found(rep)
        self.found.append(rep)

    def run(self, t: Fraction, R: tuple, last, prefix: tuple):
        self.budget.tick()
        p = self.p
        if len(R) == 1:
            j = R[0]
            B = p.denominators[j]
            for a in p.numerators[j]:
                b = a / t
                if _after(last, j, b) and B.contains(b):
                    self._emit(prefix + ((j, a, b),))
            return
        if _max_reachable(p, R, last) < t:
            return
        bound = min_denominator_bound(t, len(R), _local_a_star(p, R))
        skip = _twins(p, R, last) if self.first_only else ()
        for k, j in enumerate(R):
            if j in skip:
                continue
            rest = R[:k] + R[k + 1 :]
            A = p.numerators[j]
            for b in _candidates(p.denominators[j], last, j, bound, A.elements[0] / t):
                for a in A:
                    r = t - a / b
                    if r <= 0:
                        break
                    self.run(r, rest, (b, j), prefix + ((j, a, b),))

    def top_branches(self, t: Fraction):
        """First-level branches ``(r, rest, last, prefix)`` of the root node."""
        p = self.p
        R = tuple(range(p.n))
        bound = min_denominator_bound(t, len(R), p.a_star)
        out = []
        for k, j in enumerate(R):
            rest = R[:k] + R[k + 1 :]
            A = p.numerators[j]
            for b in _candidates(p.denominators[j], None, j, bound, A.elements[0] / t):
                for a in A:
                    r = t - a / b
                    if r <= 0:
                        break
                    out.append((r, rest, (b, j), ((j, a, b),)))
        return out


def _run_branches(p: Problem, branches) -> list[Representation]:
    s = _UnsignedSearch(p)
    for r, rest, last, prefix in branches:
        s.run(r, rest, last, prefix)
    return s.found


def enumerate_representations(p: Problem, c, workers: int = 1) -> list[Representation]:
    """All ``(a_i, b_i)`` tuples with ``sum a_i/b_i == c``, ordered by ``(b1, a1, b2, a2, ...)``.

    With ``workers > 1`` the root's branches are split across processes; the
    merged output is re-sorted so it does not depend on the worker count.
    """
    c = as_rational(c)
    if c <= 0:
        return []
    s = _UnsignedSearch(p)
    if workers <= 1 or p.n == 1:
        s.run(c, tuple(range(p.n)), None, ())
        found = s.found
    else:
        s.budget.tick()
        branches = s.top_branches(c)
        chunks = [branches[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_branches, [p] * workers, chunks)
            found = [r for part in parts for r in part]
    return sorted(found, key=Representation.sort_key)


def count_representations(p: Problem, c, workers: int = 1) -> int:
    return len(enumerate_representations(p, c, workers=workers))


def first_representation(p: Problem, c: Fraction, budget: _Budget) -> Representation | None:
    if c <= 0:
        return None
    s = _UnsignedSearch(p, budget, first_only=True)
    try:
        s.run(c, tuple(range(p.n)), None, ())
    except _Found as f:
        return f.rep
    return None


def find_representation(p: Problem, c, budget: int | None = None) -> Representation | None:
    """Some representation of c, or None if there is none.  Raises BudgetExceeded."""
    return first_representation(p, as_rational(c), _Budget(budget))


# ---------------------------------------------------------------------------
# signed search


class _InfiniteFound(Exception):
    def __init__(self, family: ZeroFamily):
        self.family = family


def _pair_decisions(p: Problem, i: int, j: int):
    """Per numerator pair, whether ``B_i ∩ (a_i/a_j) B_j`` is infinite.

    Yields ``(a_i, a_j, decision, finite_common)`` where finite_common lists the
    shared b_i when the intersection is provably finite.
    """
    B_i, B_j = p.denominators[i], p.denominators[j]
    for a_i in p.numerators[i]:
        for a_j in p.numerators[j]:
            lam = a_i / a_j
            scaled_j = B_j.scaled(lam)
            if scaled_j is not None:
                left, right = B_i, scaled_j
            else:
                scaled_i = B_i.scaled(1 / lam)
                if scaled_i is None:
                    yield a_i, a_j, TriBool.UNKNOWN, None
                    continue
                # compare in B_j's scale, convert back to b_i afterwards
                left, right = scaled_i, B_j
            decision = infinite_common_intersection(left, right)
            common = None
            if decision is TriBool.NO:
                common = common_elements_if_finite(left, right)
                if common is not None and left is not B_i:
                    common = [x * lam for x in common]
                if common is None:
                    decision = TriBool.UNKNOWN
            yield a_i, a_j, decision, common


def classify_signed_zero_pair(p: Problem, i: int, j: int) -> TriBool:
    """Is the number of signed zero-sums ``±a_i/b_i ± a_j/b_j = 0`` infinite?

    Two opposite-signed terms cancel exactly when ``b_i = (a_i/a_j) b_j``, so the
    answer is decided per numerator pair by intersecting ``B_i`` with a scaled
    copy of ``B_j``.  NO is only returned when every such intersection is
    provably finite.
    """
    if not (0 <= i < p.n and 0 <= j < p.n) or i == j:
        raise IndexError(f"need two distinct positions in range({p.n}), got {i}, {j}")
    decisions = [d for _, _, d, _ in _pair_decisions(p, i, j)]
    if TriBool.YES in decisions:
        return TriBool.YES
    if all(d is TriBool.NO for d in decisions):
        return TriBool.NO
    return TriBool.UNKNOWN


class _SignedSearch:
    def __init__(self, p: Problem, budget: _Budget, first_only: bool = False):
        self.p = p
        self.budget = budget
        self.first_only = first_only
        self.found: list[SignedRepresentation] = []
        self.max_bound = ZERO

    def _note(self, b):
        if b > self.max_bound:
            self.max_bound = b

    def _emit(self, prefix):
        entries = [None] * self.p.n
        for j, a, b, e in prefix:
            entries[j] = (a, b, e)
        rep = SignedRepresentation(tuple(entries))
        if self.first_only:
            raise _Found(rep)
        self.found.append(rep)

    def run(self, t: Fraction, R: tuple, last, prefix: tuple):
        self.budget.tick()
        p = self.p
        if not R:
            if t == 0:
                self._emit(prefix)
            return
        if t == 0:
            self._zero_node(R, last, prefix)
            return
        sign = 1 if t > 0 else -1
        mag = abs(t)
        if len(R) == 1:
            j = R[0]
            B = p.denominators[j]
            for a in p.numerators[j]:
                b = a / mag
                self._note(b)
                if _after(last, j, b) and B.contains(b):
                    self._emit(prefix + ((j, a, b, sign),))
            return
        if _max_reachable(p, R, last) < mag:
            return
        bound = min_denominator_bound(mag, len(R), _local_a_star(p, R))
        self._note(bound)
        for k, j in enumerate(R):
            rest = R[:k] + R[k + 1 :]
            for b in _candidates(p.denominators[j], last, j, bound):
                for a in p.numerators[j]:
                    for e in (1, -1):
                        self.run(t - e * a / b, rest, (b, j), prefix + ((j, a, b, e),))

    def _zero_node(self, R: tuple, last, prefix: tuple):
        if len(R) == 1:
            return  # a single signed term is never zero
        family = self._zero_family(R, prefix)
        if family is not None:
            if self.first_only:
                raise _Found(family.members(1)[0])
            raise _InfiniteFound(family)
        if len(R) == 2:
            i, j = R
            decisions = list(_pair_decisions(self.p, i, j))
            if all(d is TriBool.NO for _, _, d, _ in decisions):
                sols = []
                for a_i, a_j, _, common in decisions:
                    for b_i in common:
                        b_j = b_i * a_j / a_i
                        if _after(last, i, b_i) and _after(last, j, b_j):
                            self._note(max(b_i, b_j))
                            for e in (1, -1):
                                sols.append(prefix + ((i, a_i, b_i, e), (j, a_j, b_j, -e)))
                for s in sols:
                    self._emit(s)
                return
        self._unbounded_zero(R, last, prefix)

    def _unbounded_zero(self, R: tuple, last, prefix: tuple):
        # No pigeonhole bound exists for a zero target: walk the least remaining
        # denominator upward until the budget runs out.
        p = self.p
        streams = [_tagged(_candidates(p.denominators[j], last, j, None), j) for j in R]
        for b, j in heapq.merge(*streams):
            self.budget.tick()
            rest = tuple(k for k in R if k != j)
            for a in p.numerators[j]:
                for e in (1, -1):
                    self.run(-e * a / b, rest, (b, j), prefix + ((j, a, b, e),))

    def _zero_family(self, R: tuple, prefix: tuple) -> ZeroFamily | None:
        p = self.p
        fixed = tuple(prefix)
        for i, j in itertools.combinations(R, 2):
            yes = next(
                ((a_i, a_j) for a_i, a_j, d, _ in _pair_decisions(p, i, j) if d is TriBool.YES),
                None,
            )
            if yes is None:
                continue
            rest = tuple(k for k in R if k not in (i, j))
            if len(rest) == 1:
                continue
            extra = ()
            if rest:
                sol = self._probe_zero(rest)
                if sol is None:
                    continue
                extra = sol
            return ZeroFamily(
                n=p.n,
                kind="pair",
                fixed=fixed + extra,
                pair=(i, yes[0], j, yes[1]),
                descriptors=(p.denominators[i], p.denominators[j]),
            )
        # probes run in first_only mode; skipping this there avoids re-probing R itself
        if (
            not self.first_only
            and len(R) >= 3
            and all(p.denominators[k].scaling_closed for k in R)
        ):
            sol = self._probe_zero(R)
            if sol is not None:
                return ZeroFamily(n=p.n, kind="scaling", fixed=fixed, base=sol)
        return None

    def _probe_zero(self, R: tuple) -> tuple | None:
        """One zero-sum assignment over positions R, as ``(pos, a, b, eps)`` entries."""
        sub = _SignedSearch(self.p, self.budget.child(ZERO_PROBE_NODES), first_only=True)
        try:
            sub._zero_node(R, None, ())
        except _Found as f:
            return tuple(
                (k, a, b, e) for k, (a, b, e) in enumerate(f.rep.entries) if k in R
            )
        except BudgetExceeded:
            pass
        finally:
            self.budget.absorb(sub.budget)
            if self.budget.limit is not None and self.budget.used > self.budget.limit:
                raise BudgetExceeded(self.budget.used)
        return None


def enumerate_signed(
    p: Problem, c, budget: int = 1_000_000
) -> tuple[list[SignedRepresentation], Classification]:
    """Signed representations ``c = sum eps_i a_i/b_i`` with a finiteness verdict.

    A Finite verdict is only given when the search closed every branch.  That
    happens in particular for n = 1, for n = 2 with c != 0, and whenever c lies
    outside the union of signed sets over sub-tuples of size <= n-2: a zero
    residual with two or more positions left means c is a signed sum over the
    positions already chosen.  Zero residuals with an infinite family return
    Infinite; undecidable ones consume the budget.
    """
    found, cls, _ = signed_search(p, c, budget)
    return found, cls


def signed_search(p: Problem, c, budget: int = 1_000_000):
    """``enumerate_signed`` plus the number of nodes expanded."""
    c = as_rational(c)
    if budget < 1:
        raise ValueError("budget must be at least 1")
    s = _SignedSearch(p, _Budget(budget))
    try:
        s.run(c, tuple(range(p.n)), None, ())
        cls = None
    except _InfiniteFound as inf:
        cls = Infinite(inf.family)
    except BudgetExceeded:
        cls = BudgetExhausted(len(s.found))
    found = sorted(s.found, key=SignedRepresentation.sort_key)
    if cls is None:
        cls = Finite(len(found), s.max_bound)
    return found, cls, min(s.budget.used, budget)


def signed_exists(p: Problem, c, budget: int = 1_000_000) -> TriBool:
    """Does c have at least one signed representation?"""
    c = as_rational(c)
    s = _SignedSearch(p, _Budget(budget), first_only=True)
    try:
        s.run(c, tuple(range(p.n)), None, ())
    except _Found:
        return TriBool.YES
    except _InfiniteFound:
        return TriBool.YES
    except BudgetExceeded:
        return TriBool.UNKNOWN
    return TriBool.NO


def j_set_membership(p: Problem, c, budget: int = 1_000_000) -> TriBool:
    """Is c a signed sum over some sub-tuple of at most n-2 positions?"""
    c = as_rational(c)
    unknown = False
    for s in range(1, p.n - 1):
        for J in itertools.combinations(range(p.n), s):
            hit = signed_exists(p.restrict(J), c, budget)
            if hit is TriBool.YES:
                return TriBool.YES
            if hit is TriBool.UNKNOWN:
                unknown = True
    return TriBool.UNKNOWN if unknown else TriBool.NO
