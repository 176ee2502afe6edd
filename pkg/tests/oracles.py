"""Independent brute-force oracles.

Nothing here imports the search engines or the descriptor classes: sets are
rebuilt from their JSON descriptions with naive loops, and representations are
found by an unpruned bound chain (every term order is tried, no canonical
ordering, no reachability pruning).
"""

from fractions import Fraction
from bisect import bisect_right
from functools import lru_cache
from itertools import product


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    k = 2
    while k * k <= m:
        if m % k == 0:
            return False
        k += 1
    return True


def elements_upto(desc: dict, x) -> list:
    """All elements <= x of the set described by ``desc``, increasing."""
    x = Fraction(x)
    kind = desc["kind"]
    out = []
    if kind == "naturals":
        m = 1
        while m <= x:
            out.append(Fraction(m))
            m += 1
    elif kind == "arithmetic":
        first, step = Fraction(desc["first"]), Fraction(desc["step"])
        v = first
        while v <= x:
            out.append(v)
            v += step
    elif kind == "geometric":
        first, ratio = Fraction(desc["first"]), Fraction(desc["ratio"])
        v = first
        while v <= x:
            out.append(v)
            v *= ratio
    elif kind == "polynomial":
        coeffs = [Fraction(c) for c in desc["coeffs"]]
        m = 1
        while True:
            v = Fraction(0)
            for c in coeffs:
                v = v * m + c
            if v > x:
                break
            out.append(v)
            m += 1
    elif kind == "primes":
        out = [Fraction(m) for m in range(2, int(x) + 1) if _is_prime(m)]
    elif kind == "with-prefix":
        out = [Fraction(q) for q in desc["prefix"] if Fraction(q) <= x]
        out += elements_upto(desc["tail"], x)
    else:
        raise ValueError(kind)
    return out


def member(desc: dict, q) -> bool:
    """Direct membership test, one closed-form check per kind."""
    q = Fraction(q)
    if q <= 0:
        return False
    kind = desc["kind"]
    if kind == "naturals":
        return q.denominator == 1
    if kind == "arithmetic":
        k = (q - Fraction(desc["first"])) / Fraction(desc["step"])
        return k >= 0 and k.denominator == 1
    if kind == "geometric":
        v, ratio = Fraction(desc["first"]), Fraction(desc["ratio"])
        while v < q:
            v *= ratio
        return v == q
    if kind == "polynomial":
        coeffs = [Fraction(c) for c in desc["coeffs"]]

        def value(m):
            v = Fraction(0)
            for c in coeffs:
                v = v * m + c
            return v

        # values increase with m >= 1: double, then bisect
        lo, hi = 1, 1
        while value(hi) < q:
            lo, hi = hi, 2 * hi
        while lo < hi:
            mid = (lo + hi) // 2
            if value(mid) < q:
                lo = mid + 1
            else:
                hi = mid
        return value(lo) == q
    if kind == "primes":
        return q.denominator == 1 and _is_prime(q.numerator)
    if kind == "with-prefix":
        return q in [Fraction(x) for x in desc["prefix"]] or member(desc["tail"], q)
    raise ValueError(kind)


class _Elements:
    """Sorted elements of one set, extended on demand."""

    def __init__(self, desc: dict):
        self.desc = desc
        self.cap = Fraction(0)
        self.items: list = []

    def upto(self, x):
        if x > self.cap:
            self.cap = max(Fraction(x), 2 * self.cap)
            self.items = elements_upto(self.desc, self.cap)
        return self.items[: bisect_right(self.items, x)]


def unsigned_reps(problem: dict, c) -> set:
    """Every tuple ((a_1, b_1), ..., (a_n, b_n)) with sum a_i/b_i = c."""
    c = Fraction(c)
    if c <= 0:
        return set()
    nums = [tuple(Fraction(a) for a in A) for A in problem["numerators"]]
    dens = problem["denominators"]
    lists = [_Elements(d) for d in dens]

    @lru_cache(maxsize=None)
    def solve(t: Fraction, R: frozenset) -> frozenset:
        # partial assignments: frozensets of (j, a, b)
        if len(R) == 1:
            (j,) = R
            return frozenset(
                frozenset([(j, a, a / t)]) for a in nums[j] if member(dens[j], a / t)
            )
        out = set()
        # pigeonhole: some term a/b is at least t/|R|, so b <= |R| a / t
        for j in R:
            for a in nums[j]:
                for b in lists[j].upto(len(R) * a / t):
                    rest = t - a / b
                    if rest > 0:
                        for tail in solve(rest, R - {j}):
                            out.add(tail | {(j, a, b)})
        return frozenset(out)

    reps = set()
    for assignment in solve(c, frozenset(range(len(nums)))):
        reps.add(tuple((a, b) for _, a, b in sorted(assignment)))
    return reps


def unit2_values_in(lo: Fraction, hi: Fraction) -> list:
    """Values 1/b1 + 1/b2 in the open interval (lo, hi), 0 < lo < hi.

    The larger term exceeds lo/2, so the smaller denominator is at most 2/lo;
    for each such b1 the admissible b2 form an explicit range.  When that range
    is unbounded one witness value is reported.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo <= 0:
        raise ValueError("lo must be positive; the set accumulates at 0")
    found = set()
    b1 = 1
    while b1 <= 2 / lo:
        r_lo, r_hi = lo - Fraction(1, b1), hi - Fraction(1, b1)
        if r_hi > 0:
            first = max(b1, int(1 / r_hi))
            if r_lo <= 0:
                found.add(Fraction(1, b1) + Fraction(1, max(b1, int(1 / r_hi) + 1)))
            else:
                for b2 in range(first, int(1 / r_lo) + 2):
                    v = Fraction(1, b1) + Fraction(1, b2)
                    if lo < v < hi:
                        found.add(v)
        b1 += 1
    return sorted(found)


def signed_count_capped(n: int, c, cap: int) -> int:
    """Signed unit representations with every b_i <= cap: the last term is solved for."""
    c = Fraction(c)
    count = 0
    unit = [Fraction(1, b) for b in range(1, cap + 1)]
    for head in product(range(cap), repeat=n - 1):
        for signs in product((1, -1), repeat=n - 1):
            rest = c - sum((e * unit[b] for e, b in zip(signs, head)), Fraction(0))
            if rest != 0 and rest.numerator in (1, -1) and rest.denominator <= cap:
                count += 1
    return count


def least_above(desc: dict, x) -> Fraction:
    """Least element strictly greater than x, from the closed forms."""
    x = Fraction(x)
    kind = desc["kind"]
    if kind == "naturals":
        return Fraction(max(1, x.numerator // x.denominator + 1))
    if kind == "arithmetic":
        first, step = Fraction(desc["first"]), Fraction(desc["step"])
        if x < first:
            return first
        k = (x - first) // step + 1
        return first + k * step
    if kind == "geometric":
        v, ratio = Fraction(desc["first"]), Fraction(desc["ratio"])
        while v <= x:
            v *= ratio
        return v
    if kind == "polynomial":
        coeffs = [Fraction(c) for c in desc["coeffs"]]

        def value(m):
            v = Fraction(0)
            for c in coeffs:
                v = v * m + c
            return v

        lo, hi = 1, 1
        while value(hi) <= x:
            lo, hi = hi, 2 * hi
        while lo < hi:
            mid = (lo + hi) // 2
            if value(mid) <= x:
                lo = mid + 1
            else:
                hi = mid
        return value(lo)
    if kind == "primes":
        m = max(2, x.numerator // x.denominator + 1)
        while not _is_prime(m):
            m += 1
        return Fraction(m)
    if kind == "with-prefix":
        for q in desc["prefix"]:
            if Fraction(q) > x:
                return Fraction(q)
        return least_above(desc["tail"], x)
    raise ValueError(kind)


def value_in(problem: dict, lo, hi):
    """Some value sum a_i/b_i lying in (lo, hi), or None if there is none.

    The largest term of a value above lo exceeds lo/|R|, which bounds its
    denominator.  Once lo <= 0 < hi the remaining terms can all be made as
    small as needed, so a value exists.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    nums = [tuple(Fraction(a) for a in A) for A in problem["numerators"]]
    dens = problem["denominators"]
    lists = [_Elements(d) for d in dens]

    def search(R: frozenset, lo, hi, acc):
        if hi <= 0:
            return None
        if not R:
            return acc if lo < 0 < hi else None
        if lo <= 0:
            # every remaining denominator large enough keeps the sum below hi
            total = acc
            for j in R:
                a = max(nums[j])
                total += a / least_above(dens[j], len(R) * a / hi)
            return total
        if len(R) == 1:
            # the largest value a/b below hi has b the least element above a/hi
            (j,) = R
            for a in nums[j]:
                v = a / least_above(dens[j], a / hi)
                if v > lo:
                    return acc + v
            return None
        for j in R:
            for a in nums[j]:
                for b in lists[j].upto(len(R) * a / lo):
                    hit = search(R - {j}, lo - a / b, hi - a / b, acc + a / b)
                    if hit is not None:
                        return hit
        return None

    return search(frozenset(range(len(nums))), lo, hi, Fraction(0))


def distinct_exists(value, length: int) -> bool:
    """Is value a sum of `length` pairwise distinct unit fractions?"""
    value = Fraction(value)

    def go(t, k, smallest):
        if k == 0:
            return t == 0
        if t <= 0:
            return False
        # the largest remaining term 1/b is at least t/k
        b = smallest
        while b <= k / t:
            if go(t - Fraction(1, b), k - 1, b + 1):
                return True
            b += 1
        return False

    return go(value, length, 1)


def least_element(desc: dict) -> Fraction:
    cap = Fraction(1)
    while True:
        items = elements_upto(desc, cap)
        if items:
            return items[0]
        cap *= 2
