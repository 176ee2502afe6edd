"""Classify signed representation counts over a grid of targets p/q.

For each target the signed search reports finite (with the count), infinite or
budget-exhausted; a summary tally goes to stderr.
Example:  python3 scripts/signed_census.py problems/unit3.json --qmax 6
"""

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from egyptian.cli import load_problem
from egyptian.engine import Finite, Infinite, signed_search


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("problem")
    ap.add_argument("--pmax", type=int, default=6)
    ap.add_argument("--qmax", type=int, default=6)
    ap.add_argument("--budget", type=int, default=200_000)
    args = ap.parse_args(argv)
    p = load_problem(args.problem)
    targets = sorted({Fraction(a, q) for a in range(-args.pmax, args.pmax + 1) for q in range(1, args.qmax + 1)})
    tally = Counter()
    for c in targets:
        reps, cls, used = signed_search(p, c, args.budget)
        row = {"c": str(c), "nodes": used}
        if isinstance(cls, Finite):
            row.update(kind="finite", count=cls.count, max_bound=str(cls.max_bound))
        elif isinstance(cls, Infinite):
            row.update(kind="infinite", family=cls.witness.kind)
        else:
            row.update(kind="budget-exhausted", found=cls.found_so_far)
        tally[row["kind"]] += 1
        print(json.dumps(row))
    print(dict(tally), file=sys.stderr)


if __name__ == "__main__":
    main()
