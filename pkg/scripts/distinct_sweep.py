"""Run the equal-length distinct conversion over every multiset of small denominators.

Reports how many multisets convert, how many are infeasible, and the largest
denominator produced.  Example:  python3 scripts/distinct_sweep.py --dmax 12 --lmax 5
"""

import argparse
import itertools

from egyptian.classic import InfeasibleConversion, UnitFractionSum, to_distinct


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=12)
    ap.add_argument("--lmax", type=int, default=5)
    ap.add_argument("--show-infeasible", action="store_true")
    args = ap.parse_args(argv)
    for length in range(1, args.lmax + 1):
        ok = bad = 0
        biggest = 0
        for dens in itertools.combinations_with_replacement(range(1, args.dmax + 1), length):
            try:
                out = to_distinct(UnitFractionSum(dens))
            except InfeasibleConversion:
                bad += 1
                if args.show_infeasible:
                    print("  infeasible:", " + ".join(f"1/{d}" for d in dens))
                continue
            ok += 1
            biggest = max(biggest, max(out))
        print(f"length {length}: converted {ok}, infeasible {bad}, largest denominator {biggest}")


if __name__ == "__main__":
    main()
