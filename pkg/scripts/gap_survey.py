"""Survey gaps below the values 1/k for the unit problem with n terms.

Prints, for each k, the predecessor, the gap delta, the ratio delta*k^2 and the
number of search nodes.  Example:  python3 scripts/gap_survey.py --n 2 --kmax 30
"""

import argparse
import csv
import sys
from fractions import Fraction

from egyptian.engine import Problem
from egyptian.topology import gap_below


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--kmax", type=int, default=20)
    ap.add_argument("--budget", type=int, default=1_000_000)
    args = ap.parse_args(argv)
    p = Problem.unit(args.n)
    out = csv.writer(sys.stdout)
    out.writerow(["c", "predecessor", "delta", "delta_k2", "in_set", "nodes"])
    for k in range(1, args.kmax + 1):
        c = Fraction(1, k)
        cert = gap_below(p, c, args.budget)
        out.writerow([c, cert.predecessor, cert.delta, cert.delta * k * k, cert.c_in_set, cert.nodes_expanded])


if __name__ == "__main__":
    main()
