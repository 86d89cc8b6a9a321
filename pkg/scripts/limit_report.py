#!/usr/bin/env python3
"""Print the asymptotic profile of the toothpick totals.

For each k the sample set {(i/2**k, T(2**k+i)/(2**k+i)**2)} dips once;
this script tracks the dip location/value as k grows and lists the
per-block minima indices.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from toothpicks.analysis import local_minima, ratio_bound_check, sample_limit_function


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=14)
    ap.add_argument("--nmax", type=int, default=1 << 14)
    args = ap.parse_args()

    rep = ratio_bound_check(args.nmax)
    print(f"T(n)/n^2 <= 2/3 + 1/(3n) for n <= {args.nmax}; equality at "
          + " ".join(map(str, rep.equality_indices)))
    print("profile minima:", " ".join(map(str, local_minima(args.nmax))))
    print()
    print(f"{'k':>3} {'min x':>10} {'min value':>11} {'f(0)':>9} {'f(1)':>9}")
    for k in range(2, args.kmax + 1):
        ls = sample_limit_function(k)
        print(
            f"{k:>3} {float(ls.min_x):>10.6f} {float(ls.min_value):>11.7f} "
            f"{float(ls.left_value):>9.6f} {float(ls.right_value):>9.6f}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
