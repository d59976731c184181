#!/usr/bin/env python3
"""Export the contraction homotopy path of a feather point as CSV rows
(t, point) for plotting.

    python3 scripts/homotopy_trace.py 'F(0,1,3)' --steps 24 > trace.csv
"""

import argparse
import csv
import sys
from fractions import Fraction

from featherline import feather as fe
from featherline.syntax import fmt_point, parse_point


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("point", help="feather point, e.g. F(0,1,3)")
    parser.add_argument("--steps", type=int, default=16,
                        help="grid points per unit of homotopy time")
    args = parser.parse_args(argv)

    s = parse_point(args.point)
    writer = csv.writer(sys.stdout)
    writer.writerow(["t", "point"])
    for k in range(2 * args.steps + 1):
        t = Fraction(k, args.steps)
        writer.writerow([str(t), fmt_point(fe.homotopy_eval(t, s))])
    return 0


if __name__ == "__main__":
    sys.exit(main())
