"""Tabulate the theta-parameterized cone count against 31 * 19^r.

    python scripts/bound_table.py --rmax 10 --out results/bound.csv
"""

import argparse
import csv
from fractions import Fraction
from pathlib import Path

from unitcount.certify import bound_theta

THETAS = ["1/9", "1/10", "1/12", "1/20", "1/50"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rmax", type=int, default=10)
    ap.add_argument("--out", type=Path, default=Path("results/bound.csv"))
    args = ap.parse_args()

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["theta", "r", "value", "upper", "31*19^r", "below"])
        for text in THETAS:
            for r in range(args.rmax + 1):
                b = bound_theta(Fraction(text), r)
                w.writerow([text, r, f"{b.value:.6f}", f"{float(b.upper):.6f}", b.bound, b.holds])
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
