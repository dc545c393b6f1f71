"""Sweep the W_N identities and the c_N mod p window, writing a CSV table.

    python scripts/identities_sweep.py --nmax 30 --pmax 200 --out results/identities.csv
"""

import argparse
import csv
import time
from pathlib import Path

from unitcount import wn
from unitcount.ff import is_prime


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--pmax", type=int, default=200)
    ap.add_argument("--out", type=Path, default=Path("results/identities.csv"))
    args = ap.parse_args()

    args.out.parent.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["N", "antisymmetry", "syzygy", "c_N", "W_N(2,-1)"])
        for N in range(1, args.nmax + 1):
            w.writerow([N, wn.wn_antisymmetry_check(N), wn.wn_syzygy_check(N),
                        wn.cn_compute(N), wn.wn_special_value(N)])
    print(f"identities for N <= {args.nmax} written to {args.out} ({time.perf_counter() - t0:.2f}s)")

    bad = []
    for p in range(3, args.pmax + 1):
        if is_prime(p):
            rep = wn.cn_mod_p_window(p)
            bad.extend((p, N) for N, r in rep.table if r == 0)
    print(f"c_N mod p window for odd p <= {args.pmax}: {'no zeros' if not bad else bad}")


if __name__ == "__main__":
    main()
