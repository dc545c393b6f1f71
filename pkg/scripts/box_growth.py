"""Count solutions of x + y = 1 as the search box grows, for every gallery instance.

Shows how the solution count stabilizes (or grows only along Frobenius
orbits) as B increases; results are box-relative.

    python scripts/box_growth.py --bmax 10 --out results/box_growth.csv
"""

import argparse
import csv
import time
from pathlib import Path

from unitcount.cli import gallery_paths
from unitcount.config import load_config
from unitcount.solver import BudgetExceeded, SearchBox, count_coords_not_in_Kp, enumerate_solutions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bmax", type=int, default=10)
    ap.add_argument("--budget", type=int, default=500_000)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/box_growth.csv"))
    args = ap.parse_args()

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["instance", "p", "rank", "B", "solutions", "primitive", "not_in_Kp", "seconds"])
        for path in gallery_paths():
            cfg = load_config(path)
            if not cfg.is_unit_equation:
                continue
            G = cfg.group
            for B in range(1, args.bmax + 1):
                t0 = time.perf_counter()
                try:
                    sols = enumerate_solutions(G, SearchBox(B, args.budget), jobs=args.jobs)
                except BudgetExceeded:
                    break
                row = [cfg.name, G.p, G.rank, B, len(sols), sum(s.is_primitive for s in sols),
                       count_coords_not_in_Kp(sols), f"{time.perf_counter() - t0:.3f}"]
                w.writerow(row)
                print(*row)


if __name__ == "__main__":
    main()
