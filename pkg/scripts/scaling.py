"""Solver wall time against n on uniform random mops and the snake family.

    python scripts/scaling.py --sizes 500 1000 2000 4000 --reps 5 --csv scaling.csv
"""
import argparse
import csv
import random
import statistics
import time
from dataclasses import dataclass, field

from mop2center import family_mop, random_mop, two_center


@dataclass
class ScalingConfig:
    sizes: list[int] = field(default_factory=lambda: [500, 1000, 2000, 4000])
    reps: int = 5
    seed: int = 0


def run(cfg: ScalingConfig) -> list[dict]:
    two_center(random_mop(16, 0))
    rng = random.Random(cfg.seed)
    rows = []
    for kind in ("uniform", "snake"):
        prev = None
        for n in cfg.sizes:
            times = []
            for _ in range(cfg.reps):
                mop = random_mop(n, rng.getrandbits(64)) if kind == "uniform" else family_mop(kind, n)
                t0 = time.perf_counter()
                sol = two_center(mop)
                times.append(time.perf_counter() - t0)
            med = statistics.median(times)
            rows.append({"kind": kind, "n": n, "median_s": med, "ratio": med / prev if prev else None,
                         "ns_per_visit": 1e9 * med / sol.visits, "radius": sol.radius})
            prev = med
    return rows


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=ScalingConfig().sizes)
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--csv")
    args = parser.parse_args()
    rows = run(ScalingConfig(args.sizes, args.reps, args.seed))
    for row in rows:
        ratio = f"{row['ratio']:.2f}" if row["ratio"] else "-"
        print(f"{row['kind']:>8} {row['n']:>6} {row['median_s']:>9.4f}s {ratio:>6} "
              f"{row['ns_per_visit']:>6.1f} ns/visit  r={row['radius']}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
