"""Exhaustive solver-vs-oracle sweep, tabulated per polygon size.

    python scripts/sweep.py --max-n 11
"""
import argparse
from dataclasses import dataclass

from mop2center import brute_force_two_center, enumerate_triangulations, two_center, verify_solution


@dataclass
class SweepConfig:
    min_n: int = 4
    max_n: int = 12


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        total = worse = infeasible = 0
        for mop in enumerate_triangulations(n):
            sol = two_center(mop)
            total += 1
            worse += sol.radius != brute_force_two_center(mop)[0]
            infeasible += not verify_solution(mop, sol).ok
        rows.append({"n": n, "triangulations": total, "split_worse": worse, "infeasible": infeasible})
    return rows


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=SweepConfig.min_n)
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    args = parser.parse_args()
    print(f"{'n':>3} {'triangulations':>15} {'split>opt':>10} {'infeasible':>11}")
    for row in run(SweepConfig(args.min_n, args.max_n)):
        print(f"{row['n']:>3} {row['triangulations']:>15} {row['split_worse']:>10} {row['infeasible']:>11}")
