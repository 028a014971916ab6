"""Command-line front end: gen | check | ecc | solve | oracle | compare | bench.

Machine-readable output goes to stdout (or --out); summaries and errors go to
stderr. Exit codes: 0 ok, 2 invalid input, 3 algorithm/oracle disagreement,
4 internal verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import statistics
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

from .eccentricity import INNER, edge_eccentricities, one_center, vertex_eccentricities
from .generator import KINDS, GenSpec, random_mop
from .mop import Mop, MopError, mop_from_json
from .oracle import brute_force_two_center, enumerate_triangulations, solve_oracle, verify_solution
from .two_center import TwoCenterSolution, two_center

EXIT_OK, EXIT_INVALID, EXIT_DISAGREE, EXIT_VERIFY = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, kind: str, detail: str, code: int = EXIT_INVALID):
        super().__init__(f"{kind}: {detail}")
        self.kind, self.detail, self.code = kind, detail, code


@dataclass
class RunReport:
    index: int
    digest: str
    n: int
    algorithm_radius: int
    oracle_radius: int | None = None
    cut_edge: list[int] | None = None
    centers: list[int] = field(default_factory=list)
    feasible: bool = True
    merges: int = 0
    seconds: dict[str, float] = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.oracle_radius is None or self.oracle_radius == self.algorithm_radius

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        if not timing:
            d.pop("seconds")
        return json.dumps(d, sort_keys=True)


def load_mop(path: str) -> Mop:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError("unreadable-file", str(exc)) from exc
    try:
        return mop_from_json(text)
    except json.JSONDecodeError as exc:
        raise CliError("malformed-json", f"{path}: {exc}") from exc
    except MopError as exc:
        raise CliError("invalid-mop", f"{path}: {type(exc).__name__}: {exc}") from exc


def emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text + "\n")
    else:
        print(text)


def to_dot(mop: Mop, solution: TwoCenterSolution) -> str:
    colors = ("lightblue", "salmon")
    lines = ["graph mop {"]
    for v in range(mop.n):
        side = solution.assignment[v]
        shape = "doublecircle" if v in solution.centers else "circle"
        lines.append(f'  {v} [label="{v}\\n{"ab"[side]}", shape={shape}, style=filled, fillcolor={colors[side]}];')
    for u, v in mop.edges:
        style = " [penwidth=3]" if solution.cut_edge == (u, v) else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines)


def run_instance(index: int, mop: Mop, with_oracle: bool) -> RunReport:
    t0 = time.perf_counter()
    sol = two_center(mop)
    t1 = time.perf_counter()
    report = verify_solution(mop, sol)
    t2 = time.perf_counter()
    run = RunReport(index, mop.digest, mop.n, sol.radius,
                    cut_edge=list(sol.cut_edge) if sol.cut_edge else None,
                    centers=list(sol.centers), feasible=report.ok, merges=sol.visits)
    run.seconds = {"solve": t1 - t0, "verify": t2 - t1}
    if with_oracle:
        run.oracle_radius = brute_force_two_center(mop)[0]
        run.seconds["oracle"] = time.perf_counter() - t2
    return run


def cmd_gen(args) -> int:
    spec = GenSpec(args.n, args.kind, args.seed)
    try:
        mop = spec.generate()
    except MopError as exc:
        raise CliError("invalid-spec", str(exc)) from exc
    emit(mop.to_json(), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    mop = load_mop(args.file)
    emit(json.dumps({"valid": True, "n": mop.n, "digest": mop.digest}), args.out)
    return EXIT_OK


def cmd_ecc(args) -> int:
    mop = load_mop(args.file)
    table = edge_eccentricities(mop)
    entries = []
    for (u, v, side), (eu, ev) in sorted(table.values.items()):
        arc = list(range(u + 1, v)) if side == INNER else list(range(v + 1, mop.n)) + list(range(u))
        entries.append({"edge": [u, v], "side": arc, "ecc": [eu, ev]})
    r, centers = one_center(mop)
    emit(json.dumps({"n": mop.n, "edge_sides": entries,
                     "eccentricities": vertex_eccentricities(mop, table),
                     "radius": r, "centers": centers}), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    mop = load_mop(args.file)
    sol = two_center(mop)
    emit(json.dumps(sol.to_dict()), args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(mop, sol) + "\n")
    if not verify_solution(mop, sol).ok:
        print(f"error: verification-failed: {mop.digest}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_oracle(args) -> int:
    mop = load_mop(args.file)
    emit(json.dumps(solve_oracle(mop).to_dict()), args.out)
    return EXIT_OK


def corpus(args) -> Iterator[Mop]:
    for path in args.files:
        yield load_mop(path)
    if args.max_n is not None:
        for n in range(args.min_n, args.max_n + 1):
            yield from enumerate_triangulations(n, cap=args.cap)
    if args.random:
        rng = random.Random(args.seed)
        lo, hi = args.n_range
        for _ in range(args.random):
            n = rng.randint(lo, hi)
            yield random_mop(n, rng.getrandbits(64))


def archive_counterexample(directory: Path, mop: Mop, run: RunReport) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{mop.digest}.json"
    path.write_text(mop.to_json() + "\n")
    delta = {"digest": mop.digest, "n": mop.n, "algorithm_radius": run.algorithm_radius,
             "oracle_radius": run.oracle_radius,
             "delta": run.algorithm_radius - run.oracle_radius,
             "cut_edge": run.cut_edge, "centers": run.centers}
    (directory / f"{mop.digest}.delta.json").write_text(json.dumps(delta, sort_keys=True) + "\n")
    return path


def cmd_compare(args) -> int:
    if args.max_n is not None and args.max_n > args.cap:
        raise CliError("cap-exceeded", f"--max-n {args.max_n} exceeds enumeration cap {args.cap}")
    sink = open(args.out, "w") if args.out and args.out != "-" else sys.stdout
    total = disagree = infeasible = 0
    worst = 0
    archive = Path(args.archive) if args.archive else None
    try:
        for i, mop in enumerate(corpus(args)):
            run = run_instance(i, mop, with_oracle=True)
            sink.write(run.to_json(timing=not args.no_timing) + "\n")
            total += 1
            if not run.feasible:
                infeasible += 1
            if not run.agrees:
                disagree += 1
                worst = max(worst, run.algorithm_radius - run.oracle_radius)
                if archive is not None:
                    archive_counterexample(archive, mop, run)
    finally:
        if sink is not sys.stdout:
            sink.close()
    print(f"compared {total} instances: {disagree} disagreements (max delta {worst}), "
          f"{infeasible} infeasible", file=sys.stderr)
    if infeasible:
        return EXIT_VERIFY
    return EXIT_DISAGREE if disagree else EXIT_OK


def bench_sizes(sizes: list[int], reps: int, seed: int) -> list[dict]:
    rows = []
    prev = None
    rng = random.Random(seed)
    for n in sizes:
        times, merges = [], []
        for _ in range(reps):
            mop = random_mop(n, rng.getrandbits(64))
            t0 = time.perf_counter()
            sol = two_center(mop)
            times.append(time.perf_counter() - t0)
            merges.append(sol.visits)
        med = statistics.median(times)
        rows.append({"n": n, "reps": reps, "median_s": med,
                     "ratio": med / prev if prev else None,
                     "max_merges": max(merges), "merges_per_n2": max(merges) / n**2})
        prev = med
    return rows


def cmd_bench(args) -> int:
    two_center(random_mop(16, 0))  # compile outside the timed region
    rows = bench_sizes(args.sizes, args.reps, args.seed)
    print(f"{'n':>7} {'median_s':>10} {'ratio':>7} {'merges/n^2':>11}")
    for row in rows:
        ratio = f"{row['ratio']:.2f}" if row["ratio"] else "-"
        print(f"{row['n']:>7} {row['median_s']:>10.4f} {ratio:>7} {row['merges_per_n2']:>11.3f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mop2center", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    for name, func, text in (("check", cmd_check, "validate an instance file"),
                             ("ecc", cmd_ecc, "dump edge-side and vertex eccentricities"),
                             ("oracle", cmd_oracle, "brute-force distances and 1-/2-center")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("solve", help="optimal 2-center by internal-edge splitting")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--dot", help="write a Graphviz view of the solution here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="solver vs brute force over a corpus")
    p.add_argument("files", nargs="*", help="instance files to include")
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, help="enumerate all triangulations for n in [min-n, max-n]")
    p.add_argument("--cap", type=int, default=13, help="largest n allowed for enumeration")
    p.add_argument("--random", type=int, default=0, help="number of uniform random instances")
    p.add_argument("--n-range", type=int, nargs=2, default=(13, 200), metavar=("LO", "HI"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="newline-delimited JSON reports (default stdout)")
    p.add_argument("--archive", help="directory for counterexample instances and delta reports")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from reports")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="time the solver on uniform random instances")
    p.add_argument("--sizes", type=int, nargs="+", default=[1000, 2000, 4000])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.kind}: {exc.detail}", file=sys.stderr)
        return exc.code
    except MopError as exc:
        print(f"error: invalid-input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
