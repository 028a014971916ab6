"""Brute-force ground truth: BFS distances, exhaustive 1-/2-center, enumeration.

Nothing here touches the eccentricity dynamic program; only the Mop type is
shared with the fast path.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .mop import Mop, MopError, validate_mop

if TYPE_CHECKING:
    from .two_center import TwoCenterSolution

DEFAULT_ENUM_CAP = 13


class CapExceeded(MopError):
    pass


def bfs(adjacency: Sequence[Sequence[int]], source: int, allowed: set[int] | None = None) -> dict[int, int]:
    """Hop distances from ``source``, optionally inside the ``allowed`` vertex set."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def apsp(mop: Mop) -> np.ndarray:
    """n x n hop-distance matrix."""
    rows = [v for v in range(mop.n) for _ in mop.adjacency[v]]
    cols = [w for v in range(mop.n) for w in mop.adjacency[v]]
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(mop.n, mop.n))
    return shortest_path(graph, method="D", unweighted=True).astype(np.int64)


def brute_force_one_center(mop: Mop, dist: np.ndarray | None = None) -> tuple[int, list[int]]:
    if dist is None:
        dist = apsp(mop)
    ecc = dist.max(axis=1)
    r = int(ecc.min())
    return r, np.flatnonzero(ecc == r).tolist()


def pair_radii(dist: np.ndarray) -> np.ndarray:
    """R[a, b] = max_v min(d(a, v), d(b, v))."""
    n = len(dist)
    radii = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        radii[a] = np.minimum(dist[a], dist).max(axis=1)
    return radii


def brute_force_two_center(mop: Mop, dist: np.ndarray | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Exact 2-center radius and every optimal unordered pair, in lexicographic order."""
    if dist is None:
        dist = apsp(mop)
    radii = pair_radii(dist)
    a, b = np.triu_indices(mop.n, k=1)
    vals = radii[a, b]
    r = int(vals.min())
    hit = vals == r
    return r, list(zip(a[hit].tolist(), b[hit].tolist()))


@dataclass
class OracleResult:
    apsp: np.ndarray = field(repr=False)
    one_center_radius: int
    one_center_set: list[int]
    two_center_radius: int
    best_pairs: list[tuple[int, int]]

    def to_dict(self) -> dict:
        return {
            "one_center_radius": self.one_center_radius,
            "one_center_set": self.one_center_set,
            "two_center_radius": self.two_center_radius,
            "best_pairs": [list(p) for p in self.best_pairs],
            "apsp": self.apsp.tolist(),
        }


def solve_oracle(mop: Mop) -> OracleResult:
    dist = apsp(mop)
    r1, c1 = brute_force_one_center(mop, dist)
    r2, pairs = brute_force_two_center(mop, dist)
    return OracleResult(dist, r1, c1, r2, pairs)


def is_cyclic_arc(members: Sequence[bool]) -> bool:
    """True if the marked positions form one contiguous arc of the cycle (or none/all)."""
    n = len(members)
    changes = sum(members[i] != members[(i + 1) % n] for i in range(n))
    return changes <= 2


@dataclass
class VerificationReport:
    radius: int
    slack: list[int]
    contiguous: bool
    centers_in_arcs: bool
    oracle_radius: int | None = None

    @property
    def covered(self) -> bool:
        return min(self.slack) >= 0

    @property
    def radius_delta(self) -> int | None:
        return None if self.oracle_radius is None else self.radius - self.oracle_radius

    @property
    def ok(self) -> bool:
        return self.covered and self.contiguous


def verify_solution(mop: Mop, solution: "TwoCenterSolution", with_oracle: bool = False) -> VerificationReport:
    """Recheck a solution by BFS from its two centers."""
    dists = [bfs(mop.adjacency, c) for c in solution.centers]
    slack = [solution.radius - dists[solution.assignment[v]][v] for v in range(mop.n)]
    alpha = [a == 0 for a in solution.assignment]
    contiguous = is_cyclic_arc(alpha)
    in_arcs = all(solution.assignment[c] == i for i, c in enumerate(solution.centers))
    report = VerificationReport(solution.radius, slack, contiguous, in_arcs)
    if with_oracle:
        report.oracle_radius = brute_force_two_center(mop)[0]
    return report


def _all_arcs(n: int) -> np.ndarray:
    masks = []
    for start in range(n):
        for length in range(1, n):
            m = np.zeros(n, dtype=bool)
            m[[(start + i) % n for i in range(length)]] = True
            masks.append(m)
    return np.array(masks)


def continuous_split(dist: np.ndarray, pair: tuple[int, int], radius: int) -> np.ndarray | None:
    """A hull arc A such that pair[0] covers A and pair[1] covers the rest, if any."""
    a, b = pair
    arcs = _all_arcs(len(dist))
    cover_a = dist[a] <= radius
    cover_b = dist[b] <= radius
    ok = np.all(cover_a | ~arcs, axis=1) & np.all(cover_b | arcs, axis=1)
    hits = np.flatnonzero(ok)
    return arcs[hits[0]] if len(hits) else None


def _triangulate(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
    if hi - lo < 2:
        yield []
        return
    for k in range(lo + 1, hi):
        for left in _triangulate(lo, k):
            for right in _triangulate(k, hi):
                extra = [d for d in ((lo, k), (k, hi)) if d[1] - d[0] > 1]
                yield left + right + extra


def enumerate_triangulations(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Mop]:
    """Every triangulation of the labelled convex n-gon, once each."""
    if n < 3:
        raise MopError(f"n={n}, need at least 3 vertices")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    for diags in _triangulate(0, n - 1):
        yield validate_mop(n, diags)
