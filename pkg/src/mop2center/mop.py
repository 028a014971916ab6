"""Maximal outerplanar graphs (mops) as triangulated convex polygons.

Vertices are labelled 0..n-1 in hull order, so a mop is fully described by
its vertex count and its n-3 non-crossing diagonals.
"""
from __future__ import annotations

import bisect
import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


class MopError(ValueError):
    """Base class for invalid mop input."""


class TooFewVertices(MopError):
    pass


class LabelOutOfRange(MopError):
    pass


class DuplicateOrHullEdgeAsDiagonal(MopError):
    pass


class WrongDiagonalCount(MopError):
    pass


class CrossingDiagonals(MopError):
    pass


class EdgeNotPresent(MopError):
    pass


class NotInternalEdge(MopError):
    pass


class NotAMop(MopError):
    """Raised by :func:`mop_from_edges` when no Hamiltonian hull exists."""


def norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Mop:
    n: int
    diagonals: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def edges(self) -> list[Edge]:
        """All 2n-3 edges, sorted lexicographically."""
        hull = [norm_edge(i, (i + 1) % self.n) for i in range(self.n)]
        return sorted(hull + list(self.diagonals))

    def is_hull_edge(self, edge: Edge) -> bool:
        u, v = norm_edge(*edge)
        return v - u == 1 or (u == 0 and v == self.n - 1)

    def has_edge(self, edge: Edge) -> bool:
        u, v = edge
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        nb = self.adjacency[u]
        i = bisect.bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    @cached_property
    def triangles(self) -> np.ndarray:
        """(n-2, 3) array of ascending vertex triples, one per bounded face."""
        return _triangles(self)

    @cached_property
    def triangle_neighbors(self) -> np.ndarray:
        """nbr[t, k] is the triangle across the edge opposite ``triangles[t, k]``, or -1."""
        return self._links[0]

    @cached_property
    def triangle_back(self) -> np.ndarray:
        """back[t, k]: position of the shared edge inside ``triangle_neighbors[t, k]``."""
        return self._links[1]

    @cached_property
    def _links(self) -> tuple[np.ndarray, np.ndarray]:
        return _triangle_neighbors(self.triangles)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "diagonals": [list(d) for d in self.diagonals]},
                          separators=(",", ":"))

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]


def validate_mop(n: int, diagonals: Iterable[Sequence[int]]) -> Mop:
    if n < 3:
        raise TooFewVertices(f"n={n}, need at least 3 vertices")
    diags = set()
    for pair in diagonals:
        if len(pair) != 2:
            raise MopError(f"diagonal {pair!r} is not a pair")
        a, b = (int(x) for x in pair)
        if not (0 <= a < n and 0 <= b < n):
            raise LabelOutOfRange(f"diagonal ({a},{b}) outside 0..{n - 1}")
        d = norm_edge(a, b)
        if d[1] - d[0] <= 1 or (d[0] == 0 and d[1] == n - 1) or d in diags:
            raise DuplicateOrHullEdgeAsDiagonal(f"diagonal ({a},{b})")
        diags.add(d)
    if len(diags) != n - 3:
        raise WrongDiagonalCount(f"expected {n - 3} diagonals, got {len(diags)}")
    ordered = sorted(diags)
    _check_noncrossing(ordered)

    nbrs: list[list[int]] = [[(i - 1) % n, (i + 1) % n] for i in range(n)]
    for a, b in ordered:
        nbrs[a].append(b)
        nbrs[b].append(a)
    adjacency = tuple(tuple(sorted(set(nb))) for nb in nbrs)
    mop = Mop(n, tuple(ordered), adjacency)
    assert sum(len(nb) for nb in adjacency) == 2 * (2 * n - 3)
    return mop


def _check_noncrossing(diags: list[Edge]) -> None:
    # chords sorted by (start asc, end desc) must nest like parentheses
    stack: list[Edge] = []
    for a, b in sorted(diags, key=lambda d: (d[0], -d[1])):
        while stack and stack[-1][1] <= a:
            stack.pop()
        if stack and stack[-1][1] < b:
            raise CrossingDiagonals(f"{stack[-1]} crosses {(a, b)}")
        stack.append((a, b))


def mop_from_json(text: str) -> Mop:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "diagonals" not in data:
        raise MopError("instance must be an object with 'n' and 'diagonals'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise MopError("'n' must be an integer")
    diags = data["diagonals"]
    if not isinstance(diags, list) or not all(
        isinstance(d, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in d)
        for d in diags
    ):
        raise MopError("'diagonals' must be a list of integer pairs")
    return validate_mop(n, diags)


def mop_from_edges(edges: Iterable[Sequence[int]]) -> tuple[Mop, list[int]]:
    """Rebuild a mop from an unlabelled edge list.

    Returns the mop in hull labels and ``order`` with ``order[i]`` the original
    vertex sitting at hull position i. Uses ear removal: a mop with n > 3 always
    has a degree-2 vertex whose two neighbours are adjacent.
    """
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        if a == b:
            raise NotAMop(f"self loop at {a}")
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    n = len(adj)
    m = sum(len(s) for s in adj.values()) // 2
    if n < 3 or m != 2 * n - 3:
        raise NotAMop(f"{n} vertices and {m} edges cannot form a mop")

    live = {v: set(s) for v, s in adj.items()}
    ears = [v for v, s in live.items() if len(s) == 2]
    removed: list[tuple[int, int, int]] = []
    while len(live) > 3:
        while ears and (ears[-1] not in live or len(live[ears[-1]]) != 2):
            ears.pop()
        if not ears:
            raise NotAMop("no ear vertex left")
        v = ears.pop()
        x, y = live[v]
        if y not in live[x]:
            raise NotAMop(f"neighbours of degree-2 vertex {v} are not adjacent")
        removed.append((v, x, y))
        del live[v]
        for w in (x, y):
            live[w].discard(v)
            if len(live[w]) == 2:
                ears.append(w)
    if any(len(s) != 2 for s in live.values()):
        raise NotAMop("core is not a triangle")

    cycle = list(live)
    for v, x, y in reversed(removed):
        i, j = cycle.index(x), cycle.index(y)
        if (i + 1) % len(cycle) == j:
            cycle.insert(i + 1, v)
        elif (j + 1) % len(cycle) == i:
            cycle.insert(j + 1, v)
        else:
            raise NotAMop(f"ear ({x},{y}) is not a hull edge")
    pos = {v: i for i, v in enumerate(cycle)}
    diagonals = []
    for a, b in {norm_edge(a, b) for a, s in adj.items() for b in s}:
        d = norm_edge(pos[a], pos[b])
        if not (d[1] - d[0] == 1 or (d[0] == 0 and d[1] == n - 1)):
            diagonals.append(d)
    return validate_mop(n, diagonals), cycle


@dataclass(frozen=True)
class EdgeSide:
    edge: Edge
    side: tuple[int, ...]


def sides_of_edge(mop: Mop, edge: Sequence[int]) -> tuple[EdgeSide, EdgeSide]:
    """The two hull arcs strictly between the endpoints: inner (u..v) then outer (v..u)."""
    u, v = norm_edge(*edge)
    if not mop.has_edge((u, v)):
        raise EdgeNotPresent(f"({u},{v}) is not an edge")
    inner = tuple(range(u + 1, v))
    outer = tuple(range(v + 1, mop.n)) + tuple(range(0, u))
    return EdgeSide((u, v), inner), EdgeSide((u, v), outer)


def induced_sub_mop(mop: Mop, edge: Sequence[int], side: EdgeSide) -> tuple[Mop, tuple[int, ...]]:
    """Sub-mop on ``side`` plus both edge endpoints, relabelled to 0..m-1.

    The returned label map sends new labels to original ones.
    """
    u, v = norm_edge(*edge)
    if not mop.has_edge((u, v)):
        raise EdgeNotPresent(f"({u},{v}) is not an edge")
    if mop.is_hull_edge((u, v)):
        raise NotInternalEdge(f"({u},{v}) is a hull edge")
    if side.edge != (u, v) or side not in sides_of_edge(mop, (u, v)):
        raise ValueError(f"{side} is not a side of ({u},{v})")
    if side.side and side.side[0] == u + 1:
        labels = (u,) + side.side + (v,)
    else:
        labels = (v,) + side.side + (u,)
    new = {old: i for i, old in enumerate(labels)}
    diags = []
    for a, b in mop.diagonals:
        if a in new and b in new:
            d = norm_edge(new[a], new[b])
            if not (d[1] - d[0] == 1 or (d[0] == 0 and d[1] == len(labels) - 1)):
                diags.append(d)
    return validate_mop(len(labels), diags), labels


def _triangles(mop: Mop) -> np.ndarray:
    # each face (a<b<c) is the inner-side triangle of its spanning edge (a, c)
    tris = []
    for a, c in [(0, mop.n - 1), *mop.diagonals]:
        nb = mop.adjacency[a]
        b = nb[bisect.bisect_left(nb, c) - 1]
        tris.append((a, b, c))
    tris.sort()
    return np.array(tris, dtype=np.int32).reshape(-1, 3)


def _triangle_neighbors(tris: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    owner: dict[Edge, tuple[int, int]] = {}
    nbr = np.full(tris.shape, -1, dtype=np.int32)
    back = np.full(tris.shape, -1, dtype=np.int32)
    for t, tri in enumerate(tris.tolist()):
        for k in range(3):
            e = norm_edge(tri[(k + 1) % 3], tri[(k + 2) % 3])
            if e not in owner:
                owner[e] = (t, k)
                continue
            s, ks = owner.pop(e)
            nbr[t, k], back[t, k] = s, ks
            nbr[s, ks], back[s, ks] = t, k
    return nbr, back


@dataclass(frozen=True)
class DualTree:
    triangles: tuple[tuple[int, int, int], ...]
    adjacency: tuple[tuple[int, int], ...]


def dual_tree(mop: Mop) -> DualTree:
    tris = tuple(tuple(t) for t in mop.triangles.tolist())
    nbr = mop.triangle_neighbors
    pairs = tuple(sorted((t, int(s)) for t in range(len(tris)) for s in nbr[t] if s > t))
    return DualTree(tris, pairs)
