"""Signed edge eccentricities, vertex eccentricities and the 1-center of a mop.

For an edge p = (u, v) and one of its sides S, ``e(p, x, S)`` is the
eccentricity of endpoint x in the sub-mop on S + {u, v}. The sign is negative
exactly when every vertex realising that eccentricity is strictly closer to
the other endpoint, i.e. x only reaches its far vertices "through" the other
endpoint. An empty side therefore carries -1 for both endpoints.

The table is filled by two sweeps over the dual tree of triangles (leaves to
root, then root to leaves); each triangle visit is constant work.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .mop import Edge, Mop, norm_edge

INNER, OUTER = 0, 1


@dataclass(frozen=True)
class EdgeSideTable:
    """Signed eccentricities keyed by ``(u, v, side)`` with u < v.

    ``side`` is INNER for the hull arc u+1..v-1 and OUTER for v+1..u-1; the
    value is ``(e(p, u, S), e(p, v, S))``.
    """

    n: int
    values: dict[tuple[int, int, int], tuple[int, int]]
    visits: int

    def __getitem__(self, key: tuple[int, int, int]) -> tuple[int, int]:
        return self.values[key]

    def __len__(self) -> int:
        return len(self.values)

    def signed(self, edge: Edge, side: int, x: int) -> int:
        u, v = norm_edge(*edge)
        pair = self.values[(u, v, side)]
        return pair[0] if x == u else pair[1]


def _root_triangle(mop: Mop) -> int:
    # the triangle holding edge (0, 1), the smallest edge
    tris = mop.triangles
    return int(np.flatnonzero((tris[:, 0] == 0) & (tris[:, 1] == 1))[0])


def _sweep_full(mop: Mop, root: int | None = None):
    tri, nbr, back = mop.triangles, mop.triangle_neighbors, mop.triangle_back
    m = len(tri)
    out = np.zeros((m, 3, 2), dtype=np.int32)
    order = np.empty(m, dtype=np.int32)
    parent_k = np.empty(m, dtype=np.int32)
    stack = np.empty(m, dtype=np.int32)
    if root is None:
        root = _root_triangle(mop)
    cnt, visits = _kernels.sweep(tri, nbr, back, root, -1, out, order, parent_k, stack)
    assert cnt == m
    return out, order, visits


def edge_eccentricities(mop: Mop, root: int | None = None) -> EdgeSideTable:
    """Signed eccentricity of both endpoints for every (edge, side) pair.

    ``root`` picks the triangle the sweeps start from; the result does not
    depend on it.
    """
    out, _, visits = _sweep_full(mop, root)
    tri = mop.triangles.tolist()
    values: dict[tuple[int, int, int], tuple[int, int]] = {}
    for t, (a, b, c) in enumerate(tri):
        for k in range(3):
            w = tri[t][k]
            x, y = tri[t][(k + 1) % 3], tri[t][(k + 2) % 3]
            ex, ey = int(out[t, k, 0]), int(out[t, k, 1])
            if x > y:
                x, y, ex, ey = y, x, ey, ex
            side = INNER if x < w < y else OUTER
            values[(x, y, side)] = (ex, ey)
    n = mop.n
    for i in range(n):
        u, v = norm_edge(i, (i + 1) % n)
        empty = OUTER if (u, v) == (0, n - 1) else INNER
        values[(u, v, empty)] = (-1, -1)
    assert len(values) == 2 * (2 * n - 3)
    return EdgeSideTable(n, values, visits)


def vertex_eccentricities(mop: Mop, table: EdgeSideTable | None = None) -> list[int]:
    """Eccentricity of every vertex from one incident edge's two sides."""
    if table is None:
        table = edge_eccentricities(mop)
    ecc = []
    for v in range(mop.n):
        w = mop.adjacency[v][0]
        ecc.append(_ecc_via(table, v, w))
    return ecc


def _ecc_via(table: EdgeSideTable, v: int, w: int) -> int:
    return max(abs(table.signed((v, w), INNER, v)), abs(table.signed((v, w), OUTER, v)))


def vertex_eccentricities_via(mop: Mop, table: EdgeSideTable, v: int) -> list[int]:
    """Eccentricity of ``v`` as read from each incident edge in turn."""
    return [_ecc_via(table, v, w) for w in mop.adjacency[v]]


def one_center(mop: Mop) -> tuple[int, list[int]]:
    """(radius, ascending list of center vertices)."""
    out, order, _ = _sweep_full(mop)
    ecc = np.zeros(mop.n, dtype=np.int64)
    _kernels.vertex_ecc(mop.triangles, mop.triangle_neighbors, mop.triangle_back, out, -1, order, len(order), ecc)
    r = int(ecc.min())
    return r, np.flatnonzero(ecc == r).tolist()
