"""Optimal 2-center of a mop by splitting along every internal edge.

Each internal edge (u, v) cuts the mop into two sub-mops that share u and v.
The candidate radius of the edge is the larger of the two sub-mop radii; the
answer is the smallest candidate. Every sub-mop radius is a fresh linear
sweep, so the whole search is quadratic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .eccentricity import one_center
from .mop import Edge, Mop, MopError, NotInternalEdge, induced_sub_mop, norm_edge, sides_of_edge
from .oracle import bfs

ALPHA, BETA = 0, 1


class InfeasibleSolution(MopError):
    """A vertex is not within the radius of its assigned center (internal bug)."""


@dataclass(frozen=True)
class TwoCenterSolution:
    radius: int
    cut_edge: Edge | None
    centers: tuple[int, int]
    assignment: tuple[int, ...]
    visits: int = 0

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "cut_edge": list(self.cut_edge) if self.cut_edge else None,
            "centers": list(self.centers),
            "assignment": list(self.assignment),
        }


def candidate_radius(mop: Mop, edge: Edge) -> tuple[int, tuple[int, int]]:
    """Reference evaluation of one cut edge through explicit sub-mops.

    Returns the edge's radius and the lowest-label center of each side
    (inner arc first), in original labels.
    """
    u, v = norm_edge(*edge)
    if mop.is_hull_edge((u, v)):
        raise NotInternalEdge(f"({u},{v}) is a hull edge")
    radii, centers = [], []
    for side in sides_of_edge(mop, (u, v)):
        sub, labels = induced_sub_mop(mop, (u, v), side)
        r, cs = one_center(sub)
        radii.append(r)
        centers.append(min(labels[c] for c in cs))
    return max(radii), (centers[0], centers[1])


def _cut_triangles(mop: Mop) -> tuple[list[Edge], np.ndarray, np.ndarray]:
    # for each diagonal: the triangle on its inner arc and the one on its outer arc
    tri, nbr = mop.triangles, mop.triangle_neighbors
    where: dict[Edge, int] = {}
    for t, (a, b, c) in enumerate(tri.tolist()):
        where[(a, c)] = t
    edges = list(mop.diagonals)
    inner = np.array([where[e] for e in edges], dtype=np.int32)
    outer = np.empty(len(edges), dtype=np.int32)
    for i, t in enumerate(inner.tolist()):
        # (a, c) is opposite the middle vertex
        outer[i] = nbr[t, 1]
    return edges, inner, outer


def edge_radii(mop: Mop) -> tuple[list[Edge], np.ndarray, np.ndarray, int]:
    """Per-diagonal side radii and side centers (inner, outer), plus sweep visits."""
    edges, inner, outer = _cut_triangles(mop)
    if not edges:
        return edges, np.empty((0, 2), np.int64), np.empty((0, 2), np.int64), 0
    radii, centers, visits = _kernels.all_cut_edges(
        mop.triangles, mop.triangle_neighbors, mop.triangle_back, inner, outer)
    return edges, radii, centers, int(visits)


def two_center(mop: Mop) -> TwoCenterSolution:
    if mop.n == 3:
        return TwoCenterSolution(1, None, (0, 1), (ALPHA, ALPHA, BETA))
    edges, radii, centers, visits = edge_radii(mop)
    worst = radii.max(axis=1)
    # argmin returns the first minimum, and edges are in lexicographic order
    i = int(np.argmin(worst))
    cut = edges[i]
    pair = (int(centers[i, 0]), int(centers[i, 1]))
    r = int(worst[i])
    if pair[0] == pair[1]:
        # a shared endpoint centers both sides, so it covers everything alone;
        # the beta center only has to cover itself
        spare = min(sides_of_edge(mop, cut)[1].side)
        assignment = tuple(BETA if x == spare else ALPHA for x in range(mop.n))
        return TwoCenterSolution(r, cut, (pair[0], spare), assignment, visits)
    assignment = assign_cover_sets(mop, cut, pair, r)
    return TwoCenterSolution(r, cut, pair, assignment, visits)


def assign_cover_sets(mop: Mop, cut_edge: Edge, centers: tuple[int, int], radius: int) -> tuple[int, ...]:
    """Alpha owns the inner arc of ``cut_edge``, beta the outer arc.

    Each endpoint goes to the nearer center, ties to alpha.
    """
    u, v = norm_edge(*cut_edge)
    inner, outer = sides_of_edge(mop, (u, v))
    da, db = (bfs(mop.adjacency, c) for c in centers)
    assignment = [ALPHA] * mop.n
    for x in outer.side:
        assignment[x] = BETA
    for x in (u, v):
        if db[x] < da[x]:
            assignment[x] = BETA
    for x in range(mop.n):
        if (da if assignment[x] == ALPHA else db)[x] > radius:
            raise InfeasibleSolution(f"vertex {x} is beyond radius {radius} of its center")
    return tuple(assignment)
