"""Compiled inner loops for the signed edge-eccentricity dynamic program.

Array conventions (shared with :mod:`mop2center.mop`):

* ``tri[t]`` is an ascending vertex triple, ``nbr[t, k]`` the triangle across
  the edge opposite ``tri[t, k]`` (or -1 on the hull).
* ``back[t, k]`` is the index of the same edge inside ``nbr[t, k]``.
* ``out[t, k, 0]`` / ``out[t, k, 1]`` hold the signed eccentricity of the edge
  endpoints ``tri[t, (k+1)%3]`` / ``tri[t, (k+2)%3]`` over the side of that edge
  that contains triangle ``t``.

A neighbour equal to ``blocked`` is treated as missing, which restricts the
sweep to one side of the edge shared with ``blocked``.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def _outer(tri, nbr, back, out, blocked, t, j, x):
    # value for endpoint x of edge j of t, over the side away from t
    s = nbr[t, j]
    if s < 0 or s == blocked:
        return -1
    j2 = back[t, j]
    if tri[s, (j2 + 1) % 3] == x:
        return out[s, j2, 0]
    return out[s, j2, 1]


@numba.njit(cache=True)
def _merge(tri, nbr, back, out, blocked, t, k):
    # edge p = (u, v) opposite w; a = (u, w), b = (w, v)
    e_far_u = _outer(tri, nbr, back, out, blocked, t, (k + 2) % 3, tri[t, (k + 1) % 3])
    e_far_v = _outer(tri, nbr, back, out, blocked, t, (k + 1) % 3, tri[t, (k + 2) % 3])
    # u reaches the b-side through v or w
    if e_far_v > 0:
        via_u = -(1 + e_far_v)
    else:
        via_u = -e_far_v
    if abs(e_far_u) >= abs(via_u):
        out[t, k, 0] = abs(e_far_u)
    else:
        out[t, k, 0] = via_u
    if e_far_u > 0:
        via_v = -(1 + e_far_u)
    else:
        via_v = -e_far_u
    if abs(e_far_v) >= abs(via_v):
        out[t, k, 1] = abs(e_far_v)
    else:
        out[t, k, 1] = via_v


@numba.njit(cache=True)
def sweep(tri, nbr, back, root, blocked, out, order, parent_k, stack):
    """Fill ``out`` for every triangle reachable from ``root``.

    Returns (number of triangles reached, number of triangle visits).
    """
    parent_k[root] = -1
    stack[0] = root
    top = 1
    cnt = 0
    while top > 0:
        top -= 1
        t = stack[top]
        order[cnt] = t
        cnt += 1
        for k in range(3):
            s = nbr[t, k]
            if s < 0 or s == blocked:
                continue
            if parent_k[t] >= 0 and s == nbr[t, parent_k[t]]:
                continue
            parent_k[s] = back[t, k]
            stack[top] = s
            top += 1
    # leaves to root: the side of each parent edge that holds the subtree
    for i in range(cnt - 1, 0, -1):
        t = order[i]
        _merge(tri, nbr, back, out, blocked, t, parent_k[t])
    # root to leaves: every remaining (edge, side)
    for i in range(cnt):
        t = order[i]
        for k in range(3):
            if k != parent_k[t]:
                _merge(tri, nbr, back, out, blocked, t, k)
    return cnt, 2 * cnt - 1


@numba.njit(cache=True)
def vertex_ecc(tri, nbr, back, out, blocked, order, cnt, ecc):
    """Write every reached vertex's eccentricity into ``ecc`` via one incident edge."""
    for i in range(cnt):
        t = order[i]
        for k in range(3):
            for pos in range(2):
                x = tri[t, (k + 1 + pos) % 3]
                inside = abs(out[t, k, pos])
                outside = abs(_outer(tri, nbr, back, out, blocked, t, k, x))
                ecc[x] = max(inside, outside)


@numba.njit(cache=True)
def _side_center(tri, nbr, back, root, blocked, out, order, parent_k, stack):
    cnt, visits = sweep(tri, nbr, back, root, blocked, out, order, parent_k, stack)
    best_r = 1 << 30
    best_c = -1
    for i in range(cnt):
        t = order[i]
        for k in range(3):
            for pos in range(2):
                x = tri[t, (k + 1 + pos) % 3]
                e = max(abs(out[t, k, pos]), abs(_outer(tri, nbr, back, out, blocked, t, k, x)))
                if e < best_r or (e == best_r and x < best_c):
                    best_r = e
                    best_c = x
    return best_r, best_c, visits


@numba.njit(cache=True)
def all_cut_edges(tri, nbr, back, cut_tri, cut_other):
    """Best 1-center of both sides of each internal edge.

    Cut edge i is shared by ``cut_tri[i]`` (alpha side) and ``cut_other[i]``
    (beta side). Returns per-edge radii, centers and the total triangle visits.
    """
    m = tri.shape[0]
    ncut = cut_tri.shape[0]
    out = np.zeros((m, 3, 2), dtype=np.int32)
    order = np.empty(m, dtype=np.int32)
    parent_k = np.empty(m, dtype=np.int32)
    stack = np.empty(m, dtype=np.int32)
    radii = np.empty((ncut, 2), dtype=np.int64)
    centers = np.empty((ncut, 2), dtype=np.int64)
    visits = 0
    for i in range(ncut):
        a, b = cut_tri[i], cut_other[i]
        r, c, v = _side_center(tri, nbr, back, a, b, out, order, parent_k, stack)
        radii[i, 0] = r
        centers[i, 0] = c
        visits += v
        r, c, v = _side_center(tri, nbr, back, b, a, out, order, parent_k, stack)
        radii[i, 1] = r
        centers[i, 1] = c
        visits += v
    return radii, centers, visits
