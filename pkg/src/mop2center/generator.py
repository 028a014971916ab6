"""Mop instances: uniform random triangulations and structured families.

Uniform sampling draws a full binary tree with n-2 internal nodes by Rémy's
growth process, then reads it as a triangulation: the root is the triangle on
hull edge (0, n-1) and its left subtree triangulates the polygon below the
apex. Randomness comes from ``random.Random(seed)`` (Mersenne Twister), so a
seed fixes the instance.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .mop import Mop, MopError, validate_mop

KINDS = ("uniform", "fan", "snake")


class UnknownKind(MopError):
    pass


def remy_tree(internal: int, rng: random.Random) -> tuple[list[int], list[int], int]:
    """Uniform full binary tree as (left, right, root); leaves have child -1."""
    size = 2 * internal + 1
    left = [-1] * size
    right = [-1] * size
    parent = [-1] * size
    root = 0
    for i in range(1, internal + 1):
        x = rng.randrange(2 * i - 1)
        node, leaf = 2 * i - 1, 2 * i
        p = parent[x]
        if p < 0:
            root = node
        elif left[p] == x:
            left[p] = node
        else:
            right[p] = node
        parent[node] = p
        if rng.getrandbits(1):
            left[node], right[node] = x, leaf
        else:
            left[node], right[node] = leaf, x
        parent[x] = parent[leaf] = node
    return left, right, root


def tree_to_diagonals(left: list[int], right: list[int], root: int, n: int) -> list[tuple[int, int]]:
    order, todo = [], [root]
    while todo:
        x = todo.pop()
        order.append(x)
        if left[x] >= 0:
            todo += [left[x], right[x]]
    leaves = [0] * len(left)
    for x in reversed(order):
        leaves[x] = 1 if left[x] < 0 else leaves[left[x]] + leaves[right[x]]

    diagonals = []
    todo = [(root, 0, n - 1)]
    while todo:
        x, lo, hi = todo.pop()
        if left[x] < 0:
            continue
        apex = lo + leaves[left[x]]
        for a, b in ((lo, apex), (apex, hi)):
            if b - a > 1:
                diagonals.append((a, b))
        todo += [(left[x], lo, apex), (right[x], apex, hi)]
    return diagonals


def random_mop(n: int, seed: int) -> Mop:
    if n < 3:
        raise MopError(f"n={n}, need at least 3 vertices")
    rng = random.Random(seed)
    left, right, root = remy_tree(n - 2, rng)
    return validate_mop(n, tree_to_diagonals(left, right, root, n))


def family_mop(kind: str, n: int) -> Mop:
    if n < 3:
        raise MopError(f"n={n}, need at least 3 vertices")
    if kind == "fan":
        return validate_mop(n, [(0, k) for k in range(2, n - 1)])
    if kind == "snake":
        # zigzag path 0, 2, n-1, 3, n-2, 4, ...; consecutive pairs are diagonals
        path = [0]
        lo, hi = 2, n - 1
        while len(path) < n - 2:
            path.append(lo)
            lo += 1
            if len(path) < n - 2:
                path.append(hi)
                hi -= 1
        return validate_mop(n, list(zip(path, path[1:])))
    raise UnknownKind(f"unknown family {kind!r}")


@dataclass(frozen=True)
class GenSpec:
    n: int
    kind: str = "uniform"
    seed: int = 0

    def generate(self) -> Mop:
        if self.kind == "uniform":
            return random_mop(self.n, self.seed)
        return family_mop(self.kind, self.n)
