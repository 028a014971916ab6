import pytest
from hypothesis import given, strategies as st

from mop2center import edge_eccentricities, enumerate_triangulations, one_center, vertex_eccentricities
from mop2center.eccentricity import INNER, OUTER, vertex_eccentricities_via
from mop2center.oracle import apsp, bfs

from .conftest import mops


def side_truth(mop, u, v, side):
    """(|e|, negative?) for both endpoints, straight from BFS inside the side."""
    arc = range(u + 1, v) if side == INNER else [*range(v + 1, mop.n), *range(u)]
    keep = set(arc) | {u, v}
    out = []
    for x, y in ((u, v), (v, u)):
        dx, dy = bfs(mop.adjacency, x, keep), bfs(mop.adjacency, y, keep)
        far = max(dx.values())
        behind = all(dy[z] == far - 1 for z in keep if dx[z] == far)
        out.append((far, behind))
    return out


def test_triangle_edge_sides(triangle):
    table = edge_eccentricities(triangle)
    assert len(table) == 6
    assert [abs(x) for x in table[(0, 1, OUTER)]] == [1, 1]
    assert table[(0, 1, INNER)] == (-1, -1)
    assert table[(0, 2, OUTER)] == (-1, -1)


def test_hull_edges_carry_minus_one(hexagon):
    table = edge_eccentricities(hexagon)
    for i in range(5):
        assert table[(i, i + 1, INNER)] == (-1, -1)
    assert table[(0, 5, OUTER)] == (-1, -1)


def test_fan_edge_sides(fan6):
    table = edge_eccentricities(fan6)
    assert [abs(x) for x in table[(0, 4, OUTER)]] == [1, 1]
    assert [abs(x) for x in table[(0, 4, INNER)]] == [1, 2]
    # vertex 4 reaches 1 only through 0
    assert table[(0, 4, INNER)][1] == -2


@pytest.mark.parametrize("fixture, ecc, radius, centers", [
    ("triangle", [1, 1, 1], 1, [0, 1, 2]),
    ("fan6", [1, 2, 2, 2, 2, 2], 1, [0]),
    ("hexagon", [2] * 6, 2, list(range(6))),
])
def test_vertex_ecc_and_one_center(request, fixture, ecc, radius, centers):
    mop = request.getfixturevalue(fixture)
    assert vertex_eccentricities(mop) == ecc
    assert one_center(mop) == (radius, centers)


@pytest.mark.parametrize("n", range(3, 10))
def test_exhaustive_signed_semantics(n):
    for mop in enumerate_triangulations(n):
        table = edge_eccentricities(mop)
        for (u, v, side), pair in table.values.items():
            truth = side_truth(mop, u, v, side)
            assert [(abs(e), e < 0) for e in pair] == truth, (mop, u, v, side)


@given(mops(3, 50), st.data())
def test_root_choice_does_not_matter(mop, data):
    root = data.draw(st.integers(0, mop.n - 3))
    assert edge_eccentricities(mop, root).values == edge_eccentricities(mop).values


@given(mops(3, 50))
def test_matches_bfs_and_choice_independent(mop):
    table = edge_eccentricities(mop)
    ecc = vertex_eccentricities(mop, table)
    assert ecc == apsp(mop).max(axis=1).tolist()
    for v in range(mop.n):
        assert set(vertex_eccentricities_via(mop, table, v)) == {ecc[v]}
    for u in range(mop.n):
        for v in mop.adjacency[u]:
            assert abs(ecc[u] - ecc[v]) <= 1
    assert all(1 <= abs(x) <= mop.n - 1 for pair in table.values.values() for x in pair)


@given(mops(3, 200))
def test_linear_visit_count(mop):
    assert edge_eccentricities(mop).visits <= 2 * (mop.n - 2)


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 11, 12])
def test_exhaustive_signed_semantics_large(n):
    # sides are isometric (tests/test_mop.py), so full-graph distances apply
    for mop in enumerate_triangulations(n):
        dist = apsp(mop)
        for (u, v, side), pair in edge_eccentricities(mop).values.items():
            arc = list(range(u + 1, v)) if side == INNER else [*range(v + 1, n), *range(u)]
            keep = arc + [u, v]
            for x, y, e in ((u, v, pair[0]), (v, u, pair[1])):
                dx, dy = dist[x, keep], dist[y, keep]
                far = dx.max()
                behind = bool((dy[dx == far] == far - 1).all())
                assert (abs(e), e < 0) == (far, behind), (mop, u, v, side)
