import pytest
from hypothesis import given, strategies as st

from mop2center import (
    assign_cover_sets,
    brute_force_two_center,
    candidate_radius,
    family_mop,
    two_center,
    validate_mop,
    verify_solution,
)
from mop2center.mop import NotInternalEdge
from mop2center.two_center import InfeasibleSolution, edge_radii

from .conftest import mops


def test_candidate_radius_examples(hexagon, fan6):
    r, (ca, cb) = candidate_radius(hexagon, (0, 2))
    assert r == 1 and ca in (0, 1, 2) and cb == 4
    assert candidate_radius(validate_mop(4, [(0, 2)]), (0, 2))[0] == 1
    assert candidate_radius(fan6, (0, 3)) == (1, (0, 0))
    with pytest.raises(NotInternalEdge):
        candidate_radius(hexagon, (0, 1))


def test_triangle_fallback(triangle):
    sol = two_center(triangle)
    assert (sol.radius, sol.cut_edge, sol.centers, sol.assignment) == (1, None, (0, 1), (0, 0, 1))
    report = verify_solution(triangle, sol)
    assert report.ok


def test_hexagon(hexagon):
    sol = two_center(hexagon)
    assert sol.radius == 1
    assert sol.cut_edge == (0, 2) and sol.centers == (0, 4)
    assert sol.assignment == (0, 0, 0, 1, 1, 1)
    assert sol.to_dict() == {"radius": 1, "cut_edge": [0, 2], "centers": [0, 4],
                             "assignment": [0, 0, 0, 1, 1, 1]}


def test_assign_cover_sets_ties_go_alpha(hexagon):
    assert assign_cover_sets(hexagon, (0, 2), (1, 4), 1) == (0, 0, 0, 1, 1, 1)
    with pytest.raises(InfeasibleSolution):
        assign_cover_sets(hexagon, (0, 2), (1, 4), 0)


@pytest.mark.parametrize("n", [4, 5, 9, 30])
def test_fan_radius_one(n):
    mop = family_mop("fan", n)
    sol = two_center(mop)
    assert sol.radius == 1
    assert sol.centers[0] != sol.centers[1]
    report = verify_solution(mop, sol)
    assert report.ok and report.centers_in_arcs


@given(mops(4, 30))
def test_fast_path_matches_explicit_sub_mops(mop):
    edges, radii, centers, _ = edge_radii(mop)
    for i, e in enumerate(edges):
        assert candidate_radius(mop, e) == (radii[i].max(), (centers[i, 0], centers[i, 1]))


@given(mops(3, 80))
def test_feasible_and_upper_bound(mop):
    sol = two_center(mop)
    report = verify_solution(mop, sol, with_oracle=True)
    assert report.covered and report.contiguous
    if mop.n > 3:
        assert report.centers_in_arcs
    assert report.radius_delta >= 0


@given(mops(4, 80))
def test_first_minimum_edge_chosen(mop):
    sol = two_center(mop)
    edges, radii, _, _ = edge_radii(mop)
    worst = radii.max(axis=1).tolist()
    assert sol.radius == min(worst)
    assert sol.cut_edge == edges[worst.index(min(worst))]


@given(mops(4, 120))
def test_work_bound(mop):
    n = mop.n
    # both sides together hold n triangles' worth: 2(n+2-4) visits per cut edge
    assert two_center(mop).visits == (n - 3) * 2 * (n - 2) - 2 * (n - 3)
    assert two_center(mop).visits <= 4 * n * n


def test_tampered_radius_shows_negative_slack(hexagon):
    from dataclasses import replace
    sol = two_center(hexagon)
    report = verify_solution(hexagon, replace(sol, radius=sol.radius - 1))
    assert not report.covered


def test_known_gap_instance():
    # smallest size where splitting along an internal edge is not optimal
    mop = validate_mop(9, [(1, 8), (2, 4), (2, 8), (4, 6), (4, 8), (6, 8)])
    assert brute_force_two_center(mop)[0] == 1
    assert two_center(mop).radius == 2
