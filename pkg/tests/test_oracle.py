import numpy as np
import pytest
from hypothesis import given

from mop2center import apsp, brute_force_one_center, brute_force_two_center, enumerate_triangulations, validate_mop
from mop2center.oracle import CapExceeded, continuous_split, is_cyclic_arc, solve_oracle

from .conftest import mops

CATALAN = {3: 1, 4: 2, 5: 5, 6: 14, 7: 42, 8: 132, 9: 429, 10: 1430, 11: 4862, 12: 16796}


def test_apsp_examples(triangle, fan6):
    d = apsp(triangle)
    assert (d == 1 - np.eye(3, dtype=int)).all()
    d = apsp(fan6)
    assert d[1, 5] == 2 and d[1, 3] == 2


def test_one_center_examples(triangle, fan6):
    assert brute_force_one_center(triangle) == (1, [0, 1, 2])
    assert brute_force_one_center(fan6) == (1, [0])


def test_two_center_examples(triangle, hexagon):
    assert brute_force_two_center(triangle) == (1, [(0, 1), (0, 2), (1, 2)])
    r, pairs = brute_force_two_center(hexagon)
    assert r == 1 and (1, 4) in pairs
    assert brute_force_two_center(validate_mop(4, [(0, 2)]))[0] == 1


@pytest.mark.parametrize("n, count", sorted(CATALAN.items())[:8])
def test_catalan_counts(n, count):
    seen = {m.diagonals for m in enumerate_triangulations(n)}
    assert len(seen) == count


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_triangulations(14))


@given(mops(3, 40))
def test_distance_matrix_laws(mop):
    d = apsp(mop)
    n = mop.n
    assert (d == d.T).all() and (np.diag(d) == 0).all()
    assert (d[:, :, None] <= d[:, None, :] + d.T[None, :, :]).all()
    for u in range(n):
        for v in range(n):
            assert d[u, v] <= min(abs(u - v), n - abs(u - v))


@given(mops(3, 40))
def test_two_centers_never_worse_than_one(mop):
    res = solve_oracle(mop)
    assert res.two_center_radius <= res.one_center_radius
    for a, b in res.best_pairs:
        assert np.minimum(res.apsp[a], res.apsp[b]).max() == res.two_center_radius


def test_cyclic_arc():
    assert is_cyclic_arc([True, True, False, False])
    assert is_cyclic_arc([True, False, False, True])
    assert not is_cyclic_arc([True, False, True, False])


def test_continuous_split_hexagon(hexagon):
    arc = continuous_split(apsp(hexagon), (1, 4), 1)
    assert arc is not None and arc[1] and not arc[4]
