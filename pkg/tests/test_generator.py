from collections import Counter

import pytest
from hypothesis import given, strategies as st
from scipy.stats import chisquare

from mop2center import GenSpec, brute_force_one_center, brute_force_two_center, enumerate_triangulations, family_mop, random_mop
from mop2center.generator import UnknownKind, remy_tree


def test_triangle():
    assert random_mop(3, 12345).diagonals == ()


def test_families():
    assert family_mop("fan", 6).diagonals == ((0, 2), (0, 3), (0, 4))
    assert family_mop("snake", 5).diagonals == ((0, 2), (2, 4))
    assert family_mop("snake", 6).diagonals == ((0, 2), (2, 5), (3, 5))
    with pytest.raises(UnknownKind):
        family_mop("spiral", 6)


@pytest.mark.parametrize("n", [8, 16, 32])
def test_snake_radius_grows(n):
    mop = family_mop("snake", n)
    r1 = brute_force_one_center(mop)[0]
    r2 = brute_force_two_center(mop)[0]
    assert r1 == n // 4
    assert r2 == n // 8


@given(st.integers(3, 300), st.integers(0, 2**64 - 1))
def test_deterministic_and_valid(n, seed):
    a, b = GenSpec(n, "uniform", seed).generate(), GenSpec(n, "uniform", seed).generate()
    assert a.to_json() == b.to_json()
    assert a.n == n and len(a.diagonals) == n - 3


@given(st.integers(1, 50), st.randoms(use_true_random=False))
def test_remy_tree_shape(internal, rnd):
    left, right, root = remy_tree(internal, rnd)
    leaves = sum(1 for x in left if x < 0)
    assert leaves == internal + 1
    children = [c for c in left + right if c >= 0]
    assert sorted(children + [root]) == list(range(2 * internal + 1))


@pytest.mark.parametrize("n, samples", [(5, 20000), (7, 40000)])
def test_small_uniformity(n, samples):
    support = {m.diagonals for m in enumerate_triangulations(n)}
    counts = Counter(random_mop(n, s).diagonals for s in range(samples))
    assert set(counts) == support
    assert chisquare([counts[d] for d in support]).pvalue > 0.001
