import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dtwmean.core import euclidean_space, symbolic_space, xor_zero_space
from dtwmean.dtw import (WarpingPath, alignment_cost, delannoy, dtw_distance, dtw_distance_bruteforce,
                         enumerate_warping_paths, path_violations)
from dtwmean.exceptions import CapExceededError, InvalidPathError

from oracles import all_paths, brute_dtw, sqdiff

EUCLID = euclidean_space()
values = st.floats(-5, 5, allow_nan=False).map(lambda v: round(v, 3))
series = st.lists(values, min_size=1, max_size=5)


def test_path_validation_names_conditions():
    assert "boundary" in " ".join(path_violations([(1, 2), (2, 2)], 2, 2))
    assert "step" in " ".join(path_violations([(1, 1), (3, 3)], 3, 3))
    with pytest.raises(InvalidPathError):
        WarpingPath(((1, 1), (2, 1)), 2, 2)


@pytest.mark.parametrize("m,n,count", [(1, 5, 1), (2, 2, 3), (3, 3, 13), (4, 4, 63)])
def test_path_counts(m, n, count):
    paths = enumerate_warping_paths(m, n)
    assert len(paths) == count == delannoy(m, n)
    assert sorted(p.points for p in paths) == sorted(all_paths(m, n))


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_warping_paths(9, 2)


@pytest.mark.parametrize("points,expected", [
    (((1, 1), (2, 2)), 1),
    (((1, 1), (1, 2), (2, 2)), 2),
])
def test_alignment_cost(points, expected):
    assert alignment_cost(EUCLID, (0, 0), (0, 1), points) == expected


def test_alignment_cost_single_point():
    assert alignment_cost(EUCLID, (5,), (5,), [(1, 1)]) == 0


def test_euclidean_example():
    res = dtw_distance(EUCLID, (0, 0), (0, 1))
    assert res.distance == 1 and res.raw_cost == 1


def test_xor_zero_example():
    assert dtw_distance(xor_zero_space(), (1, 1), (1, -1)).distance == 4


def test_single_point_against_constant():
    assert dtw_distance(EUCLID, (1,), (1, 1, 1)).distance == 0
    assert dtw_distance_bruteforce(EUCLID, (1,), (1, 1, 1)).distance == 0


def test_tie_break_prefers_diagonal():
    res = dtw_distance(EUCLID, (0, 0, 0), (0, 0, 0))
    assert res.path.points == ((1, 1), (2, 2), (3, 3))


def test_symbolic_dtw():
    space = symbolic_space("ab")
    assert dtw_distance(space, "aab", "ab").distance == 0
    assert dtw_distance(space, "aa", "bb").distance == 2


@settings(max_examples=300, deadline=None)
@given(series, series)
def test_dtw_matches_exhaustive_oracle(x, y):
    res = dtw_distance(EUCLID, x, y)
    assert math.isclose(res.distance, brute_dtw(x, y, sqdiff, math.sqrt), rel_tol=1e-12, abs_tol=1e-12)
    assert not path_violations(res.path.points, len(x), len(y))
    assert math.isclose(alignment_cost(EUCLID, x, y, res.path), res.raw_cost, abs_tol=1e-12)


@settings(max_examples=200, deadline=None)
@given(series, series)
def test_dtw_symmetric(x, y):
    assert math.isclose(dtw_distance(EUCLID, x, y).distance, dtw_distance(EUCLID, y, x).distance,
                        abs_tol=1e-12)


@settings(max_examples=100, deadline=None)
@given(series)
def test_dtw_identity(x):
    assert dtw_distance(EUCLID, x, x).distance == 0
    assert dtw_distance_bruteforce(EUCLID, x, x).distance == 0


def test_bruteforce_agrees_on_random_pairs():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        m, n = rng.integers(1, 7, size=2)
        x, y = rng.normal(size=m).round(3).tolist(), rng.normal(size=n).round(3).tolist()
        assert math.isclose(dtw_distance(EUCLID, x, y).distance,
                            dtw_distance_bruteforce(EUCLID, x, y).distance, abs_tol=1e-12)


def test_multivariate_dtw():
    space = euclidean_space(2)
    x = [(0, 0), (1, 1)]
    y = [(0, 0), (0, 0), (1, 1)]
    assert dtw_distance(space, x, y).distance == 0
