import numpy as np
import pytest

from dtwmean.core import LossFunction, euclidean_space
from dtwmean.frechet import FrechetProblem, frechet_value
from dtwmean.glue import redundant_splice_nodes
from dtwmean.reduce import alignment_glued_graph, reduce_once, reduce_to_bound
from dtwmean.verify import random_euclidean_problem

EUCLID = euclidean_space()


def uniform(*sample):
    return FrechetProblem.uniform(sample, EUCLID, LossFunction(1.0, 1.0))


def test_length_one_sample():
    p = uniform((2,), (5,))
    shorter, step = reduce_once(p, (1, 2, 3))
    assert len(shorter) == 2 and step.f_after <= step.f_before


def test_redundant_element_can_lower_f():
    # the middle element 2 shares its partner with a neighbour in both alignments
    p = uniform((0, 1, 3, 4), (0, 1, 3, 4))
    x = (0, 1, 2, 3, 4)
    assert frechet_value(p, x) == pytest.approx(1)
    g, _ = alignment_glued_graph(p, x)
    assert 3 in redundant_splice_nodes(g)
    assert frechet_value(p, (0, 1, 3, 4)) == 0
    # the procedure takes the smallest redundant element, which never raises F
    _, step = reduce_once(p, x)
    assert step.removed in redundant_splice_nodes(g) and step.f_after <= step.f_before


def test_non_redundant_removal_declined():
    p = uniform((0, 1), (0, 1))
    x = (0, 1)
    assert frechet_value(p, x) == 0
    assert frechet_value(p, x[1:]) == pytest.approx(1)
    assert reduce_once(p, x) is None


def test_long_mean_reduces_without_loss():
    p = uniform((1, 2, 3), (1, 2, 3))
    x = (1, 2, 3, 3, 3, 3)
    assert frechet_value(p, x) == 0
    final, steps = reduce_to_bound(p, x)
    assert final == (1, 2, 3)
    assert all(s.f_after == 0 for s in steps)


def test_glued_graph_of_alignment():
    p = uniform((1, 2, 3), (1, 2, 3))
    g, paths = alignment_glued_graph(p, (1, 2, 3, 3))
    assert g.splice_size == 4 and len(paths) == 2


def test_short_candidate_may_not_reduce():
    p = uniform((0, 1, 0), (0, -1, 0))
    final, steps = reduce_to_bound(p, (0, 0.5, -0.5, 0))
    assert len(final) <= 4
    assert len(steps) == 4 - len(final)


def test_fuzz_trajectories():
    rng = np.random.default_rng(21)
    for _ in range(300):
        p = random_euclidean_problem(rng)
        rho = p.reduction_bound.rho
        extra = int(rng.integers(1, 4))
        x = tuple(np.round(rng.normal(size=rho + extra), 2))
        final, steps = reduce_to_bound(p, x)
        assert len(final) <= rho and len(steps) >= extra
        fs = [steps[0].f_before] + [s.f_after for s in steps]
        assert all(b <= a + 1e-9 for a, b in zip(fs, fs[1:]))
        assert fs[-1] == pytest.approx(frechet_value(p, final))


def test_stop_at_bound():
    p = uniform((1, 2, 3), (1, 2, 3))
    final, steps = reduce_to_bound(p, (1, 1, 2, 2, 3, 3, 3), stop_at_bound=True)
    assert len(final) == p.reduction_bound.rho == 4
    assert len(steps) == 3


def test_step_json():
    p = uniform((2,), (5,))
    _, step = reduce_once(p, (1, 2))
    doc = step.to_json()
    assert doc["removed"] == step.removed and len(doc["paths"]) == 2
