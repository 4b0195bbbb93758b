"""Acceptance criteria, one test per criterion.

``pytest`` prints a PASS/FAIL line per criterion at the end of the run
(see ``conftest.py``); running this file as a script does the same.
"""
import math
import subprocess
import sys
import time
from pathlib import Path

import numpy as np

from dtwmean.core import LossFunction, euclidean_space
from dtwmean.dtw import delannoy, dtw_distance, dtw_distance_bruteforce, enumerate_warping_paths
from dtwmean.frechet import FrechetProblem, nonexistence_demo, variance_curve
from dtwmean.glue import reduction_bound_sample
from dtwmean.solver import restricted_mean_euclidean
from dtwmean.verify import (VerifyConfig, certificate_fixtures, check_graph_lemmas, check_mean_certificate,
                            check_reduction_alphabet, check_reduction_euclidean)

from oracles import brute_dtw, grid_frechet_min, sqdiff

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"
FIG1_SAMPLE = ((0, 1, 0), (0, -1, 0))

CRITERIA = {
    1: "reduction theorem property suite",
    2: "reduction bound values",
    3: "two-series variance curve reproduction",
    4: "DTW oracle equivalence and path counts",
    5: "warping-graph lemma suite",
    6: "non-existence demonstration",
    7: "unrestricted mean certificate",
    8: "determinism of verify and CLI output",
}


def test_criterion_1_reduction_theorem():
    start = time.perf_counter()
    cfg = VerifyConfig(seed=0)
    alphabet = check_reduction_alphabet(cfg)
    euclid = check_reduction_euclidean(cfg)
    elapsed = time.perf_counter() - start
    assert alphabet.ok, alphabet.counterexample
    assert euclid.ok, euclid.counterexample
    assert euclid.cases == 1000
    assert elapsed < 120, f"took {elapsed:.1f}s"


def test_criterion_2_reduction_bound():
    assert reduction_bound_sample((4, 4)).rho == 6
    assert reduction_bound_sample((3, 3)).rho == 4
    for N in range(1, 6):
        assert reduction_bound_sample((1,) * N).rho == 1


def test_criterion_3_variance_curve():
    problem = FrechetProblem.uniform(FIG1_SAMPLE, euclidean_space(), LossFunction(1.0, 2.0))
    grid = np.arange(-6, 7) / 6
    exact = {m: restricted_mean_euclidean(problem, m).value for m in (3, 4)}
    dense = {m: grid_frechet_min(FIG1_SAMPLE, m, grid)[0] for m in (3, 4)}
    for m in (3, 4):
        assert math.isclose(exact[m], dense[m], abs_tol=1e-6), (m, exact[m], dense[m])
    curve = variance_curve(problem, 6)
    assert curve.argmin() == 4
    assert all(curve.values[3] <= v + 1e-9 for v in curve.values)
    assert math.isclose(exact[4], 0.5, abs_tol=1e-6), exact[4]
    assert math.isclose(exact[3], 1.0, abs_tol=1e-6), (
        f"F_3* = {exact[3]!r} by the exact solver and {dense[3]!r} on the dense grid, expected 1")


def test_criterion_4_dtw_oracle():
    rng = np.random.default_rng(0)
    space = euclidean_space()
    for _ in range(500):
        m, n = rng.integers(1, 6, size=2)
        x, y = rng.normal(size=m).tolist(), rng.normal(size=n).tolist()
        fast = dtw_distance(space, x, y).distance
        assert abs(fast - brute_dtw(x, y, sqdiff, math.sqrt)) <= 1e-12
        assert abs(fast - dtw_distance_bruteforce(space, x, y).distance) <= 1e-12
    assert [len(enumerate_warping_paths(k, k)) for k in range(1, 5)] == [1, 3, 13, 63]
    assert [delannoy(k, k) for k in range(1, 5)] == [1, 3, 13, 63]


def test_criterion_5_warping_graph_lemmas():
    res = check_graph_lemmas(VerifyConfig(seed=0, graph_max=5))
    assert res.ok, res.counterexample
    assert res.cases == sum(delannoy(m, n) for m in range(1, 6) for n in range(1, 6))


def test_criterion_6_nonexistence():
    rep = nonexistence_demo(grid_step=1e-3, max_length=4)
    assert rep.strictly_decreasing
    assert not rep.attained, (
        f"grid candidate {rep.grid_argmin} attains F = {rep.grid_minimum}, "
        f"the infimum of the {rep.best_family} family")


def test_criterion_7_mean_certificate():
    res = check_mean_certificate(VerifyConfig(seed=0))
    assert res.ok, res.counterexample
    assert res.cases == len(certificate_fixtures())


CLI_RUNS = [
    ["verify", "--seed", "0"],
    ["dtw", DATA / "x.csv", DATA / "y.csv", "--path"],
    ["mean", "--restrict", "4", DATA / "fig1-sample.csv"],
    ["mean", "--unrestricted", DATA / "fig1-sample.csv"],
    ["mean", "--unrestricted", "--space", DATA / "binary-space.json", DATA / "binary-sample.json"],
    ["variance-curve", DATA / "fig1-sample.csv", "--max-m", "6"],
    ["bound", DATA / "two-series-len3.csv"],
    ["reduce", DATA / "two-series-len3.csv", "--candidate", DATA / "long-candidate.csv", "--verbose"],
    ["demo-nonexistence"],
    ["wgraph", "check", DATA / "graph.json"],
    ["wgraph", "compactify", DATA / "graph.json"],
]


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "dtwmean.cli", *map(str, argv)], capture_output=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_8_determinism():
    for argv in CLI_RUNS:
        first, second = _cli(argv), _cli(argv)
        assert first == second, argv
        if argv[0] == "verify":
            assert first[0] == 0, first[2].decode()


if __name__ == "__main__":
    failed = 0
    for k, name in CRITERIA.items():
        test = next(f for n, f in globals().items() if n.startswith(f"test_criterion_{k}_"))
        try:
            test()
            status = "PASS"
        except AssertionError as exc:
            status, failed = f"FAIL ({exc})", failed + 1
        print(f"criterion {k} [{name}]: {status}")
    sys.exit(1 if failed else 0)
