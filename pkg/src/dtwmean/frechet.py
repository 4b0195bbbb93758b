"""Frechet functions over a DTW space.

``F(x) = (1/N) * sum_k h_k(dtw(x, x_k))``. Weights are folded into the
loss functions; the ``1/N`` factor is always applied.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import EPS, DtwSpace, LossFunction, xor_zero_space
from .dtw import dtw_distance
from .glue import ReductionBoundReport, reduction_bound_sample


@dataclass(frozen=True)
class FrechetProblem:
    """A sample of ``N`` time series, a DTW space and one loss per series."""

    sample: tuple
    space: DtwSpace
    losses: tuple

    def __post_init__(self):
        sample = tuple(self.space.series(x) for x in self.sample)
        if not sample:
            raise ValueError("a Frechet problem needs at least one sample series")
        losses = tuple(self.losses)
        if len(losses) != len(sample):
            raise ValueError(f"{len(losses)} losses for {len(sample)} sample series")
        if not all(isinstance(h, LossFunction) for h in losses):
            raise TypeError("losses must be LossFunction instances")
        object.__setattr__(self, "sample", sample)
        object.__setattr__(self, "losses", losses)

    @classmethod
    def uniform(cls, sample: Sequence, space: DtwSpace, loss: LossFunction = LossFunction(1.0, 2.0)):
        """Same loss for every series (default: squared loss)."""
        sample = tuple(sample)
        return cls(sample, space, (loss,) * len(sample))

    @property
    def size(self) -> int:
        return len(self.sample)

    @property
    def lengths(self) -> tuple:
        return tuple(len(x) for x in self.sample)

    @property
    def reduction_bound(self) -> ReductionBoundReport:
        return reduction_bound_sample(self.lengths)

    def drop(self, k: int) -> FrechetProblem:
        """Problem without series ``k`` (and its loss)."""
        keep = [i for i in range(self.size) if i != k]
        return FrechetProblem(tuple(self.sample[i] for i in keep), self.space,
                              tuple(self.losses[i] for i in keep))


def frechet_value(problem: FrechetProblem, x: Sequence) -> float:
    x = problem.space.series(x)
    total = 0.0
    for y, h in zip(problem.sample, problem.losses):
        total += h(dtw_distance(problem.space, x, y).distance)
    return total / problem.size


def restricted_variance(problem: FrechetProblem, m: int, caps=None) -> float:
    """Exact minimum of ``F`` over series of length ``m``."""
    from .solver import restricted_mean

    return restricted_mean(problem, m, caps=caps).value


@dataclass(frozen=True)
class VarianceCurve:
    """Restricted variances ``F_m*`` for ``m = 1..m_max`` and their running minima."""

    values: tuple
    running_min: tuple
    minimizers: tuple

    @property
    def m_max(self) -> int:
        return len(self.values)

    def argmin(self, eps: float = EPS) -> int:
        """Smallest length attaining the minimal restricted variance."""
        best = min(self.values)
        return next(m for m, v in enumerate(self.values, start=1) if v <= best + eps)

    def rows(self):
        for m, (v, r, z) in enumerate(zip(self.values, self.running_min, self.minimizers), start=1):
            yield m, v, r, z


def variance_curve(problem: FrechetProblem, m_max: int, caps=None) -> VarianceCurve:
    from .solver import restricted_mean

    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    values, running, minimizers = [], [], []
    for m in range(1, m_max + 1):
        res = restricted_mean(problem, m, caps=caps)
        values.append(res.value)
        running.append(res.value if not running else min(running[-1], res.value))
        minimizers.append(res.minimizer)
    return VarianceCurve(tuple(values), tuple(running), tuple(minimizers))


# -- non-existence example -------------------------------------------------

def nonexistence_problem() -> FrechetProblem:
    """Sample ``(1, 1)``, ``(1, -1)`` under the xor-zero distance with ``h(u) = u``."""
    return FrechetProblem.uniform([(1.0, 1.0), (1.0, -1.0)], xor_zero_space(), LossFunction(1.0, 1.0))


FAMILIES = {
    "(1,t)": lambda t: (1.0, t),
    "(t)": lambda t: (t,),
}


@dataclass(frozen=True)
class NonexistenceReport:
    """Evidence gathered on whether ``F`` of the xor-zero example attains its infimum.

    ``families`` maps a family name to ``(t, candidate, F)`` triples for
    ``t = 1, 1/2, ..., 1/steps``. ``grid_minima`` maps each length to the
    exact minimum of ``F`` over the coordinate grid and a minimizing grid
    candidate. ``attained`` is True if some grid candidate reaches the
    empirical infimum (within ``eps``).
    """

    families: dict
    best_family: str
    strictly_decreasing: bool
    family_infimum: float
    grid_minima: dict
    grid_minimum: float
    grid_argmin: tuple
    empirical_infimum: float
    attained: bool


def nonexistence_demo(steps: int = 20, grid_step: float = 1e-3, grid_bound: float = 2.0,
                      max_length: int = 4, eps: float = EPS,
                      problem: Optional[FrechetProblem] = None) -> NonexistenceReport:
    from .solver import separable_grid_minimum

    if steps < 1:
        raise ValueError("steps must be >= 1")
    problem = problem or nonexistence_problem()
    ts = [1.0 / s for s in range(1, steps + 1)]
    families = {}
    for name, make in FAMILIES.items():
        families[name] = [(t, make(t), frechet_value(problem, make(t))) for t in ts]

    def infimum(rows):
        return min(f for _, _, f in rows)

    best = min(families, key=lambda name: (infimum(families[name]), name))
    fvals = [f for _, _, f in families[best]]
    strictly = all(b < a for a, b in zip(fvals, fvals[1:]))

    k = int(round(grid_bound / grid_step))
    # rounding keeps 0 and the grid values of the sample exact
    grid = np.round(np.arange(-k, k + 1) * grid_step, 12)
    grid_minima = {}
    for m in range(1, max_length + 1):
        value, z = separable_grid_minimum(problem, m, grid)
        grid_minima[m] = (value, z)
    gm_len = min(grid_minima, key=lambda m: (grid_minima[m][0], m))
    grid_min, grid_arg = grid_minima[gm_len]
    fam_inf = min(fvals)
    emp = min(fam_inf, grid_min)
    return NonexistenceReport(families, best, strictly, fam_inf, grid_minima, grid_min,
                              grid_arg, emp, grid_min <= emp + eps)
