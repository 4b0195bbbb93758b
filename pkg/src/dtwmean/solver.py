"""Exact restricted and unrestricted sample means for small problems.

Three exact routes are available:

* symbolic attributes: exhaustive search over all ``|A|**m`` candidates;
* squared-Euclidean local distance with losses for which ``h_k(dtw)`` is
  ``w_k`` times the alignment cost: every combination of warping paths
  fixes a quadratic whose minimizer is a weighted average of aligned
  sample elements, so the restricted minimum is the best such average;
* the unrestricted mean, obtained by sweeping lengths up to the
  reduction bound.

A coordinate-grid search is provided as an explicitly approximate
fallback for other (space, loss) combinations.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass, fields
from typing import Optional, Sequence

import numpy as np

from .core import EPS, REAL, SQEUCLIDEAN, SYMBOL
from .dtw import delannoy, enumerate_warping_paths
from .exceptions import CapExceededError, UnsupportedProblemError
from .frechet import FrechetProblem, frechet_value

ALPHABET_ENUMERATION = "alphabet-enumeration"
PATH_COMBINATION = "path-combination"
LENGTH_SWEEP = "length-sweep"
COORDINATE_GRID = "coordinate-grid"


@dataclass(frozen=True)
class SolverCaps:
    max_m: int = 8
    max_n: int = 8
    max_N: int = 4
    max_configurations: int = 500_000
    alphabet_max_candidates: int = 200_000

    def __post_init__(self):
        for f in fields(self):
            if int(getattr(self, f.name)) < 1:
                raise ValueError(f"cap {f.name} must be positive")

    @classmethod
    def from_json(cls, doc) -> SolverCaps:
        if isinstance(doc, str):
            doc = json.loads(doc)
        unknown = set(doc) - {f.name for f in fields(cls)}
        if unknown:
            raise ValueError(f"unknown caps: {sorted(unknown)}")
        return cls(**{k: int(v) for k, v in doc.items()})

    def to_json(self) -> dict:
        return asdict(self)

    @property
    def path_cap(self) -> int:
        return max(self.max_m, self.max_n)

    def check(self, problem: FrechetProblem, m: int) -> None:
        if m < 1:
            raise ValueError("candidate length m must be >= 1")
        if m > self.max_m:
            raise CapExceededError(f"candidate length {m} exceeds max_m={self.max_m}")
        if max(problem.lengths) > self.max_n:
            raise CapExceededError(f"sample length {max(problem.lengths)} exceeds max_n={self.max_n}")
        if problem.size > self.max_N:
            raise CapExceededError(f"sample size {problem.size} exceeds max_N={self.max_N}")


DEFAULT_CAPS = SolverCaps()


@dataclass(frozen=True)
class MeanResult:
    minimizer: tuple
    value: float
    m: int
    method: str
    configurations: int
    #: warping paths of the optimal configuration (path-combination only)
    configuration: Optional[tuple] = None
    #: best value per swept length (length-sweep only)
    per_length: Optional[tuple] = None

    def to_json(self) -> dict:
        doc = {"minimizer": _jsonable(self.minimizer), "value": self.value, "m": self.m,
               "method": self.method, "configs": self.configurations}
        if self.per_length is not None:
            doc["per_length"] = list(self.per_length)
        return doc


def _jsonable(x):
    return [list(a) if isinstance(a, tuple) else a for a in x]


def _effective_linear(problem: FrechetProblem) -> bool:
    """True if every ``h_k(f(c))`` equals ``w_k * c``."""
    e = problem.space.transform.exponent
    return all(math.isclose(h.p * e, 1.0) for h in problem.losses)


def _configuration_count(problem: FrechetProblem, m: int) -> int:
    return math.prod(delannoy(m, n) for n in problem.lengths)


def _check_configurations(problem: FrechetProblem, m: int, caps: SolverCaps, per_config: int = 1) -> int:
    total = _configuration_count(problem, m)
    if total * per_config > caps.max_configurations:
        raise CapExceededError(
            f"{total} path combinations for m={m} exceed max_configurations={caps.max_configurations}")
    return total


def _better(value: float, key: tuple, best) -> bool:
    if best is None:
        return True
    if value < best[0] - EPS:
        return True
    return value <= best[0] + EPS and key < best[1]


def _lex_key(z: np.ndarray) -> tuple:
    return tuple(np.round(np.asarray(z, dtype=float).reshape(-1), 12))


def restricted_mean_alphabet(problem: FrechetProblem, m: int,
                             caps: SolverCaps = DEFAULT_CAPS) -> MeanResult:
    """Exhaustive minimum over all ``|A|**m`` candidates; ties go to the first in symbol order."""
    attrs = problem.space.attributes
    if attrs.kind != SYMBOL:
        raise UnsupportedProblemError("alphabet enumeration needs a finite symbolic attribute space")
    caps.check(problem, m)
    count = len(attrs.alphabet) ** m
    if count > caps.alphabet_max_candidates:
        raise CapExceededError(f"{count} candidates exceed alphabet_max_candidates={caps.alphabet_max_candidates}")
    best, examined = None, 0
    for z in itertools.product(attrs.alphabet, repeat=m):
        examined += 1
        v = frechet_value(problem, z)
        if best is None or v < best[0] - EPS:
            best = (v, z)
    return MeanResult(best[1], best[0], m, ALPHABET_ENUMERATION, examined)


def _path_tables(problem: FrechetProblem, k: int, m: int, caps: SolverCaps):
    """Per-path aligned sums, counts and squared norms for sample series ``k``."""
    space = problem.space
    y = space.attributes.as_array(problem.sample[k])
    sq = (y ** 2).sum(axis=1)
    paths = enumerate_warping_paths(m, len(y), cap=caps.path_cap)
    sums = np.zeros((len(paths), m, y.shape[1]))
    counts = np.zeros((len(paths), m))
    norms = np.zeros(len(paths))
    for a, p in enumerate(paths):
        for i, j in p.points:
            sums[a, i - 1] += y[j - 1]
            counts[a, i - 1] += 1
            norms[a] += sq[j - 1]
    return paths, sums, counts, norms


def restricted_mean_euclidean(problem: FrechetProblem, m: int,
                              caps: SolverCaps = DEFAULT_CAPS) -> MeanResult:
    """Exact restricted mean by minimizing one quadratic per path combination."""
    space = problem.space
    if not space.attributes.is_numeric or space.local.kind != SQEUCLIDEAN:
        raise UnsupportedProblemError("path-combination solver needs real/vector attributes "
                                      "with the squared Euclidean local distance")
    if not _effective_linear(problem):
        raise UnsupportedProblemError(
            "path-combination solver needs h_k(dtw) proportional to the alignment cost "
            "(p = 2 with the sqrt transform, or p = 1 with the identity); "
            "use the coordinate-grid fallback for other losses")
    caps.check(problem, m)
    total = _check_configurations(problem, m, caps)
    N = problem.size
    dim = space.attributes.width
    tables = [_path_tables(problem, k, m, caps) for k in range(N)]

    # accumulate over the Cartesian product of path sets, one series at a time
    idx = np.zeros((1, 0), dtype=np.int64)
    sw = np.zeros((1, m, dim))
    cw = np.zeros((1, m))
    su = np.zeros((1, m, dim))
    cu = np.zeros((1, m))
    qw = np.zeros(1)
    for k, (paths, sums, counts, norms) in enumerate(tables):
        a = problem.losses[k].w / N
        P = len(paths)
        T = len(idx)
        idx = np.concatenate([np.repeat(idx, P, axis=0), np.tile(np.arange(P), T)[:, None]], axis=1)
        sw = (sw[:, None] + a * sums[None]).reshape(T * P, m, dim)
        su = (su[:, None] + sums[None]).reshape(T * P, m, dim)
        cw = (cw[:, None] + a * counts[None]).reshape(T * P, m)
        cu = (cu[:, None] + counts[None]).reshape(T * P, m)
        qw = (qw[:, None] + a * norms[None]).reshape(T * P)
    assert len(idx) == total
    # boundary and step conditions align every candidate position at least once
    assert (cu > 0).all(), "candidate position not covered by any warping path"

    weighted = cw > 0
    safe = np.where(weighted, cw, 1.0)
    x = np.where(weighted[..., None], sw / safe[..., None], su / cu[..., None])
    values = qw - np.where(weighted, (sw ** 2).sum(axis=2) / safe, 0.0).sum(axis=1)

    lowest = values.min()
    near = np.flatnonzero(values <= lowest + EPS)
    pick = min(near, key=lambda c: (_lex_key(x[c]), values[c]))
    z = space.attributes.from_array(x[pick])
    value = frechet_value(problem, z)
    if not math.isclose(value, values[pick], rel_tol=1e-8, abs_tol=1e-9):
        raise AssertionError(f"closed-form value {values[pick]} disagrees with F(minimizer) = {value}")
    config = tuple(tables[k][0][idx[pick, k]] for k in range(N))
    return MeanResult(z, value, m, PATH_COMBINATION, total, configuration=config)


def separable_grid_minimum(problem: FrechetProblem, m: int, grid: Sequence[float],
                           caps: SolverCaps = DEFAULT_CAPS) -> tuple[float, tuple]:
    """Exact minimum of ``F`` over candidates of length ``m`` with coordinates in ``grid``.

    Needs real attributes and losses with ``h_k(dtw) = w_k * cost``. Then
    ``F`` restricted to one path combination is a sum of per-position terms,
    so each coordinate is minimized over the grid independently.
    """
    space = problem.space
    if space.attributes.kind != REAL:
        raise UnsupportedProblemError("separable grid minimum needs real attributes")
    if not _effective_linear(problem):
        raise UnsupportedProblemError("separable grid minimum needs h_k(dtw) proportional to the cost")
    caps.check(problem, m)
    grid = np.sort(np.asarray(grid, dtype=float))
    _check_configurations(problem, m, caps)
    N = problem.size
    per_series = []
    for y, h in zip(problem.sample, problem.losses):
        local = np.array([[space.local(float(t), yj) for t in grid] for yj in y]) * (h.w / N)
        paths = enumerate_warping_paths(m, len(y), cap=caps.path_cap)
        tabs = np.zeros((len(paths), m, len(grid)))
        for a, p in enumerate(paths):
            for i, j in p.points:
                tabs[a, i - 1] += local[j - 1]
        per_series.append(tabs)
    best = None
    for combo in itertools.product(*(range(len(t)) for t in per_series)):
        phi = sum(t[c] for t, c in zip(per_series, combo))
        arg = phi.argmin(axis=1)
        value = float(phi[np.arange(m), arg].sum())
        z = tuple(float(grid[g]) for g in arg)
        if _better(value, z, best):
            best = (value, z)
    value = frechet_value(problem, best[1])
    if not math.isclose(value, best[0], rel_tol=1e-8, abs_tol=1e-9):
        raise AssertionError(f"grid value {best[0]} disagrees with F(minimizer) = {value}")
    return value, best[1]


def restricted_mean_grid(problem: FrechetProblem, m: int, grid: Sequence[float],
                         caps: SolverCaps = DEFAULT_CAPS) -> MeanResult:
    """Approximate restricted mean: best candidate with coordinates on ``grid``.

    This is a grid search, not a mean certificate.
    """
    space = problem.space
    grid = np.sort(np.asarray(grid, dtype=float))
    if space.attributes.kind == REAL and _effective_linear(problem):
        value, z = separable_grid_minimum(problem, m, grid, caps)
        return MeanResult(z, value, m, COORDINATE_GRID, _configuration_count(problem, m))
    if not space.attributes.is_numeric:
        raise UnsupportedProblemError("coordinate grids need numeric attributes")
    caps.check(problem, m)
    coords = m * space.attributes.width
    count = len(grid) ** coords
    if count > caps.max_configurations:
        raise CapExceededError(f"{count} grid candidates exceed max_configurations={caps.max_configurations}")
    best = None
    for flat in itertools.product(grid.tolist(), repeat=coords):
        z = space.attributes.from_array(np.array(flat))
        v = frechet_value(problem, z)
        if best is None or v < best[0] - EPS:
            best = (v, z)
    return MeanResult(best[1], best[0], m, COORDINATE_GRID, count)


def restricted_mean(problem: FrechetProblem, m: int, caps: Optional[SolverCaps] = None,
                    grid: Optional[Sequence[float]] = None) -> MeanResult:
    """Restricted mean of length ``m`` by the exact method that applies.

    Passing ``grid`` enables the approximate coordinate-grid fallback for
    problems no exact method covers.
    """
    caps = caps or DEFAULT_CAPS
    space = problem.space
    if space.attributes.kind == SYMBOL:
        return restricted_mean_alphabet(problem, m, caps)
    if space.local.kind == SQEUCLIDEAN and _effective_linear(problem):
        return restricted_mean_euclidean(problem, m, caps)
    if grid is not None:
        return restricted_mean_grid(problem, m, grid, caps)
    raise UnsupportedProblemError(
        "no exact solver for this space/loss combination; pass a coordinate grid for the "
        "approximate fallback")


def unrestricted_mean(problem: FrechetProblem, caps: Optional[SolverCaps] = None,
                      grid: Optional[Sequence[float]] = None, extra: int = 0) -> MeanResult:
    """Sample mean by sweeping ``m = 1..rho (+ extra)``; ties go to the shortest.

    No candidate longer than the reduction bound improves on the result.
    """
    caps = caps or DEFAULT_CAPS
    rho = problem.reduction_bound.rho
    if rho + extra > caps.max_m:
        raise CapExceededError(f"reduction bound {rho} (+{extra}) exceeds max_m={caps.max_m}")
    best, configs, per_length = None, 0, []
    for m in range(1, rho + extra + 1):
        res = restricted_mean(problem, m, caps, grid)
        configs += res.configurations
        per_length.append(res.value)
        if best is None or res.value < best.value - EPS:
            best = res
    method = best.method if best.method == COORDINATE_GRID else LENGTH_SWEEP
    return MeanResult(best.minimizer, best.value, best.m, method, configs,
                      configuration=best.configuration, per_length=tuple(per_length))
