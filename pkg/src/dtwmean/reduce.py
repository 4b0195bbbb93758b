"""Shortening candidates by removing redundant elements.

A candidate ``x`` is aligned to every sample series along the canonical
optimal warping path. The compactified alignments are glued along ``x``;
an element that is redundant in every alignment can be dropped without
increasing ``F``. Such an element always exists when ``len(x)`` exceeds
the reduction bound of the sample.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import EPS
from .dtw import dtw_distance
from .exceptions import ReductionError
from .frechet import FrechetProblem, frechet_value
from .glue import GluedGraph, find_redundant_splice_node, glue
from .wgraph import compactify, path_to_graph


@dataclass(frozen=True)
class ReductionStep:
    """One accepted removal; ``removed`` is the 1-based position in the input candidate."""

    removed: int
    f_before: float
    f_after: float
    glued: GluedGraph
    paths: tuple

    def to_json(self) -> dict:
        return {"removed": self.removed, "f_before": self.f_before, "f_after": self.f_after,
                "glued": self.glued.to_json(), "paths": [p.to_json() for p in self.paths]}


def alignment_glued_graph(problem: FrechetProblem, x: Sequence) -> tuple[GluedGraph, tuple]:
    """Glued graph of the compactified optimal alignments of ``x`` to the sample."""
    x = problem.space.series(x)
    paths = tuple(dtw_distance(problem.space, x, y).path for y in problem.sample)
    return glue([compactify(path_to_graph(p)) for p in paths]), paths


def reduce_once(problem: FrechetProblem, x: Sequence, eps: float = EPS,
                f_before: Optional[float] = None) -> Optional[tuple[tuple, ReductionStep]]:
    """Drop one redundant element of ``x``, or return None if there is none."""
    x = problem.space.series(x)
    glued, paths = alignment_glued_graph(problem, x)
    i = find_redundant_splice_node(glued)
    if i is None:
        return None
    shorter = x[:i - 1] + x[i:]
    before = frechet_value(problem, x) if f_before is None else f_before
    after = frechet_value(problem, shorter)
    if after > before + eps:
        dump = json.dumps({"candidate": list(x), "removed": i, "glued": glued.to_json()}, default=str)
        raise ReductionError(f"removing element {i} raised F from {before} to {after}: {dump}")
    return shorter, ReductionStep(i, before, after, glued, paths)


def reduce_to_bound(problem: FrechetProblem, x: Sequence, eps: float = EPS,
                    stop_at_bound: bool = False) -> tuple[tuple, list[ReductionStep]]:
    """Repeatedly remove redundant elements.

    By default removal continues below the reduction bound for as long as
    redundant elements exist; with ``stop_at_bound`` it stops as soon as
    ``len(x) <= rho``.
    """
    x = problem.space.series(x)
    rho = problem.reduction_bound.rho
    steps: list[ReductionStep] = []
    f = frechet_value(problem, x)
    while not (stop_at_bound and len(x) <= rho):
        res = reduce_once(problem, x, eps, f_before=f)
        if res is None:
            break
        x, step = res
        f = step.f_after
        steps.append(step)
    if len(x) > rho:
        raise ReductionError(f"no redundant element found at length {len(x)} > rho = {rho}")
    return x, steps
