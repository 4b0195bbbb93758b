"""Glued graphs: compact warping graphs sharing their ``V`` partition (the splice)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import InvalidGraphError
from .wgraph import WarpingGraph, delete_node, is_compact, redundant_nodes


@dataclass(frozen=True)
class ReductionBoundReport:
    """Reduction bound ``rho`` with its core index set.

    ``core`` holds 0-based indices of the non-trivial particles (sample
    series of length >= 2). ``simple_rho`` is ``sum(n) - 2 (N - 1)`` over
    all series, which coincides with ``rho`` whenever no series is trivial.
    """

    rho: int
    core: tuple
    trivial_count: int
    simple_rho: int

    @property
    def agrees_with_simple(self) -> bool:
        return self.rho == self.simple_rho

    def to_json(self) -> dict:
        return {"rho": self.rho, "core": list(self.core), "trivial_count": self.trivial_count,
                "simple_rho": self.simple_rho, "agrees_with_simple": self.agrees_with_simple}


def reduction_bound_sample(lengths: Sequence[int]) -> ReductionBoundReport:
    lengths = [int(n) for n in lengths]
    if not lengths:
        raise ValueError("reduction bound of an empty sample is undefined")
    if any(n < 1 for n in lengths):
        raise ValueError("series lengths must be positive")
    core = tuple(k for k, n in enumerate(lengths) if n >= 2)
    if core:
        rho = sum(lengths[k] for k in core) - 2 * (len(core) - 1)
    else:
        rho = 1
    simple = sum(lengths) - 2 * (len(lengths) - 1)
    return ReductionBoundReport(rho, core, len(lengths) - len(core), simple)


@dataclass(frozen=True)
class GluedGraph:
    splice_size: int
    particles: tuple

    def __post_init__(self):
        parts = tuple(self.particles)
        object.__setattr__(self, "particles", parts)
        if not parts:
            raise InvalidGraphError("a glued graph needs at least one particle")
        for k, g in enumerate(parts):
            if not isinstance(g, WarpingGraph):
                raise InvalidGraphError(f"particle {k} is not a WarpingGraph")
            if g.m != self.splice_size:
                raise InvalidGraphError(
                    f"particle {k} has splice size {g.m}, expected {self.splice_size}")
            if not is_compact(g):
                raise InvalidGraphError(f"particle {k} is not compact")

    @property
    def sizes(self) -> tuple:
        return tuple(g.n for g in self.particles)

    @property
    def reduction_bound(self) -> ReductionBoundReport:
        return reduction_bound_sample(self.sizes)

    def to_json(self) -> dict:
        return {"splice_size": self.splice_size, "particles": [g.to_json() for g in self.particles]}

    @classmethod
    def from_json(cls, doc) -> GluedGraph:
        return cls(int(doc["splice_size"]), tuple(WarpingGraph.from_json(g) for g in doc["particles"]))


def glue(particles: Sequence[WarpingGraph]) -> GluedGraph:
    particles = tuple(particles)
    if not particles:
        raise InvalidGraphError("a glued graph needs at least one particle")
    sizes = {g.m for g in particles}
    if len(sizes) != 1:
        raise InvalidGraphError(f"particles disagree on splice size: {sorted(sizes)}")
    return GluedGraph(particles[0].m, particles)


def redundant_splice_nodes(g: GluedGraph) -> list[int]:
    """Splice nodes redundant in every particle, ascending."""
    common = set(range(1, g.splice_size + 1))
    for p in g.particles:
        common &= set(redundant_nodes(p))
        if not common:
            break
    return sorted(common)


def find_redundant_splice_node(g: GluedGraph) -> Optional[int]:
    """Smallest splice node redundant in every particle, or None.

    Never None when ``g.splice_size > g.reduction_bound.rho``.
    """
    nodes = redundant_splice_nodes(g)
    return nodes[0] if nodes else None


def remove_splice_node(g: GluedGraph, i: int) -> GluedGraph:
    if i not in redundant_splice_nodes(g):
        raise InvalidGraphError(f"splice node {i} is not redundant in every particle")
    return GluedGraph(g.splice_size - 1, tuple(delete_node(p, i) for p in g.particles))
