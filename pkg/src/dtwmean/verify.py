"""Invariant suite behind ``dtwmean verify``.

Every check sweeps small instances in increasing size (plus seeded random
instances) and stops at the first violation, which is returned as a
JSON-serializable counterexample.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import EPS, LossFunction, euclidean_space, symbolic_space
from .dtw import delannoy, dtw_distance, dtw_distance_bruteforce, enumerate_warping_paths, path_violations
from .frechet import FrechetProblem, frechet_value
from .glue import find_redundant_splice_node, glue, remove_splice_node
from .reduce import reduce_once
from .solver import unrestricted_mean
from .wgraph import (V, W, compact_warping_graphs, compactify, components, delete_node,
                     graph_violations, is_compact, path_to_graph, redundant_nodes)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        doc = {"check": self.name, "cases": self.cases, "ok": self.ok}
        if not self.ok:
            doc["counterexample"] = self.counterexample
        return doc


@dataclass
class VerifyConfig:
    seed: int = 0
    dtw_pairs: int = 500
    euclidean_problems: int = 1000
    graph_max: int = 5
    rng: np.random.Generator = field(init=False)

    def __post_init__(self):
        self.rng = np.random.default_rng(self.seed)


def check_dtw_oracle(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("dtw-matches-bruteforce")
    space = euclidean_space()
    for _ in range(cfg.dtw_pairs):
        m, n = cfg.rng.integers(1, 6, size=2)
        x = tuple(np.round(cfg.rng.normal(size=m), 3).tolist())
        y = tuple(np.round(cfg.rng.normal(size=n), 3).tolist())
        res.cases += 1
        fast, slow = dtw_distance(space, x, y), dtw_distance_bruteforce(space, x, y)
        back = dtw_distance(space, y, x)
        problems = []
        if abs(fast.distance - slow.distance) > 1e-12:
            problems.append("distance differs from brute force")
        if abs(fast.distance - back.distance) > EPS:
            problems.append("asymmetric")
        if path_violations(fast.path.points, m, n):
            problems.append("invalid optimal path")
        if fast.distance != space.transform(fast.raw_cost):
            problems.append("distance != f(raw_cost)")
        if problems:
            res.counterexample = {"x": list(x), "y": list(y), "dp": fast.distance,
                                  "bruteforce": slow.distance, "problems": problems}
            return res
    return res


def check_path_counts(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("path-enumeration-counts")
    for m in range(1, 7):
        for n in range(1, 7):
            res.cases += 1
            paths = enumerate_warping_paths(m, n)
            if len(paths) != delannoy(m, n) or len({p.points for p in paths}) != len(paths):
                res.counterexample = {"m": m, "n": n, "enumerated": len(paths), "delannoy": delannoy(m, n)}
                return res
    return res


def _deletable_edges(g) -> list:
    """Edges whose removal leaves a warping graph of the same size (definition-level oracle)."""
    return [e for k, e in enumerate(g.edges)
            if not graph_violations(g.m, g.n, g.edges[:k] + g.edges[k + 1:])]


def graph_lemma_problems(g) -> list[str]:
    """Violated warping-graph lemmas for warping graph ``g``."""
    problems = list(graph_violations(g.m, g.n, g.edges))
    h = compactify(g)
    if not is_compact(h) or compactify(h) != h or set(h.edges) - set(g.edges):
        problems.append("compactify not compact/idempotent/subgraph")
    if _deletable_edges(h):
        problems.append("compactified graph has a deletable edge")
    if is_compact(g) != (not _deletable_edges(g)):
        problems.append("is_compact disagrees with deletion oracle")
    for part, size, other in ((V, g.m, W), (W, g.n, V)):
        for i in range(1, size + 1):
            nb = g.neighbors((part, i))
            if nb != list(range(nb[0], nb[-1] + 1)):
                problems.append(f"neighborhood of {part}{i} not contiguous")
            if any(g.degree((other, j)) != 1 for j in nb[1:-1]):
                problems.append(f"inner neighbor of {part}{i} has degree > 1")
    comps = components(h)
    covered = sorted(u for c in comps for u in c.nodes)
    if covered != sorted([(V, i) for i in range(1, h.m + 1)] + [(W, j) for j in range(1, h.n + 1)]):
        problems.append("components do not partition the nodes")
    if sum(c.r for c in comps) != len(h.edges):
        problems.append("components do not partition the edges")
    if h.m > h.n:
        singles = sum(1 for c in comps if c.shape == (1, 1))
        if singles > h.n - 1 or not any(c.shape[0] > 1 and c.shape[1] == 1 for c in comps):
            problems.append("K11/Kr1 census violated")
    for part in (V, W):
        for i in redundant_nodes(h, part):
            try:
                d = delete_node(h, i, part)
            except Exception as exc:  # noqa: BLE001 - reported as a violation
                problems.append(f"delete_node({part}{i}) failed: {exc}")
                continue
            if not is_compact(d):
                problems.append(f"delete_node({part}{i}) not compact")
    return problems


def check_graph_lemmas(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("warping-graph-lemmas")
    for m in range(1, cfg.graph_max + 1):
        for n in range(1, cfg.graph_max + 1):
            for p in enumerate_warping_paths(m, n):
                res.cases += 1
                problems = graph_lemma_problems(path_to_graph(p))
                if problems:
                    res.counterexample = {"path": p.to_json(), "problems": problems}
                    return res
    return res


def check_glued_theorem(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("glued-graph-redundant-node")
    for m in range(1, 8):
        pools = {n: compact_warping_graphs(m, n) for n in range(1, 4)}
        for N in (1, 2):
            for ns in itertools.product(range(1, 4), repeat=N):
                for particles in itertools.product(*(pools[n] for n in ns)):
                    g = glue(particles)
                    rho = g.reduction_bound.rho
                    i = find_redundant_splice_node(g)
                    res.cases += 1
                    bad = None
                    if m > rho and i is None:
                        bad = "no redundant splice node although m > rho"
                    elif i is not None:
                        r = remove_splice_node(g, i)
                        if r.splice_size != m - 1 or not all(map(is_compact, r.particles)):
                            bad = "removal broke the glued graph"
                        elif r.reduction_bound.rho != rho:
                            bad = "removal changed rho"
                    if bad:
                        res.counterexample = {"glued": g.to_json(), "rho": rho, "problem": bad}
                        return res
    return res


def _reduction_case(problem: FrechetProblem, x) -> Optional[str]:
    f = frechet_value(problem, x)
    out = reduce_once(problem, x, f_before=f)
    if out is None:
        return "no reduction although len(x) > rho"
    shorter, step = out
    if len(shorter) != len(x) - 1:
        return "reduction did not shorten by one"
    if step.f_after > f + EPS:
        return "F increased"
    return None


def check_reduction_alphabet(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("reduction-theorem-alphabet")
    space = symbolic_space((0, 1))
    words = [w for n in range(1, 4) for w in itertools.product((0, 1), repeat=n)]
    candidates = [w for n in range(1, 8) for w in itertools.product((0, 1), repeat=n)]
    loss = LossFunction(1.0, 1.0)
    for a, b in itertools.product(words, repeat=2):
        problem = FrechetProblem((a, b), space, (loss, loss))
        rho = problem.reduction_bound.rho
        for x in candidates:
            if len(x) <= rho:
                continue
            res.cases += 1
            bad = _reduction_case(problem, x)
            if bad:
                res.counterexample = {"sample": [list(a), list(b)], "candidate": list(x), "problem": bad}
                return res
    return res


def random_euclidean_problem(rng: np.random.Generator) -> FrechetProblem:
    N = int(rng.integers(1, 4))
    sample = [tuple(np.round(rng.normal(size=int(rng.integers(1, 5))), 2).tolist()) for _ in range(N)]
    losses = [LossFunction(float(np.round(rng.uniform(0, 2), 3)), float(rng.choice([1.0, 2.0, 3.0])))
              for _ in range(N)]
    return FrechetProblem(tuple(sample), euclidean_space(), tuple(losses))


def check_reduction_euclidean(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("reduction-theorem-euclidean")
    for _ in range(cfg.euclidean_problems):
        problem = random_euclidean_problem(cfg.rng)
        rho = problem.reduction_bound.rho
        length = rho + int(cfg.rng.integers(1, 4))
        x = tuple(np.round(cfg.rng.normal(size=length), 2).tolist())
        res.cases += 1
        bad = _reduction_case(problem, x)
        if bad:
            res.counterexample = {"sample": [list(s) for s in problem.sample],
                                  "losses": [[h.w, h.p] for h in problem.losses],
                                  "candidate": list(x), "problem": bad}
            return res
    return res


def certificate_fixtures() -> list[FrechetProblem]:
    sq = LossFunction(1.0, 2.0)
    euclid = euclidean_space()
    binary = symbolic_space((0, 1))
    abc = symbolic_space(("a", "b", "c"))
    return [
        FrechetProblem.uniform([(0, 1, 0), (0, -1, 0)], euclid, sq),
        FrechetProblem.uniform([(1, 2, 3)], euclid, sq),
        FrechetProblem.uniform([(0, 2), (1, 0)], euclid, sq),
        FrechetProblem((((0, 0, 1)), (1, 1)), euclid, (LossFunction(1.0, 2.0), LossFunction(0.5, 2.0))),
        FrechetProblem.uniform([(0, 1, 1), (1, 0)], binary, LossFunction(1.0, 1.0)),
        FrechetProblem.uniform([(0, 1), (1, 0)], binary, LossFunction(1.0, 2.0)),
        FrechetProblem.uniform([("a", "b"), ("c", "a"), ("b",)], abc, LossFunction(1.0, 1.0)),
    ]


def check_mean_certificate(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("unrestricted-mean-certificate")
    for problem in certificate_fixtures():
        res.cases += 1
        base = unrestricted_mean(problem)
        longer = unrestricted_mean(problem, extra=2)
        if min(longer.per_length) < base.value - EPS:
            res.counterexample = {"sample": [list(s) for s in problem.sample],
                                  "per_length": list(longer.per_length), "value": base.value}
            return res
    return res


CHECKS: list[Callable[[VerifyConfig], CheckResult]] = [
    check_path_counts,
    check_dtw_oracle,
    check_graph_lemmas,
    check_glued_theorem,
    check_reduction_alphabet,
    check_reduction_euclidean,
    check_mean_certificate,
]


def run_verification(seed: int = 0, **overrides) -> list[CheckResult]:
    cfg = VerifyConfig(seed=seed, **overrides)
    return [check(cfg) for check in CHECKS]
