"""Warping graphs: bipartite chain graphs whose edges form a warping chain.

Partition ``V`` has nodes ``1..m`` (the candidate series), partition ``W``
has nodes ``1..n`` (a sample series). Edges are ``(i, j)`` pairs with
``i`` in ``V`` and ``j`` in ``W``, stored in chain order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .dtw import WarpingPath, dtw_distance, enumerate_warping_paths
from .exceptions import InvalidGraphError

V = "V"
W = "W"


class Node(NamedTuple):
    part: str
    index: int


def successors(e: tuple[int, int], m: int, n: int) -> set[tuple[int, int]]:
    """Successor map ``S(i, j)`` on ``[1..m] x [1..n]``."""
    i, j = e
    cand = ((i + 1, j), (i, j + 1), (i + 1, j + 1))
    return {(r, s) for r, s in cand if r <= m and s <= n}


def graph_violations(m: int, n: int, edges: Sequence[tuple[int, int]]) -> list[str]:
    """Every warping-graph condition violated by ``edges``.

    Checks the boundary and step conditions, absence of isolated nodes and
    the order-preserving property. The last two follow from the first two
    but are checked independently here.
    """
    if m < 1 or n < 1:
        return ["partition sizes must be positive"]
    edges = [tuple(e) for e in edges]
    if not edges:
        return ["empty edge set"]
    problems = []
    if any(not (1 <= i <= m and 1 <= j <= n) for i, j in edges):
        problems.append("edge outside the node partitions")
        return problems
    if edges[0] != (1, 1) or edges[-1] != (m, n):
        problems.append("boundary condition")
    if any(b not in successors(a, m, n) for a, b in zip(edges, edges[1:])):
        problems.append("step condition")
    if {i for i, _ in edges} != set(range(1, m + 1)) or {j for _, j in edges} != set(range(1, n + 1)):
        problems.append("isolated node")
    for a in range(len(edges)):
        i, j = edges[a]
        for r, s in edges[a + 1:]:
            if not ((i <= r and j <= s) or (r <= i and s <= j)):
                problems.append("order preservation")
                return problems
    return problems


def is_warping_graph(m: int, n: int, edges: Sequence[tuple[int, int]]) -> bool:
    return not graph_violations(m, n, edges)


@dataclass(frozen=True)
class WarpingGraph:
    m: int
    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(i), int(j)) for i, j in self.edges)
        object.__setattr__(self, "edges", edges)
        problems = graph_violations(self.m, self.n, edges)
        if problems:
            raise InvalidGraphError(f"not a warping graph of size {self.m}x{self.n}: {', '.join(problems)}")

    @cached_property
    def _adjacency(self) -> dict:
        adj = {Node(V, i): [] for i in range(1, self.m + 1)}
        adj.update({Node(W, j): [] for j in range(1, self.n + 1)})
        for i, j in self.edges:
            adj[Node(V, i)].append(j)
            adj[Node(W, j)].append(i)
        return {k: sorted(v) for k, v in adj.items()}

    def neighbors(self, node) -> list[int]:
        node = _node(node)
        try:
            return list(self._adjacency[node])
        except KeyError:
            raise InvalidGraphError(f"node {tuple(node)} not in graph of size {self.m}x{self.n}") from None

    def degree(self, node) -> int:
        return len(self.neighbors(node))

    def transpose(self) -> WarpingGraph:
        return WarpingGraph(self.n, self.m, tuple((j, i) for i, j in self.edges))

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc) -> WarpingGraph:
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(int(doc["m"]), int(doc["n"]), tuple(tuple(e) for e in doc["edges"]))


def _node(node) -> Node:
    part, index = node
    if part not in (V, W):
        raise InvalidGraphError(f"unknown partition {part!r}")
    return Node(part, int(index))


def path_to_graph(p: WarpingPath) -> WarpingGraph:
    return WarpingGraph(p.m, p.n, p.points)


def graph_to_path(g: WarpingGraph) -> WarpingPath:
    return WarpingPath(g.edges, g.m, g.n)


def dtw_graph(space, x, y) -> WarpingGraph:
    """Warping graph of the canonical optimal warping path between ``x`` and ``y``."""
    return path_to_graph(dtw_distance(space, x, y).path)


def is_compact(g: WarpingGraph) -> bool:
    """True iff no edge can be removed while keeping a warping graph."""
    e = g.edges
    return all(e[k + 2] not in successors(e[k], g.m, g.n) for k in range(len(e) - 2))


def compactify(g: WarpingGraph) -> WarpingGraph:
    """Compact warping subgraph obtained by dropping every removable edge."""
    kept: list = []
    for e in g.edges:
        while len(kept) >= 2 and e in successors(kept[-2], g.m, g.n):
            kept.pop()
        kept.append(e)
    return WarpingGraph(g.m, g.n, tuple(kept))


def _require_compact(g: WarpingGraph) -> None:
    if not is_compact(g):
        raise InvalidGraphError("operation requires a compact warping graph")


@dataclass(frozen=True)
class StarComponent:
    """Star component of a compact warping graph.

    ``form`` is ``"K_{1,r}"`` when the center lies in ``V`` and
    ``"K_{r,1}"`` when it lies in ``W``. A single edge is reported as
    ``K_{1,r}`` with ``r = 1`` and its ``V`` node as center.
    """

    center: Node
    leaves: tuple
    form: str

    @property
    def r(self) -> int:
        return len(self.leaves)

    @property
    def shape(self) -> tuple[int, int]:
        """Number of nodes in (V, W)."""
        return (1, self.r) if self.center.part == V else (self.r, 1)

    @property
    def nodes(self) -> tuple:
        return (self.center,) + self.leaves


def components(g: WarpingGraph) -> list[StarComponent]:
    """Connected components of a compact warping graph, ordered by first V node."""
    _require_compact(g)
    seen: set = set()
    out = []
    for start in [Node(V, i) for i in range(1, g.m + 1)]:
        if start in seen:
            continue
        comp, frontier = {start}, [start]
        while frontier:
            u = frontier.pop()
            other = W if u.part == V else V
            for k in g.neighbors(u):
                v = Node(other, k)
                if v not in comp:
                    comp.add(v)
                    frontier.append(v)
        seen |= comp
        vs = sorted(u for u in comp if u.part == V)
        ws = sorted(u for u in comp if u.part == W)
        if len(vs) == 1:
            out.append(StarComponent(vs[0], tuple(ws), "K_{1,r}"))
        elif len(ws) == 1:
            out.append(StarComponent(ws[0], tuple(vs), "K_{r,1}"))
        else:
            raise InvalidGraphError(f"component {sorted(comp)} is not a star")
    return out


def neighborhood(g: WarpingGraph, node) -> list[int]:
    """Neighbors of ``node`` (indices into the opposite partition), ascending."""
    return g.neighbors(node)


def redundant_nodes(g: WarpingGraph, partition: str = V) -> list[int]:
    """Nodes of ``partition`` all of whose neighbors have degree >= 2."""
    _require_compact(g)
    size = g.m if partition == V else g.n
    other = W if partition == V else V
    return [i for i in range(1, size + 1)
            if all(g.degree((other, j)) >= 2 for j in g.neighbors((partition, i)))]


def delete_node(g: WarpingGraph, i: int, partition: str = V) -> WarpingGraph:
    """Remove redundant node ``i`` and its edges; later nodes shift down by one."""
    if partition == W:
        return delete_node(g.transpose(), i, V).transpose()
    if i not in redundant_nodes(g, V):
        raise InvalidGraphError(f"node {i} is not redundant; removing it may break the warping conditions")
    edges = tuple((r - (r > i), s) for r, s in g.edges if r != i)
    out = WarpingGraph(g.m - 1, g.n, edges)
    if not is_compact(out):
        raise InvalidGraphError("deleting a redundant node produced a non-compact graph")
    return out


def compact_warping_graphs(m: int, n: int, cap: int = 8) -> list[WarpingGraph]:
    """Every compact warping graph of size ``m x n``."""
    return [g for g in map(path_to_graph, enumerate_warping_paths(m, n, cap=cap)) if is_compact(g)]
