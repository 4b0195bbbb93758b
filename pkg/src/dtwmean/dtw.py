"""Warping paths and the DTW distance.

Path points are 1-based ``(i, j)`` pairs: point ``(i, j)`` aligns ``x[i-1]``
with ``y[j-1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import DtwSpace
from .exceptions import CapExceededError, InvalidPathError

#: Default bound on both orders for exhaustive path enumeration.
ENUMERATION_CAP = 8

STEPS = ((1, 0), (0, 1), (1, 1))


def path_violations(points: Sequence[tuple[int, int]], m: int, n: int) -> list[str]:
    """Names of the warping-path conditions violated by ``points``."""
    problems = []
    if m < 1 or n < 1:
        return ["order must be positive"]
    if not points:
        return ["empty path"]
    for i, j in points:
        if not (1 <= i <= m and 1 <= j <= n):
            problems.append(f"point {(i, j)} outside [1..{m}] x [1..{n}]")
            break
    if tuple(points[0]) != (1, 1) or tuple(points[-1]) != (m, n):
        problems.append(f"boundary condition: path must run from (1, 1) to {(m, n)}")
    for (i, j), (r, s) in zip(points, points[1:]):
        if (r - i, s - j) not in STEPS:
            problems.append(f"step condition: {(i, j)} -> {(r, s)}")
            break
    return problems


def validate_path(points: Sequence[tuple[int, int]], m: int, n: int) -> None:
    problems = path_violations(points, m, n)
    if problems:
        raise InvalidPathError("; ".join(problems))


@dataclass(frozen=True)
class WarpingPath:
    """Warping path of order ``m x n``; validated on construction."""

    points: tuple
    m: int
    n: int

    def __post_init__(self):
        pts = tuple((int(i), int(j)) for i, j in self.points)
        validate_path(pts, self.m, self.n)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Iterable[tuple[int, int]]) -> WarpingPath:
        pts = tuple(tuple(p) for p in points)
        if not pts:
            raise InvalidPathError("empty path")
        return cls(pts, pts[-1][0], pts[-1][1])

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_json(self) -> list:
        return [list(p) for p in self.points]


@dataclass(frozen=True)
class DtwResult:
    distance: float
    path: WarpingPath
    raw_cost: float


@lru_cache(maxsize=None)
def delannoy(m: int, n: int) -> int:
    """Number of warping paths of order ``m x n``."""
    if m < 1 or n < 1:
        return 0
    if m == 1 or n == 1:
        return 1
    return delannoy(m - 1, n) + delannoy(m, n - 1) + delannoy(m - 1, n - 1)


def enumerate_warping_paths(m: int, n: int, cap: int = ENUMERATION_CAP) -> list[WarpingPath]:
    """All warping paths of order ``m x n`` in a fixed depth-first order."""
    if m < 1 or n < 1:
        raise ValueError("path orders must be positive")
    if m > cap or n > cap:
        raise CapExceededError(f"enumeration of order {m}x{n} exceeds cap {cap}")
    out = []
    stack = [((1, 1),)]
    while stack:
        pts = stack.pop()
        i, j = pts[-1]
        if (i, j) == (m, n):
            out.append(WarpingPath(pts, m, n))
            continue
        # reversed so that diagonal, vertical, horizontal pop in that order
        for di, dj in ((0, 1), (1, 0), (1, 1)):
            r, s = i + di, j + dj
            if r <= m and s <= n:
                stack.append(pts + ((r, s),))
    return out


def _coerce_path(p, m: int, n: int) -> tuple:
    pts = p.points if isinstance(p, WarpingPath) else tuple(tuple(q) for q in p)
    validate_path(pts, m, n)
    return pts


def alignment_cost(space: DtwSpace, x: Sequence, y: Sequence, p) -> float:
    """Sum of local distances along warping path ``p``."""
    x, y = space.series(x), space.series(y)
    pts = _coerce_path(p, len(x), len(y))
    d = space.local
    total = 0.0
    for i, j in pts:
        total += d(x[i - 1], y[j - 1])
    return total


def _dtw(space: DtwSpace, x: tuple, y: tuple) -> DtwResult:
    m, n = len(x), len(y)
    cost = space.cost_matrix(x, y)
    inf = float("inf")
    # acc[i][j] holds the minimal cost of a path ending in (i, j); row/col 0 are padding
    acc = [[inf] * (n + 1) for _ in range(m + 1)]
    acc[0][0] = 0.0
    for i in range(1, m + 1):
        row, prev, c = acc[i], acc[i - 1], cost[i - 1]
        for j in range(1, n + 1):
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if row[j - 1] < best:
                best = row[j - 1]
            row[j] = best + c[j - 1]
    # backtrace; ties prefer diagonal, then vertical (i-1, j), then horizontal
    i, j = m, n
    pts = [(m, n)]
    while (i, j) != (1, 1):
        diag, up, left = acc[i - 1][j - 1], acc[i - 1][j], acc[i][j - 1]
        best = min(diag, up, left)
        if diag == best:
            i, j = i - 1, j - 1
        elif up == best:
            i -= 1
        else:
            j -= 1
        pts.append((i, j))
    pts.reverse()
    raw = acc[m][n]
    return DtwResult(space.transform(raw), WarpingPath(tuple(pts), m, n), raw)


def dtw_distance(space: DtwSpace, x: Sequence, y: Sequence) -> DtwResult:
    """Exact DTW distance with one canonical optimal warping path."""
    return _dtw(space, space.series(x), space.series(y))


def dtw_distance_bruteforce(space: DtwSpace, x: Sequence, y: Sequence,
                            cap: int = ENUMERATION_CAP) -> DtwResult:
    """DTW by minimizing over every warping path; a test oracle."""
    x, y = space.series(x), space.series(y)
    best = None
    for p in enumerate_warping_paths(len(x), len(y), cap=cap):
        c = 0.0
        for i, j in p.points:
            c += space.local(x[i - 1], y[j - 1])
        if best is None or c < best[0]:
            best = (c, p)
    raw, path = best
    return DtwResult(space.transform(raw), path, raw)
