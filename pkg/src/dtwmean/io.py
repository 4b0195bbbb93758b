"""Reading samples, space configurations, caps and graphs from files.

Sample files
    ``*.csv``: one univariate series per row, numeric cells, rows may differ
    in length. ``*.json``: ``{"series": [[...], ...], "dim": d}`` for
    multivariate data (``dim`` omitted or 1 with scalar cells means
    univariate) or ``{"alphabet": [...], "series": [[...], ...]}`` for
    symbolic data.

Space configuration (JSON)
    ``{"local": ..., "transform": ..., "losses": [{"w": ..., "p": ...}, ...]}``
    where ``local`` is ``"sqeuclidean"``, ``"xor_zero"``,
    ``{"kind": "norm", "p": 1}`` or ``{"kind": "table", "matrix": [[...]]}``
    (rows follow the sample's alphabet, or an explicit ``"alphabet"``).
    A single loss is applied to every series.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Optional

from .core import (IDENTITY, NORM, SQEUCLIDEAN, SQRT, SYMBOL, TABLE, XOR_ZERO, AttributeSpace,
                   DtwSpace, LocalDistance, LossFunction, MonotoneTransform)
from .frechet import FrechetProblem
from .solver import SolverCaps
from .wgraph import WarpingGraph


def read_csv_series(path) -> list[tuple]:
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            cells = [c.strip() for c in row if c.strip()]
            if not cells or cells[0].startswith("#"):
                continue
            try:
                rows.append(tuple(float(c) for c in cells))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric cell in {row!r}") from None
    if not rows:
        raise ValueError(f"{path}: no series found")
    return rows


def load_sample(path) -> tuple[AttributeSpace, list[tuple]]:
    """Attribute space and series stored in ``path``."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return AttributeSpace.real(), read_csv_series(path)
    doc = json.loads(path.read_text())
    if not isinstance(doc, dict) or "series" not in doc:
        raise ValueError(f"{path}: expected a JSON object with a 'series' key")
    series = doc["series"]
    if not isinstance(series, list) or not series:
        raise ValueError(f"{path}: 'series' must be a non-empty list")
    if "alphabet" in doc:
        attrs = AttributeSpace.symbols(doc["alphabet"])
    elif int(doc.get("dim", 1)) == 1 and all(not isinstance(a, list) for s in series for a in s):
        attrs = AttributeSpace.real()
    else:
        attrs = AttributeSpace.vector(int(doc.get("dim", 1)))
    return attrs, [attrs.series(s) for s in series]


def parse_local(cfg, attrs: AttributeSpace) -> LocalDistance:
    if isinstance(cfg, str):
        cfg = {"kind": cfg}
    kind = cfg.get("kind", SQEUCLIDEAN)
    if kind == NORM:
        return LocalDistance(NORM, p=float(cfg.get("p", 2.0)))
    if kind == TABLE:
        alphabet = cfg.get("alphabet", attrs.alphabet)
        if "matrix" in cfg:
            return LocalDistance.table_from(alphabet, cfg["matrix"])
        return LocalDistance.discrete(alphabet)
    if kind in (SQEUCLIDEAN, XOR_ZERO):
        return LocalDistance(kind)
    raise ValueError(f"unknown local distance {kind!r}")


def parse_space(doc: dict, attrs: AttributeSpace) -> tuple[DtwSpace, Optional[list[LossFunction]]]:
    """DTW space and (possibly absent) loss list from a configuration document."""
    default_local = TABLE if attrs.kind == SYMBOL else SQEUCLIDEAN
    default_transform = IDENTITY if attrs.kind == SYMBOL else SQRT
    local = parse_local(doc.get("local", default_local), attrs)
    transform = MonotoneTransform(doc.get("transform", default_transform))
    losses = doc.get("losses")
    if losses is not None:
        if isinstance(losses, dict):
            losses = [losses]
        losses = [LossFunction(float(h.get("w", 1.0)), float(h.get("p", 1.0))) for h in losses]
    return DtwSpace(attrs, local, transform), losses


def load_space(path, attrs: AttributeSpace):
    return parse_space(json.loads(Path(path).read_text()), attrs)


def default_space(attrs: AttributeSpace):
    return parse_space({}, attrs)


def make_problem(sample: list, space: DtwSpace, losses: Optional[list]) -> FrechetProblem:
    if not losses:
        losses = [LossFunction(1.0, 2.0)]
    if len(losses) == 1:
        losses = losses * len(sample)
    return FrechetProblem(tuple(sample), space, tuple(losses))


def load_caps(path) -> SolverCaps:
    return SolverCaps.from_json(json.loads(Path(path).read_text()))


def load_graph(path) -> WarpingGraph:
    return WarpingGraph.from_json(json.loads(Path(path).read_text()))


def space_to_json(space: DtwSpace, losses=None) -> dict:
    local = space.local
    if local.kind == NORM:
        local_doc = {"kind": NORM, "p": local.p}
    elif local.kind == TABLE:
        local_doc = {"kind": TABLE, "alphabet": list(local.alphabet), "matrix": [list(r) for r in local.matrix]}
    else:
        local_doc = local.kind
    doc = {"local": local_doc, "transform": space.transform.kind}
    if losses is not None:
        doc["losses"] = [{"w": h.w, "p": h.p} for h in losses]
    return doc


def sample_to_json(attrs: AttributeSpace, series) -> dict:
    doc = {"series": [[list(a) if isinstance(a, tuple) else a for a in s] for s in series]}
    if attrs.kind == SYMBOL:
        doc["alphabet"] = list(attrs.alphabet)
    elif attrs.kind == "vector":
        doc["dim"] = attrs.dim
    return doc
