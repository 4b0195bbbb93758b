"""Command-line interface.

Exit status: 0 on success, 1 when an invariant or property is violated,
2 on usage errors and malformed input. All output is deterministic for a
given set of inputs and ``--seed``.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import io
from .core import EPS
from .dtw import dtw_distance
from .exceptions import DtwMeanError, ReductionError
from .frechet import nonexistence_demo, variance_curve
from .glue import reduction_bound_sample
from .reduce import reduce_to_bound
from .solver import DEFAULT_CAPS, restricted_mean, unrestricted_mean
from .verify import run_verification
from .wgraph import WarpingGraph, compactify, components, graph_violations, is_compact

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _emit_csv(out, header, rows) -> None:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


def _jsonable_series(x) -> list:
    return [list(a) if isinstance(a, tuple) else a for a in x]


def _load(args):
    """Attribute space, sample, DTW space and losses from the common flags."""
    attrs, sample = io.load_sample(args.sample)
    if args.space:
        space, losses = io.load_space(args.space, attrs)
    else:
        space, losses = io.default_space(attrs)
    return attrs, sample, space, losses


def _caps(args):
    return io.load_caps(args.caps) if getattr(args, "caps", None) else DEFAULT_CAPS


def _grid(args) -> Optional[np.ndarray]:
    if args.grid_step is None:
        return None
    if args.grid_step <= 0 or args.grid_bound <= 0:
        raise UsageError("--grid-step and --grid-bound must be positive")
    k = int(round(args.grid_bound / args.grid_step))
    return np.round(np.arange(-k, k + 1) * args.grid_step, 12)


def cmd_dtw(args, out) -> int:
    attrs_a, xs = io.load_sample(args.a)
    attrs_b, ys = io.load_sample(args.b)
    if attrs_a != attrs_b:
        raise UsageError("the two inputs live in different attribute spaces")
    space, _ = io.load_space(args.space, attrs_a) if args.space else io.default_space(attrs_a)
    res = dtw_distance(space, xs[0], ys[0])
    doc = {"distance": res.distance, "raw_cost": res.raw_cost}
    if args.path:
        doc["path"] = res.path.to_json()
    if args.format == "csv":
        _emit_csv(out, list(doc), [[json.dumps(v) if isinstance(v, list) else v for v in doc.values()]])
    else:
        out.write(_dump(doc) + "\n")
    return OK


def cmd_mean(args, out) -> int:
    _, sample, space, losses = _load(args)
    problem = io.make_problem(sample, space, losses)
    caps, grid = _caps(args), _grid(args)
    if args.unrestricted:
        res = unrestricted_mean(problem, caps, grid)
    else:
        if args.restrict < 1:
            raise UsageError("--restrict must be >= 1")
        res = restricted_mean(problem, args.restrict, caps, grid)
    out.write(_dump(res.to_json()) + "\n")
    return OK


def cmd_variance_curve(args, out) -> int:
    _, sample, space, losses = _load(args)
    problem = io.make_problem(sample, space, losses)
    if args.max_m < 1:
        raise UsageError("--max-m must be >= 1")
    curve = variance_curve(problem, args.max_m, _caps(args))
    best = curve.argmin(args.tolerance)
    rows = [[m, v, r, json.dumps(_jsonable_series(z)) if m == best else ""]
            for m, v, r, z in curve.rows()]
    if args.format == "json":
        doc = {"argmin": best, "rows": [{"m": m, "F_m_star": v, "v_m": r, "minimizer": _jsonable_series(z)}
                                        for m, v, r, z in curve.rows()]}
        out.write(_dump(doc) + "\n")
    else:
        _emit_csv(out, ["m", "F_m_star", "v_m", "argmin_candidate"], rows)
    return OK


def cmd_bound(args, out) -> int:
    _, sample = io.load_sample(args.sample)
    rep = reduction_bound_sample([len(s) for s in sample])
    if args.format == "json":
        out.write(_dump(rep.to_json()) + "\n")
        return OK
    # the length formula only applies when no series has length 1
    applicable = rep.trivial_count == 0
    if not applicable:
        check = f"not applicable, {rep.trivial_count} series of length 1"
    else:
        check = "agrees" if rep.agrees_with_simple else "DISAGREES"
    out.write(f"rho={rep.rho}\n")
    out.write(f"core={json.dumps(list(rep.core))}\n")
    out.write(f"length_formula={rep.simple_rho} ({check})\n")
    return VIOLATION if applicable and not rep.agrees_with_simple else OK


def _read_candidate(text: str, attrs):
    path = Path(text)
    if path.exists():
        _, series = io.load_sample(path)
        return series[0]
    try:
        return attrs.series(json.loads(text) if text.lstrip().startswith("[") else
                            [float(c) for c in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"cannot read candidate {text!r}: {exc}") from None


def cmd_reduce(args, out) -> int:
    attrs, sample, space, losses = _load(args)
    problem = io.make_problem(sample, space, losses)
    x = _read_candidate(args.candidate, attrs)
    try:
        final, steps = reduce_to_bound(problem, x, args.tolerance, stop_at_bound=args.stop_at_bound)
    except ReductionError as exc:
        sys.stderr.write(f"reduction failed: {exc}\n")
        return VIOLATION
    trajectory = [steps[0].f_before] + [s.f_after for s in steps] if steps else []
    doc = {"rho": problem.reduction_bound.rho,
           "initial": _jsonable_series(problem.space.series(x)),
           "final": _jsonable_series(final),
           "removed": [s.removed for s in steps],
           "f_trajectory": trajectory}
    if args.verbose:
        doc["steps"] = [s.to_json() for s in steps]
    out.write(_dump(doc) + "\n")
    return OK


def cmd_demo_nonexistence(args, out) -> int:
    rep = nonexistence_demo(steps=args.steps, grid_step=args.grid_step, grid_bound=args.grid_bound,
                            max_length=args.max_length, eps=args.tolerance)
    summary = {"best_family": rep.best_family, "strictly_decreasing": rep.strictly_decreasing,
               "family_infimum": rep.family_infimum, "grid_minimum": rep.grid_minimum,
               "grid_argmin": list(rep.grid_argmin), "empirical_infimum": rep.empirical_infimum,
               "attained": rep.attained,
               "grid_minima": {str(m): v for m, (v, _) in sorted(rep.grid_minima.items())}}
    if args.format == "json":
        summary["families"] = {name: [{"t": t, "candidate": list(z), "F": f} for t, z, f in rows]
                               for name, rows in rep.families.items()}
        out.write(_dump(summary) + "\n")
    else:
        rows = [[name, t, f] for name, fam in rep.families.items() for t, _, f in fam]
        _emit_csv(out, ["family", "t", "F"], rows)
        sys.stderr.write(_dump(summary) + "\n")
    return OK


def cmd_verify(args, out) -> int:
    results = run_verification(seed=args.seed)
    for r in results:
        out.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
    failed = [r for r in results if not r.ok]
    if failed:
        sys.stderr.write(f"{len(failed)} check(s) failed; first counterexample:\n")
        sys.stderr.write(_dump(failed[0].counterexample) + "\n")
        return VIOLATION
    return OK


def cmd_wgraph(args, out) -> int:
    try:
        doc = json.loads(Path(args.graph).read_text())
        m, n = int(doc["m"]), int(doc["n"])
        edges = [tuple(int(v) for v in e) for e in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.graph}: expected {{\"m\", \"n\", \"edges\"}}: {exc}") from None
    problems = graph_violations(m, n, edges)
    if args.action == "check":
        report = {"valid": not problems, "violations": problems}
        if not problems:
            g = WarpingGraph(m, n, tuple(edges))
            report["compact"] = is_compact(g)
            if report["compact"]:
                report["components"] = [{"form": c.form, "center": list(c.center),
                                         "leaves": [list(u) for u in c.leaves]} for c in components(g)]
        out.write(_dump(report) + "\n")
        return OK if not problems else VIOLATION
    if problems:
        raise UsageError(f"not a warping graph: {', '.join(problems)}")
    out.write(_dump(compactify(WarpingGraph(m, n, tuple(edges))).to_json()) + "\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default depends on the command)")
    common.add_argument("--tolerance", type=float, default=EPS, help="comparison tolerance (default 1e-9)")
    common.add_argument("--seed", type=int, default=0, help="random seed for fuzzing commands")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("--space", help="space configuration JSON")
    space.add_argument("--caps", help="solver caps JSON")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid-step", type=float, default=None,
                      help="enable the approximate coordinate-grid fallback with this step")
    grid.add_argument("--grid-bound", type=float, default=2.0, help="grid spans [-bound, bound]")

    p = argparse.ArgumentParser(prog="dtwmean", description="Sample means in DTW spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dtw", parents=[common, space], help="DTW distance of two series")
    s.add_argument("a", help="file holding the first series (first row is used)")
    s.add_argument("b", help="file holding the second series (first row is used)")
    s.add_argument("--path", action="store_true", help="include the optimal warping path")
    s.set_defaults(func=cmd_dtw)

    s = sub.add_parser("mean", parents=[common, space, grid], help="restricted or unrestricted sample mean")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--restrict", type=int, metavar="M", help="length of the restricted mean")
    mode.add_argument("--unrestricted", action="store_true", help="sweep lengths 1..rho")
    s.add_argument("sample")
    s.set_defaults(func=cmd_mean)

    s = sub.add_parser("variance-curve", parents=[common, space], help="F_m* for m = 1..max-m")
    s.add_argument("sample")
    s.add_argument("--max-m", type=int, required=True)
    s.set_defaults(func=cmd_variance_curve)

    s = sub.add_parser("bound", parents=[common], help="reduction bound of a sample")
    s.add_argument("sample")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("reduce", parents=[common, space], help="shorten a candidate by redundant removals")
    s.add_argument("sample")
    s.add_argument("--candidate", required=True, help="candidate file, or inline values such as 0,1,0")
    s.add_argument("--stop-at-bound", action="store_true", help="stop once the length is <= rho")
    s.add_argument("--verbose", action="store_true", help="include glued graphs and paths of every step")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("demo-nonexistence", parents=[common], help="xor-zero infimum experiment")
    s.add_argument("--steps", type=int, default=20)
    s.add_argument("--grid-step", type=float, default=1e-3)
    s.add_argument("--grid-bound", type=float, default=2.0)
    s.add_argument("--max-length", type=int, default=4)
    s.set_defaults(func=cmd_demo_nonexistence)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("wgraph", parents=[common], help="check or compactify a warping graph")
    s.add_argument("action", choices=("check", "compactify"))
    s.add_argument("graph")
    s.set_defaults(func=cmd_wgraph)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.tolerance <= 0:
        sys.stderr.write("dtwmean: --tolerance must be positive\n")
        return USAGE
    try:
        return args.func(args, out)
    except (UsageError, DtwMeanError, ValueError, OSError, KeyError, TypeError) as exc:
        sys.stderr.write(f"dtwmean {args.command}: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
