"""Command line front end.

Inputs are JSON files (see serialize); output is canonical JSON (sorted
keys, numbers as strings) on stdout, or aligned text with
--format table.  Exit codes: 0 success, 1 bad input, 2 a verification
or self-test failure (so CI can tell bad data from a broken
counting invariant).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import serialize
from .bases import FStarVector
from .rational import count_via_profile, mixed_profile, quasi_eval, \
    residue_fstar, restricted_partition
from .coloring import coloring_complex_fvector, coloring_complex_hstar
from .cones import enumerate_atomic, verify_partition
from .simplices import (Simplex, count_points, fstar_interpolate,
                        fstar_simplex, hstar_simplex)


class CliError(Exception):
    """Bad input or usage; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _load_json(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON: {exc}") from None


def _load_simplex(path: str) -> Simplex:
    try:
        return serialize.simplex_from_json(_load_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise CliError(f"{path}: {exc}") from None


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "table":
        for line in _table_lines(payload):
            print(line)
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _table_lines(payload: dict, indent: str = "") -> list[str]:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_table_lines(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            columns = sorted({k for row in value for k in row})
            rows = [[_cell(row.get(c, "")) for c in columns] for row in value]
            widths = [max(len(c), *(len(r[i]) for r in rows))
                      for i, c in enumerate(columns)]
            lines.append(f"{indent}{key}:")
            lines.append(indent + "  " + "  ".join(
                c.ljust(w) for c, w in zip(columns, widths)))
            for r in rows:
                lines.append(indent + "  " + "  ".join(
                    x.ljust(w) for x, w in zip(r, widths)).rstrip())
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
    return lines


def _cell(value) -> str:
    if isinstance(value, list):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _cmd_count(args) -> int:
    simplex = _load_simplex(args.simplex)
    _emit({"count": str(count_points(simplex, args.dilate))}, args.format)
    return 0


def _cmd_fstar(args) -> int:
    simplex = _load_simplex(args.simplex)
    if args.method == "interpolate":
        result = fstar_interpolate(simplex, args.ambient_degree)
    else:
        result = fstar_simplex(simplex, args.ambient_degree)
    payload = serialize.fstar_to_json(result)
    payload["method"] = args.method
    _emit(payload, args.format)
    return 0


def _cmd_hstar(args) -> int:
    simplex = _load_simplex(args.simplex)
    _emit(serialize.hstar_to_json(hstar_simplex(simplex)), args.format)
    return 0


def _cmd_atomic(args) -> int:
    basis = serialize.generators_from_json(_load_json(args.generators))
    points = enumerate_atomic(basis)
    rows = [dict(entry, height=point.height)
            for entry, point in
            zip(serialize.atomic_points_to_json(points), points)]
    if args.format == "table":
        _emit({"atomic": rows}, "table")
    else:
        print(json.dumps(rows, sort_keys=True, separators=(",", ":")))
    return 0


def _cmd_verify_partition(args) -> int:
    basis = serialize.generators_from_json(_load_json(args.generators))
    report = verify_partition(basis, args.max_level)
    _emit(serialize.partition_report_to_json(report), args.format)
    return 0 if report.passed else 2


def _fstar_cell(task: tuple[Simplex, int]) -> FStarVector:
    cell, degree = task
    return fstar_simplex(cell, degree)


def _cmd_complex_fstar(args) -> int:
    complex_ = serialize.complex_from_json(_load_json(args.complex))
    degree = args.ambient_degree
    if degree is None:
        degree = complex_.dim
    if degree < complex_.dim:
        raise CliError("ambient degree too small for the complex")
    tasks = [(cell, degree) for cell in complex_.cells]
    if args.parallel and len(tasks) > 1:
        with ProcessPoolExecutor() as pool:
            parts = list(pool.map(_fstar_cell, tasks, chunksize=8))
    else:
        parts = [_fstar_cell(t) for t in tasks]
    total = FStarVector((0,) * (degree + 1), degree)
    for part in parts:
        total = FStarVector(tuple(a + b for a, b in
                                  zip(total.entries, part.entries)), degree)
    _emit(serialize.fstar_to_json(total), args.format)
    return 0


def _cmd_rational_fstar(args) -> int:
    simplex = _load_simplex(args.simplex)
    qp = residue_fstar(simplex, args.period)
    _emit(serialize.quasipolynomial_to_json(qp), args.format)
    return 0


def _cmd_quasi_eval(args) -> int:
    simplex = _load_simplex(args.simplex)
    qp = residue_fstar(simplex, args.period)
    _emit({"count": str(quasi_eval(qp, args.height))}, args.format)
    return 0


def _cmd_partition_count(args) -> int:
    try:
        weights = [int(w) for w in args.weights.split(",") if w]
    except ValueError:
        raise CliError("weights must be a comma-separated integer list")
    _emit({"count": str(restricted_partition(weights, args.target))},
          args.format)
    return 0


def _cmd_profile_count(args) -> int:
    simplex = _load_simplex(args.simplex)
    profile, heights = mixed_profile(simplex)
    table = [{"level": i + 1, "height": s, "count": c}
             for (i, s), c in sorted(profile.counts.items())]
    payload = {
        "count": str(count_via_profile(simplex, args.dilate)),
        "profile": table,
        "vertex_heights": list(heights),
    }
    _emit(payload, args.format)
    return 0


def _cmd_coloring_complex(args) -> int:
    graph = serialize.hypergraph_from_json(_load_json(args.hypergraph))
    f = coloring_complex_fvector(graph)
    fstar, hstar = coloring_complex_hstar(graph)
    payload = {
        "f": [str(x) for x in f],
        "fstar": serialize.vector_to_json(fstar.entries),
        "hstar": serialize.vector_to_json(hstar.entries),
        "dimension": fstar.ambient_degree,
    }
    _emit(payload, args.format)
    return 0


def _cmd_selftest(args) -> int:
    from . import acceptance
    ok = acceptance.run_all(sys.stdout)
    return 0 if ok else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="fstarcount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **arguments):
        p = sub.add_parser(name)
        for flag, options in arguments.items():
            p.add_argument(flag, **options)
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--parallel", action="store_true",
                       help="enable internal parallel enumeration")
        p.set_defaults(func=func)
        return p

    add("count", _cmd_count,
        **{"--simplex": dict(required=True),
           "--dilate": dict(type=int, required=True)})
    add("fstar", _cmd_fstar,
        **{"--simplex": dict(required=True),
           "--ambient-degree": dict(type=int, default=None),
           "--method": dict(choices=("atomic", "interpolate"),
                            default="atomic")})
    add("hstar", _cmd_hstar, **{"--simplex": dict(required=True)})
    add("atomic", _cmd_atomic, **{"--generators": dict(required=True)})
    add("verify-partition", _cmd_verify_partition,
        **{"--generators": dict(required=True),
           "--max-level": dict(type=int, required=True)})
    add("complex-fstar", _cmd_complex_fstar,
        **{"--complex": dict(required=True),
           "--ambient-degree": dict(type=int, default=None)})
    add("rational-fstar", _cmd_rational_fstar,
        **{"--simplex": dict(required=True),
           "--period": dict(type=int, required=True)})
    add("quasi-eval", _cmd_quasi_eval,
        **{"--simplex": dict(required=True),
           "--period": dict(type=int, required=True),
           "--height": dict(type=int, required=True)})
    add("partition-count", _cmd_partition_count,
        **{"--weights": dict(required=True),
           "--target": dict(type=int, required=True)})
    add("profile-count", _cmd_profile_count,
        **{"--simplex": dict(required=True),
           "--dilate": dict(type=int, required=True)})
    add("coloring-complex", _cmd_coloring_complex,
        **{"--hypergraph": dict(required=True)})
    add("selftest", _cmd_selftest)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
