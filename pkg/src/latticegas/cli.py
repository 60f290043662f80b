"""Command line front end.

Subcommands: count, matrix, eig, bounds, verify, table.  Output goes
to stdout as json (default), csv or text; json payloads follow the
schemas shipped in latticegas/schemas/.  Exact counts are emitted as
decimal strings so no consumer is tempted to round them.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import bound_table, entropy_interval
from .chain import (
    Boundary,
    Direction,
    Family,
    LatticeInstance,
    Topology,
    chain_dimensions,
    count_lattice,
    transfer_chain,
)
from .compat import compose
from .oracle import MAX_BRUTE_VERTICES, sweep, verify_instance
from .spectral import ConvergenceError, dominant_eigenvalue

MATRIX_PRINT_LIMIT = 40

_FAMILIES = [f.value for f in Family]
_TOPOLOGIES = [t.value for t in Topology]
_DIRECTIONS = [d.value for d in Direction]


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")


def _csv_line(values) -> str:
    out = []
    for v in values:
        s = str(v)
        if any(ch in s for ch in ",\"\n"):
            s = '"' + s.replace('"', '""') + '"'
        out.append(s)
    return ",".join(out)


def _emit_rows(fmt: str, header: list[str], rows: list[list]) -> None:
    if fmt == "csv":
        print(_csv_line(header))
        for row in rows:
            print(_csv_line(row))
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))


# ---------------------------------------------------------------------------
# count


def _cmd_count(args) -> int:
    instance = LatticeInstance(
        Family(args.family), Topology(args.topology), args.m, args.n
    )
    total = count_lattice(instance)
    if args.format == "json":
        print(json.dumps({"count": str(total)}))
    elif args.format == "csv":
        print("count")
        print(total)
    else:
        print(total)
    return 0


# ---------------------------------------------------------------------------
# matrix


def _grid_lines(entries) -> list[str]:
    cells = [[str(e) for e in row] for row in entries]
    width = max(len(c) for row in cells for c in row)
    return [" ".join(c.rjust(width) for c in row) for row in cells]


def _cmd_matrix(args) -> int:
    family = Family(args.family)
    direction = Direction(args.direction)
    shapes = chain_dimensions(family, direction, args.width)
    biggest = max(max(s) for s in shapes)
    if biggest > MATRIX_PRINT_LIMIT and not args.force:
        print(
            f"largest step is {biggest} states per side, past the "
            f"{MATRIX_PRINT_LIMIT} print limit; pass --force to compute anyway",
            file=sys.stderr,
        )
        return 1
    boundary = Boundary.CYCLIC if direction is Direction.ROWWISE else Boundary.OPEN
    chain = transfer_chain(family, direction, args.width, boundary)
    composite = compose(chain.steps)
    payload = {
        "family": family.value,
        "direction": direction.value,
        "boundary": boundary.value,
        "width": args.width,
        "steps": [
            {
                "rows": len(s.rows),
                "cols": len(s.cols),
                "row_masks": list(s.rows.masks),
                "col_masks": list(s.cols.masks),
                "entries": [list(r) for r in s.entries],
            }
            for s in chain.steps
        ],
        "composite": [list(r) for r in composite.entries],
    }
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        for row in composite.entries:
            print(_csv_line(row))
    else:
        for i, s in enumerate(chain.steps, start=1):
            print(f"step {i}: {len(s.rows)}x{len(s.cols)}")
            print("\n".join(_grid_lines(s.entries)))
            print()
        print(f"composite: {len(composite.rows)}x{len(composite.cols)}")
        print("\n".join(_grid_lines(composite.entries)))
    return 0


# ---------------------------------------------------------------------------
# eig


def _cmd_eig(args) -> int:
    family = Family(args.family)
    direction = Direction(args.direction)
    boundary = Boundary.CYCLIC if direction is Direction.ROWWISE else Boundary.OPEN
    chain = transfer_chain(family, direction, args.width, boundary)
    result = dominant_eigenvalue(chain, tol=args.tol, max_iterations=args.max_iterations)
    payload = {
        "family": family.value,
        "direction": direction.value,
        "boundary": boundary.value,
        "width": args.width,
        "value": result.value,
        "iterations": result.iterations,
        "residual": result.residual,
        "tol": args.tol,
    }
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        keys = ["family", "direction", "boundary", "width", "value", "iterations", "residual", "tol"]
        print(_csv_line(keys))
        print(_csv_line([payload[k] for k in keys]))
    else:
        print(f"value      {result.value!r}")
        print(f"iterations {result.iterations}")
        print(f"residual   {result.residual:.3e}")
    return 0


# ---------------------------------------------------------------------------
# bounds


def _cmd_bounds(args) -> int:
    report = entropy_interval(Family(args.family), args.p, args.q, args.k, tol=args.tol)
    payload = report.as_dict()
    payload["tol"] = args.tol
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        keys = ["family", "p", "q", "k", "lower", "upper",
                "per_vertex_exponent", "normalized_lower", "normalized_upper"]
        print(_csv_line(keys))
        print(_csv_line([payload[k] for k in keys]))
    else:
        print(f"family            {report.family.value}")
        print(f"p, q, k           {report.p}, {report.q}, {report.k}")
        print(f"lower             {report.lower!r}")
        print(f"upper             {report.upper!r}")
        print(f"per-vertex lower  {report.normalized_lower!r}")
        print(f"per-vertex upper  {report.normalized_upper!r}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    single = args.m is not None or args.n is not None
    if single and (args.m is None or args.n is None or args.family is None or args.topology is None):
        print("single-instance verify needs --family, --topology, -m and -n", file=sys.stderr)
        return 1
    if single:
        instance = LatticeInstance(Family(args.family), Topology(args.topology), args.m, args.n)
        results = [verify_instance(instance)]
    else:
        families = [Family(args.family)] if args.family else list(Family)
        topologies = [Topology(args.topology)] if args.topology else list(Topology)
        results = list(sweep(args.max_vertices, families, topologies))
    rows = [
        {
            "family": r.instance.family.value,
            "topology": r.instance.topology.value,
            "m": r.instance.m,
            "n": r.instance.n,
            "vertices": r.instance.vertices,
            "transfer": str(r.transfer),
            "brute": str(r.brute),
            "match": r.ok,
        }
        for r in results
    ]
    all_ok = all(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({"results": rows, "ok": all_ok}))
    else:
        header = ["family", "topology", "m", "n", "vertices", "transfer", "brute", "match"]
        _emit_rows(args.format, header, [[row[h] for h in header] for row in rows])
        if args.format == "text":
            print("OK" if all_ok else "MISMATCH")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# table


def _cmd_table(args) -> int:
    if args.k_max < args.k_min:
        print("--k-max must be at least --k-min", file=sys.stderr)
        return 1
    reports = bound_table(Family(args.family), args.p, range(args.k_min, args.k_max + 1), tol=args.tol)
    rows = [
        {
            "k": r.k,
            "q": r.q,
            "lower": r.lower,
            "upper": r.upper,
            "normalized_lower": r.normalized_lower,
            "normalized_upper": r.normalized_upper,
            "normalized_width": r.normalized_width,
        }
        for r in reports
    ]
    if args.format == "json":
        print(json.dumps({"family": args.family, "p": args.p, "rows": rows}))
    else:
        header = ["k", "q", "lower", "upper", "normalized_lower", "normalized_upper", "normalized_width"]
        _emit_rows(args.format, header, [[row[h] for h in header] for row in rows])
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticegas",
        description="Exact independent-set counts and entropy bounds for lattice models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact independent-set count of one instance")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("--topology", choices=_TOPOLOGIES, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("matrix", help="step matrices and composite of a chain")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("--direction", choices=_DIRECTIONS, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--force", action="store_true",
                   help=f"compute even when a side exceeds {MATRIX_PRINT_LIMIT} states")
    _add_format(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("eig", help="dominant eigenvalue of a chain composite")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("--direction", choices=_DIRECTIONS, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iterations", type=int, default=50000)
    _add_format(p)
    p.set_defaults(func=_cmd_eig)

    p = sub.add_parser("bounds", help="two-sided entropy constant interval")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    _add_format(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="check transfer counts against brute force")
    p.add_argument("--family", choices=_FAMILIES)
    p.add_argument("--topology", choices=_TOPOLOGIES)
    p.add_argument("-m", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--max-vertices", type=int, default=24,
                   help=f"sweep cap when -m/-n are not given (max {MAX_BRUTE_VERTICES})")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="bound intervals for a range of k (q tied to k)")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
