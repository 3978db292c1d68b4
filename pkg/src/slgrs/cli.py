"""Command-line interface: JSON Cartan specs in, JSON reports out.

Exit codes: 0 success, 1 unreadable or invalid input, 2 request not
supported for this input (e.g. classification of an indefinite form),
3 an internal verification step failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from . import linalg as la
from .carter import are_isomorphic_grs, classify_grs, realize
from .catalog import catalog
from .errors import (
    GrsError,
    NameUnknown,
    NotPositiveDefinite,
    Reducible,
    SearchExhausted,
    ShapeError,
    TargetNotEnumerable,
    ValidationError,
    VerificationFailure,
)
from .grs import (
    EulerNotUnique,
    GrsPresentation,
    Unknown,
    coxeter_matrix,
    coxeter_order,
    euler_form,
    euler_identities_hold,
    new_grs,
    radical,
    solve_euler_uniqueness,
)
from .weyl import DEFAULT_GROUP_CAP, enumerate_roots, enumerate_weyl_group, irreducible_components

DEFAULT_ORDER_CAP = 10**4
SPEC_KEYS = {"rank", "cartan", "label"}


class ParseError(GrsError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GrsSpecFile:
    rank: int
    cartan: la.Matrix
    label: str | None = None

    def presentation(self) -> GrsPresentation:
        return new_grs(self.cartan, self.label)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"rank": self.rank, "cartan": [list(r) for r in self.cartan]}
        if self.label is not None:
            out["label"] = self.label
        return out


def _no_duplicates(pairs):
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise ParseError(f"duplicate key {k!r}")
        seen[k] = v
    return seen


def _reject_constant(name):
    raise ParseError(f"{name} is not a valid number")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_spec(text: str) -> GrsSpecFile:
    """Strict parse of {"rank": int, "cartan": [[int]], "label": str?}."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    extra = set(doc) - SPEC_KEYS
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}")
    for key in ("rank", "cartan"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    rank, rows, label = doc["rank"], doc["cartan"], doc.get("label")
    if not _is_int(rank) or rank < 1:
        raise ParseError("rank must be a positive integer")
    if label is not None and not isinstance(label, str):
        raise ParseError("label must be a string")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("cartan must be a list of rows")
    if not all(_is_int(x) for r in rows for x in r):
        raise ParseError("cartan entries must be integers")
    if len(rows) != rank or any(len(r) != rank for r in rows):
        raise ValidationError(f"cartan must be {rank}x{rank} to match rank {rank}")
    spec = GrsSpecFile(rank, la.as_matrix(rows), label)
    spec.presentation()  # raises NotSymmetric / BadDiagonal
    return spec


def read_spec(path: str) -> GrsSpecFile:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}") from None
        except UnicodeDecodeError:
            raise ParseError(f"{path} is not UTF-8") from None
    return parse_spec(text)


# -- reports ----------------------------------------------------------------

def _inapplicable(reason: str) -> dict:
    return {"inapplicable": reason}


def _matrix(m) -> list[list[int]]:
    return [list(r) for r in m]


def _order(value) -> int | str:
    return str(value) if isinstance(value, Unknown) else value


def _component_json(c) -> dict:
    return {
        "indices": list(c.indices),
        "name": c.name,
        "ambient_type": c.ambient_type,
        "root_count": c.root_count,
        "representation": {
            "group1": [list(r) for r in c.rep.group1],
            "group2": [list(r) for r in c.rep.group2],
        },
        "diagram_edges": [list(e) for e in sorted(c.diagram.edges)],
    }


def euler_report(grs: GrsPresentation) -> dict:
    x = solve_euler_uniqueness(grs)
    return {
        "label": grs.label,
        "euler": _matrix(x),
        "unique": True,
        "identities_hold": euler_identities_hold(grs, x),
        "det": la.det_exact(x),
    }


def analysis_report(grs: GrsPresentation, order_cap: int, group_cap: int) -> dict:
    pd = la.is_positive_definite(grs.cartan)
    x = euler_form(grs)
    try:
        solve_euler_uniqueness(grs)
        unique: Any = True
    except EulerNotUnique as e:
        unique = {
            "failed": "solution family",
            "nullity": e.nullity,
            "alternative": _matrix(e.alternative) if e.alternative else None,
        }
    comps = irreducible_components(grs)
    report: dict[str, Any] = {
        "label": grs.label,
        "rank": grs.rank,
        "cartan": _matrix(grs.cartan),
        "caps": {"order_cap": order_cap, "group_cap": group_cap},
        "positive_definite": pd,
        "radical_rank": radical(grs).rank,
        "euler": _matrix(x),
        "euler_unique": unique,
        "coxeter": _matrix(coxeter_matrix(grs)),
        "coxeter_order": _order(coxeter_order(grs, order_cap)),
        "components": {
            "parts": [list(p) for p in comps.parts],
            "heuristic": comps.heuristic,
        },
    }
    if pd:
        report["root_count"] = len(enumerate_roots(grs))
        table = enumerate_weyl_group(grs, group_cap) if grs.rank <= 6 else None
        if table is None:
            report["weyl_group_order"] = _inapplicable("not enumerated above rank 6")
        else:
            report["weyl_group_order"] = len(table) if table.complete else str(Unknown(group_cap))
        classes = classify_grs(grs)
        report["diagrams"] = [_component_json(c) for c in classes]
    else:
        why = "Cartan form is not positive definite"
        report["root_count"] = _inapplicable("not enumerable: " + why)
        report["weyl_group_order"] = _inapplicable(why)
        report["diagrams"] = _inapplicable(why)
    return report


def roots_report(grs: GrsPresentation, depth: int | None) -> dict:
    rs = enumerate_roots(grs, depth=depth)
    n = grs.rank
    return {
        "label": grs.label,
        "count": len(rs),
        "complete": rs.complete,
        "bound": 3**n + n,
        "roots": [list(r) for r in rs],
    }


def classify_report(grs: GrsPresentation) -> tuple[dict, list]:
    classes = classify_grs(grs)
    return (
        {
            "label": grs.label,
            "names": [c.name for c in classes],
            "components": [_component_json(c) for c in classes],
        },
        [c.diagram for c in classes],
    )


def catalog_report(rank: int | None) -> tuple[dict, list]:
    cat = catalog()
    entries = cat.entries if rank is None else tuple(cat.of_rank(rank))
    return (
        {
            "count": len(entries),
            "entries": [
                {"name": n, "rank": d.vertex_count, "edges": [list(e) for e in sorted(d.edges)]}
                for n, d in entries
            ],
            "collisions": [list(c) for c in cat.collisions],
            "skipped": list(cat.skipped),
        },
        [d for _, d in entries],
    )


# -- driver -----------------------------------------------------------------

def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _write_dot(path: str, diagrams) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("".join(d.to_dot() for d in diagrams))


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors (exit 1); argparse would use 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP,
                        help="Weyl group enumeration cap (default %(default)s)")
    common.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                        help="Coxeter order search cap (default %(default)s)")

    p = _Parser(prog="slgrs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("analyze", "full report for a Cartan spec"),
        ("euler", "Euler form, solved and checked for uniqueness"),
        ("roots", "real roots of a positive definite spec"),
        ("classify", "admissible diagram names per irreducible component"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file", help="JSON spec path, or - for stdin")
        if name == "roots":
            sp.add_argument("--depth", type=int, help="truncated orbit for indefinite forms")
        if name == "classify":
            sp.add_argument("--dot", metavar="PATH", help="write diagrams as Graphviz DOT")
    sp = sub.add_parser("realize", parents=[common], help="spec realizing a catalog diagram")
    sp.add_argument("name")
    sp = sub.add_parser("isomorphic", parents=[common], help="compare two irreducible specs")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp = sub.add_parser("catalog", parents=[common], help="list the diagram catalog")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--dot", metavar="PATH", help="write diagrams as Graphviz DOT")
    sp = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    sp.add_argument("--only", type=int, action="append", metavar="N",
                    help="run only criterion N (repeatable)")
    return p


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "analyze":
        _emit(analysis_report(read_spec(args.file).presentation(), args.order_cap, args.cap))
    elif cmd == "euler":
        _emit(euler_report(read_spec(args.file).presentation()))
    elif cmd == "roots":
        _emit(roots_report(read_spec(args.file).presentation(), args.depth))
    elif cmd == "classify":
        report, diagrams = classify_report(read_spec(args.file).presentation())
        if args.dot:
            _write_dot(args.dot, diagrams)
        _emit(report)
    elif cmd == "realize":
        g = realize(args.name)
        _emit(GrsSpecFile(g.rank, g.cartan, args.name).to_json())
    elif cmd == "isomorphic":
        g1 = read_spec(args.file1).presentation()
        g2 = read_spec(args.file2).presentation()
        _emit({"isomorphic": are_isomorphic_grs(g1, g2)})
    elif cmd == "catalog":
        report, diagrams = catalog_report(args.rank)
        if args.dot:
            _write_dot(args.dot, diagrams)
        _emit(report)
    elif cmd == "selftest":
        from .acceptance import run_all

        results = run_all(args.only)
        for r in results:
            print(r.line(), file=sys.stderr)
        _emit({"criteria": [r.to_json() for r in results],
               "passed": all(r.passed for r in results)})
        return 0 if all(r.passed for r in results) else 3
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _dispatch(args)
    except (ParseError, ValidationError, ShapeError, NameUnknown) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (NotPositiveDefinite, TargetNotEnumerable, Reducible) as e:
        print(f"unsupported: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (VerificationFailure, SearchExhausted) as e:
        print(f"verification failed: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
