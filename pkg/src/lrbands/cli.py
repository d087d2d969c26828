"""Command-line front end.

Exit status: 0 on success, 1 when the input fails a semantic check (LRB
axioms, thin-MC preconditions, roundtrip, lemma suite), 2 on parse or I/O
errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import export
from .adjacency import support_parity_ok
from .constructions import LineArrangement, covector_lrb, free_lrb, line_arrangement_lrb, path_example
from .core import LrbTable, validate_lrb
from .errors import InputError, LrbError, PreconditionError
from .lrbgraph import ThinLrbGraph, from_lrb, roundtrip_check, to_lrb, validate_graph
from .order import meet_criterion
from .theorems import Instance, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Failure(Exception):
    """Semantic failure carrying a machine-readable payload."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", ""))
        self.payload = payload


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def load(path):
    """Parse an instance file: a graph if it has ``edges``, else an LRB table."""
    text = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if isinstance(data, dict) and "edges" in data:
        return ThinLrbGraph.from_dict(data)
    return LrbTable.from_dict(data)


def _as_lrb(obj) -> LrbTable:
    if isinstance(obj, ThinLrbGraph):
        try:
            return to_lrb(obj)
        except PreconditionError as exc:
            raise Failure({"ok": False, "reason": str(exc)}) from None
    return obj


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _report(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _validated(s: LrbTable):
    rep = validate_lrb(s)
    if not rep.ok:
        raise Failure({"ok": False, "reason": "not a left regular band", "failures": rep.failures()})
    return rep


def cmd_analyze(args) -> int:
    obj = load(args.file)
    if args.re_emit:
        if isinstance(obj, ThinLrbGraph):
            _emit(obj.to_dict())
        else:
            _validated(obj)
            _emit(obj.to_dict())
        return EXIT_OK
    s = _as_lrb(obj)
    rep = _validated(s)
    inst = Instance.build(s)
    names = s.names
    poset, sup, graph, cls = inst.poset, inst.supports, inst.graph, inst.classification
    crit = meet_criterion(s, poset, sup)
    parity = support_parity_ok(graph)
    report = {
        "elements": s.size,
        "validation": {"ok": True, "identity": None if rep.identity_index is None else names[rep.identity_index]},
        "poset": {
            "chambers": [names[c] for c in poset.chambers],
            "facets": [names[f] for f in poset.facets],
            "minimals": [names[m] for m in poset.minimals],
            "rank": poset.rank,
            "chamber_distances": [[names[m], names[c], d] for (m, c), d in sorted(poset.chamber_distances.items())],
            "covers": len(poset.covers),
        },
        "supports": {
            "count": len(sup.classes),
            "classes": [{"id": c, "members": [names[x] for x in sorted(sup.classes[c])]} for c in sup.class_ids],
        },
        "adjacency": {
            "vertices": len(graph.vertices),
            "edges": [[names[e.u], names[e.v], names[e.facet], str(e.label)] for e in graph.edges],
        },
        "classification": {
            "connected": cls.is_connected,
            "meet_semilattice": cls.is_meet,
            "mc": cls.is_mc,
            "thin": cls.is_thin,
            "cover_mismatches": [names[f] for f in cls.cover_mismatches],
        },
        "meet_criterion": {"holds": crit.holds, "agrees_with_brute_force": crit.holds == cls.is_meet},
        "parity": {"ok": parity.ok, "reason": parity.reason},
    }
    _report(report)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.family == "free":
        s = free_lrb(args.letters)
    elif args.family == "lines":
        if args.directions:
            arr = LineArrangement(tuple(math.radians(d) for d in args.directions))
        else:
            arr = LineArrangement.regular(args.count)
        s = line_arrangement_lrb(arr)
    elif args.family == "path":
        s = path_example(args.n)
    else:
        s = covector_lrb(args.faces)
    _emit(s.to_dict())
    return EXIT_OK


def cmd_to_graph(args) -> int:
    obj = load(args.file)
    if isinstance(obj, ThinLrbGraph):
        raise InputError("to-graph expects an LRB instance, got a graph")
    _validated(obj)
    try:
        g = from_lrb(obj)
    except PreconditionError as exc:
        raise Failure({"ok": False, "reason": str(exc)}) from None
    _emit(g.to_dict())
    return EXIT_OK


def cmd_from_graph(args) -> int:
    obj = load(args.file)
    if not isinstance(obj, ThinLrbGraph):
        raise InputError("from-graph expects a graph instance")
    _emit(_as_lrb(obj).to_dict())
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    obj = load(args.file)
    if isinstance(obj, ThinLrbGraph):
        rep = validate_graph(obj)
        if not rep.ok:
            raise Failure({"ok": False, "reason": "; ".join(rep.errors)})
        side = "graph"
    else:
        _validated(obj)
        side = "lrb"
    try:
        ok = roundtrip_check(obj)
    except PreconditionError as exc:
        raise Failure({"ok": False, "side": side, "reason": str(exc)}) from None
    _report({"ok": ok, "side": side})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(args) -> int:
    obj = load(args.file)
    if args.what == "graph":
        if not isinstance(obj, ThinLrbGraph):
            _validated(obj)
            try:
                obj = from_lrb(obj)
            except PreconditionError as exc:
                raise Failure({"ok": False, "reason": str(exc)}) from None
        sys.stdout.write(export.thin_graph_dot(obj))
        return EXIT_OK
    s = _as_lrb(obj)
    _validated(s)
    render = {
        "faceposet": export.face_poset_dot,
        "supports": export.support_lattice_dot,
        "adjacency": export.adjacency_dot,
    }[args.what]
    sys.stdout.write(render(s))
    return EXIT_OK


def cmd_check(args) -> int:
    s = _as_lrb(load(args.file))
    results = run_suite(s)
    ok = all(r.ok for r in results)
    _report({"ok": ok, "checks": [r.to_dict() for r in results]})
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lrb", description="Finite left regular bands: build, analyze, convert.")
    sub = p.add_subparsers(dest="verb", required=True)

    a = sub.add_parser("analyze", help="validate and summarize an instance")
    a.add_argument("file", nargs="?", help="instance JSON (default: stdin)")
    a.add_argument("--re-emit", action="store_true", help="print the validated instance JSON unchanged")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="emit a built-in instance as JSON")
    fam = c.add_subparsers(dest="family", required=True)
    f = fam.add_parser("free", help="free LRB on K letters")
    f.add_argument("--letters", type=int, required=True)
    ln = fam.add_parser("lines", help="face semigroup of a line arrangement")
    ln.add_argument("--count", type=int, default=3)
    ln.add_argument("--directions", type=float, nargs="+", help="line directions in degrees")
    pa = fam.add_parser("path", help="the path example with N chambers")
    pa.add_argument("--n", type=int, required=True)
    cv = fam.add_parser("covectors", help="composition table of explicit sign vectors")
    cv.add_argument("faces", nargs="+", help="sign vectors such as 0+- ")
    c.set_defaults(func=cmd_construct)

    for verb, fn, help_ in (
        ("to-graph", cmd_to_graph, "thin MC LRB -> thin LRB graph"),
        ("from-graph", cmd_from_graph, "thin LRB graph -> LRB"),
        ("roundtrip", cmd_roundtrip, "check the graph/LRB correspondence on an instance"),
        ("check", cmd_check, "run the lemma and theorem suite"),
    ):
        sp = sub.add_parser(verb, help=help_)
        sp.add_argument("file", nargs="?")
        sp.set_defaults(func=fn)

    e = sub.add_parser("export", help="DOT rendering")
    e.add_argument("file", nargs="?")
    e.add_argument("--format", choices=["dot"], default="dot")
    e.add_argument("--what", choices=["faceposet", "supports", "adjacency", "graph"], default="faceposet")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Failure as exc:
        _report(exc.payload)
        print(f"lrb: {exc.payload.get('reason')}", file=sys.stderr)
        return EXIT_FAIL
    except InputError as exc:
        print(f"lrb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LrbError as exc:
        _report({"ok": False, "reason": str(exc)})
        print(f"lrb: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
