"""Graphviz DOT renderings; all node and edge lists are sorted."""
from __future__ import annotations

from .adjacency import chamber_graph
from .core import LrbTable
from .lrbgraph import ThinLrbGraph
from .order import face_poset
from .support import support_structure


def _q(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def face_poset_dot(s: LrbTable) -> str:
    poset = face_poset(s)
    lines = ["digraph faceposet {", "  rankdir=BT;"]
    lines += [f"  {x} [label={_q(s.names[x])}];" for x in range(s.size)]
    lines += [f"  {u} -> {v};" for u, v in sorted(poset.covers)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def support_lattice_dot(s: LrbTable) -> str:
    sup = support_structure(s)
    ids = sup.class_ids
    lines = ["digraph supports {", "  rankdir=BT;"]
    for c in ids:
        members = ",".join(s.names[x] for x in sorted(sup.classes[c]))
        lines.append(f"  {c} [label={_q('{' + members + '}')}];")
    for c in ids:
        for d in ids:
            if c == d or not sup.leq(c, d):
                continue
            if not any(e not in (c, d) and sup.leq(c, e) and sup.leq(e, d) for e in ids):
                lines.append(f"  {c} -> {d};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_dot(s: LrbTable) -> str:
    g = chamber_graph(s)
    lines = ["graph adjacency {"]
    lines += [f"  {c} [label={_q(s.names[c])}];" for c in g.vertices]
    for e in sorted(g.edges, key=lambda e: (e.u, e.v, e.facet)):
        lines.append(f"  {e.u} -- {e.v} [label={_q(str(e.label))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def thin_graph_dot(g: ThinLrbGraph) -> str:
    lines = ["graph thin_lrb {"]
    lines += [f"  {v} [label={_q(f'A{v + 1}')}];" for v in range(g.n)]
    for u, v, a, b in sorted(g.edges):
        lines.append(f"  {u} -- {v} [label={_q(f'{a},{b}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
