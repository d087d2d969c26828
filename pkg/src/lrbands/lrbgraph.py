"""Thin LRB graphs and their correspondence with rank-2 thin MC left regular bands."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Union

from . import graphs
from .adjacency import chamber_graph, classify
from .core import LrbTable, are_isomorphic
from .errors import InputError, PreconditionError
from .order import face_poset
from .support import support_structure


@dataclass(frozen=True)
class ThinLrbGraph:
    """Vertices ``0..n-1``; edges ``(u, v, a, b)`` with label ``(a, b)``."""

    n: int
    edges: tuple

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a natural number, got {self.n!r}")
        es = []
        for e in self.edges:
            if len(e) != 4:
                raise InputError(f"edge {e!r} must be [u, v, a, b]")
            for v in e:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise InputError(f"edge {e!r} has a non-integer entry")
            u, v, a, b = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e!r} has an endpoint outside [0, {self.n})")
            if a < 0 or b < 0:
                raise InputError(f"edge {e!r} has a negative label")
            es.append((u, v, a, b))
        object.__setattr__(self, "edges", tuple(es))

    @property
    def pairs(self) -> list:
        return [(u, v) for u, v, _, _ in self.edges]

    @property
    def label_values(self) -> list:
        return sorted({a for _, _, a, _ in self.edges})

    @cached_property
    def _colorings(self) -> dict:
        out = {}
        for a in self.label_values:
            flips = [ea == a for _, _, ea, _ in self.edges]
            out[a] = graphs.parity_coloring(self.n, self.pairs, flips)
        return out

    @cached_property
    def _component_of(self) -> list:
        comp = [0] * self.n
        for k, members in enumerate(graphs.components(self.n, self.pairs)):
            for v in members:
                comp[v] = k
        return comp

    def to_dict(self) -> dict:
        return {"vertices": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ThinLrbGraph":
        if not isinstance(d, dict) or "edges" not in d or "vertices" not in d:
            raise InputError("graph JSON needs 'vertices' and 'edges'")
        n = d["vertices"]
        if isinstance(n, list):
            n = len(n)
        edges = d["edges"]
        if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
            raise InputError("'edges' must be a list of [u, v, a, b] lists")
        return cls(n, tuple(tuple(e) for e in edges))

    @classmethod
    def from_json(cls, text: str) -> "ThinLrbGraph":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return cls.from_dict(d)

    def flipped(self, i: int) -> "ThinLrbGraph":
        u, v, a, b = self.edges[i]
        es = list(self.edges)
        es[i] = (v, u, a, b)
        return ThinLrbGraph(self.n, tuple(es))


@dataclass(frozen=True)
class GraphReport:
    ok: bool
    errors: list = field(default_factory=list)
    witness: Optional[graphs.Cycle] = None  # odd cycle for a parity failure
    witness_edges: Optional[tuple] = None  # offending edge pair for simplicity/label failures


def validate_graph(g: ThinLrbGraph) -> GraphReport:
    errors = []
    witness_edges = None
    seen_pairs: dict = {}
    seen_labels: dict = {}
    for i, (u, v, a, b) in enumerate(g.edges):
        if u == v:
            errors.append(f"edge {i} is a loop at vertex {u}")
            witness_edges = witness_edges or (i, i)
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            errors.append(f"edges {seen_pairs[key]} and {i} join the same vertices {key}")
            witness_edges = witness_edges or (seen_pairs[key], i)
        seen_pairs.setdefault(key, i)
        if (a, b) in seen_labels:
            errors.append(f"edges {seen_labels[(a, b)]} and {i} share the label ({a}, {b})")
            witness_edges = witness_edges or (seen_labels[(a, b)], i)
        seen_labels.setdefault((a, b), i)
    if g.n == 0:
        errors.append("graph has no vertices")
    elif not graphs.is_connected(g.n, g.pairs):
        errors.append("graph is not connected")
    witness = None
    odd = odd_label_cycle(g)
    if odd is not None:
        witness, a, k = odd
        errors.append(f"cycle {list(witness.vertices)} has {k} edges with first component {a}")
    return GraphReport(not errors, errors, witness, witness_edges)


def label_counts(g: ThinLrbGraph, edge_positions) -> dict:
    counts: dict = {}
    for i in edge_positions:
        a = g.edges[i][2]
        counts[a] = counts.get(a, 0) + 1
    return counts


def odd_label_cycle(g: ThinLrbGraph):
    """First fundamental cycle with an odd count of some first component, as
    ``(cycle, a, count)``, or None.  Evenness on a cycle basis is evenness on
    every cycle, since per-label parity is additive under symmetric difference."""
    for cyc in graphs.fundamental_cycles(g.n, g.pairs):
        counts = label_counts(g, cyc.edges)
        odd = sorted(a for a, k in counts.items() if k % 2)
        if odd:
            return cyc, odd[0], counts[odd[0]]
    return None


def parity_condition_holds(g: ThinLrbGraph) -> bool:
    return odd_label_cycle(g) is None


def path_label_parity(g: ThinLrbGraph, u: int, v: int, a: int) -> int:
    """Parity (0 or 1) of the number of ``a``-edges on any path from ``u`` to ``v``."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InputError(f"vertex out of range: {u}, {v}")
    if u == v:
        return 0
    if g._component_of[u] != g._component_of[v]:
        raise PreconditionError(f"vertices {u} and {v} lie in different components")
    coloring = g._colorings.get(a)
    if coloring is None:
        return 0
    colors, conflict = coloring
    if conflict is not None:
        raise PreconditionError(f"label {a} has an odd cycle through edge {conflict}; graph is invalid")
    return colors[u] ^ colors[v]


def _multiply(g: ThinLrbGraph):
    """Return ``mul(x, y)`` on element indices: 0, then vertices, then edges."""
    n = g.n

    def edge_times_vertex(k, w):
        i, j, a, _ = g.edges[k]
        return i if path_label_parity(g, j, w, a) else j

    def mul(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        if x <= n:
            return x
        k = x - n - 1
        if y <= n:
            return 1 + edge_times_vertex(k, y - 1)
        k2 = y - n - 1
        a1 = g.edges[k][2]
        i2, _, a2, _ = g.edges[k2]
        if a1 == a2:
            return x
        return 1 + edge_times_vertex(k, i2)

    return mul


def to_lrb(g: ThinLrbGraph) -> LrbTable:
    """The LRB on ``{0} + vertices + edges`` defined by the four multiplication rules.

    Edge times vertex picks the endpoint on the same side of every ``a``-cut as
    the vertex; edge times edge of another class acts like edge times either
    endpoint of the second edge; edges of one class absorb each other.
    """
    report = validate_graph(g)
    if not report.ok:
        raise PreconditionError("invalid thin LRB graph: " + "; ".join(report.errors))
    mul = _multiply(g)
    size = 1 + g.n + len(g.edges)
    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    names = ["0"] + [f"A{i + 1}" for i in range(g.n)] + [f"({a},{b})" for _, _, a, b in g.edges]
    return LrbTable(table, names, 0)


def from_lrb(s: LrbTable) -> ThinLrbGraph:
    """Chambers become vertices, facets become edges labelled ``(support class, fiber index)``."""
    poset = face_poset(s)
    supports = support_structure(s)
    cg = chamber_graph(s, poset, supports)
    cls = classify(s, poset, supports, cg)
    missing = [name for name, ok in (("connected", cls.is_connected),
                                     ("meet-semilattice", cls.is_meet),
                                     ("thin", cls.is_thin)) if not ok]
    if missing:
        raise PreconditionError("not a thin MC LRB: fails " + ", ".join(missing))
    pos = {c: i for i, c in enumerate(cg.vertices)}
    edges = tuple((pos[e.u], pos[e.v], e.label.class_id, e.label.index) for e in cg.edges)
    return ThinLrbGraph(len(cg.vertices), edges)


def graph_isomorphism(g: ThinLrbGraph, h: ThinLrbGraph) -> Optional[tuple]:
    """A vertex bijection carrying edges onto edges with a consistent bijection of
    first label components, returned as ``(vertex_map, class_map)``, or None."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    n = g.n

    def profile(gr):
        adj = [dict() for _ in range(gr.n)]
        for u, v, a, _ in gr.edges:
            adj[u][v] = a
            adj[v][u] = a
        return adj

    ga, ha = profile(g), profile(h)

    def fingerprint(gr, adj, x):
        by_class: dict = {}
        for a in adj[x].values():
            by_class[a] = by_class.get(a, 0) + 1
        return (len(adj[x]), tuple(sorted(by_class.values())))

    fg = [fingerprint(g, ga, x) for x in range(n)]
    fh = [fingerprint(h, ha, x) for x in range(n)]
    if sorted(fg) != sorted(fh):
        return None
    phi = [-1] * n
    used = [False] * n
    amap: dict = {}
    ainv: dict = {}
    # BFS order keeps each new vertex adjacent to a mapped one when possible
    order = []
    seen = set()
    for r in range(n):
        if r in seen:
            continue
        seen.add(r)
        queue = [r]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(ga[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)

    def search(k):
        if k == n:
            return True
        x = order[k]
        for u in range(n):
            if used[u] or fh[u] != fg[x]:
                continue
            added = []
            ok = True
            for y, a in ga[x].items():
                if phi[y] == -1:
                    continue
                b = ha[u].get(phi[y])
                if b is None:
                    ok = False
                    break
                if a in amap:
                    if amap[a] != b:
                        ok = False
                        break
                elif b in ainv:
                    ok = False
                    break
                else:
                    amap[a] = b
                    ainv[b] = a
                    added.append(a)
            if ok:
                phi[x] = u
                used[u] = True
                if search(k + 1):
                    return True
                phi[x] = -1
                used[u] = False
            for a in added:
                del ainv[amap.pop(a)]
        return False

    if not search(0):
        return None
    return tuple(phi), dict(amap)


def roundtrip_check(x: Union[ThinLrbGraph, LrbTable]) -> bool:
    """Graph side: ``from_lrb(to_lrb(g)) ~ g``.  LRB side (rank 2): ``to_lrb(from_lrb(S)) ~ S``."""
    if isinstance(x, ThinLrbGraph):
        back = from_lrb(to_lrb(x))
        return graph_isomorphism(x, back) is not None
    poset = face_poset(x)
    if poset.rank != 2:
        raise PreconditionError(f"LRB-side roundtrip needs rank 2, got rank {poset.rank}")
    g = from_lrb(x)
    return are_isomorphic(to_lrb(g), x) is not None
