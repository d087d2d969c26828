"""Labelled chamber-adjacency graphs, MC/thin classification and the parity check."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import graphs
from .core import LrbTable
from .order import FacePoset, face_poset, is_meet_semilattice
from .support import FiberLabel, SupportStructure, fiber_labels, support_structure


@dataclass(frozen=True)
class ChamberEdge:
    u: int
    v: int
    facet: int
    label: FiberLabel


@dataclass(frozen=True)
class ChamberGraph:
    vertices: tuple  # chamber elements
    edges: tuple  # ChamberEdge, u < v, ordered by facet then endpoints
    labels: dict  # every facet -> FiberLabel, including facets with no edge

    def position(self, chamber: int) -> int:
        return self.vertices.index(chamber)

    def index_edges(self) -> list:
        pos = {c: i for i, c in enumerate(self.vertices)}
        return [(pos[e.u], pos[e.v]) for e in self.edges]

    def edge_pairs(self) -> dict:
        pairs: dict = {}
        for e in self.edges:
            pairs.setdefault((e.u, e.v), []).append(e)
        return pairs

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[e.u, e.v, e.label.class_id, e.label.index] for e in self.edges],
        }


def chamber_graph(
    s: LrbTable,
    poset: Optional[FacePoset] = None,
    supports: Optional[SupportStructure] = None,
) -> ChamberGraph:
    poset = poset or face_poset(s)
    supports = supports or support_structure(s)
    labels = fiber_labels(s, poset, supports)
    chamber_set = set(poset.chambers)
    above = {f: [] for f in poset.facets}
    for lo, hi in poset.covers:
        if lo in above and hi in chamber_set:
            above[lo].append(hi)
    edges = []
    for f in poset.facets:
        for u, v in combinations(sorted(above[f]), 2):
            edges.append(ChamberEdge(u, v, f, labels[f]))
    return ChamberGraph(vertices=poset.chambers, edges=tuple(edges), labels=labels)


@dataclass(frozen=True)
class LrbClassification:
    is_connected: bool
    is_meet: bool
    is_mc: bool
    is_thin: bool
    facet_cover_counts: dict  # facet -> number of chambers covering it
    facet_chamber_counts: dict  # facet -> number of chambers weakly above it
    thin_equivalence: Optional[bool]  # "all facets are edges and no triangles" == thin; None unless MC

    @property
    def cover_mismatches(self) -> list:
        return [f for f in self.facet_cover_counts
                if self.facet_cover_counts[f] != self.facet_chamber_counts[f]]


def _has_triangle(n: int, pairs) -> bool:
    adj = [set() for _ in range(n)]
    for u, v in pairs:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return any(adj[u] & adj[v] for u, v in pairs if u != v)


def classify(
    s: LrbTable,
    poset: Optional[FacePoset] = None,
    supports: Optional[SupportStructure] = None,
    graph: Optional[ChamberGraph] = None,
) -> LrbClassification:
    poset = poset or face_poset(s)
    supports = supports or support_structure(s)
    graph = graph or chamber_graph(s, poset, supports)
    chamber_set = set(poset.chambers)
    cover_counts = {f: 0 for f in poset.facets}
    for lo, hi in poset.covers:
        if lo in cover_counts and hi in chamber_set:
            cover_counts[lo] += 1
    chamber_counts = {f: len(poset.up[f] & chamber_set) for f in poset.facets}

    idx_edges = graph.index_edges()
    connected = graphs.is_connected(len(graph.vertices), idx_edges)
    meet = is_meet_semilattice(s, poset)
    mc = connected and meet
    thin = all(c == 2 for c in cover_counts.values())
    equivalence = None
    if mc:
        on_edges = {e.facet for e in graph.edges}
        every_facet_edge = all(f in on_edges for f in poset.facets)
        no_triangles = not _has_triangle(len(graph.vertices), idx_edges)
        equivalence = (every_facet_edge and no_triangles) == thin
    return LrbClassification(
        is_connected=connected,
        is_meet=meet,
        is_mc=mc,
        is_thin=thin,
        facet_cover_counts=cover_counts,
        facet_chamber_counts=chamber_counts,
        thin_equivalence=equivalence,
    )


def simple_cycles(g: ChamberGraph, max_len: Optional[int] = None, cap: Optional[int] = None) -> list:
    """Simple cycles of ``g``; vertices are chamber elements, edges index ``g.edges``."""
    cycles = graphs.simple_cycles(len(g.vertices), g.index_edges(), max_len=max_len, cap=cap)
    return [graphs.Cycle(tuple(g.vertices[i] for i in c.vertices), c.edges) for c in cycles]


@dataclass(frozen=True)
class ParityResult:
    ok: bool
    reason: Optional[str] = None
    support_class: Optional[int] = None
    witness: Optional[graphs.Cycle] = None  # vertices are chamber elements


def class_counts(g: ChamberGraph, cycle: graphs.Cycle) -> dict:
    counts: dict = {}
    for i in cycle.edges:
        c = g.edges[i].label.class_id
        counts[c] = counts.get(c, 0) + 1
    return counts


def support_parity_ok(g: ChamberGraph) -> ParityResult:
    """Each fiber label on exactly one edge, and even per-class counts on every cycle.

    Evenness is tested on the fundamental cycles of a spanning forest: cycle
    parity vectors form a GF(2) space, so the basis decides every simple cycle.
    """
    seen: dict = {}
    for e in g.edges:
        seen[e.facet] = seen.get(e.facet, 0) + 1
    for f, label in sorted(g.labels.items()):
        if seen.get(f, 0) != 1:
            return ParityResult(False, f"label {label} appears on {seen.get(f, 0)} edges",
                                label.class_id)
    odd = _odd_basis_cycle(g)
    if odd is not None:
        cyc, c, k = odd
        witness = graphs.Cycle(tuple(g.vertices[i] for i in cyc.vertices), cyc.edges)
        return ParityResult(False, f"cycle has {k} edges of class {c}", c, witness)
    return ParityResult(True)


def _odd_basis_cycle(g: ChamberGraph):
    for cyc in graphs.fundamental_cycles(len(g.vertices), g.index_edges()):
        for c, k in sorted(class_counts(g, cyc).items()):
            if k % 2:
                return cyc, c, k
    return None


def basis_parity_even(g: ChamberGraph) -> bool:
    """Per-class evenness on every cycle, decided on a fundamental cycle basis."""
    return _odd_basis_cycle(g) is None


def exhaustive_parity_ok(g: ChamberGraph, cap: Optional[int] = None) -> bool:
    """Per-class evenness over every enumerated simple cycle (oracle)."""
    for cyc in simple_cycles(g, cap=cap):
        if any(k % 2 for k in class_counts(g, cyc).values()):
            return False
    return True
