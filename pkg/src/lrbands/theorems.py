"""Exhaustive per-instance checks of the structural lemmas and theorems.

Each check returns a :class:`CheckResult`; ``applicable`` is False when the
instance lacks the hypotheses of the statement (e.g. not MC).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .adjacency import (
    ChamberGraph,
    LrbClassification,
    chamber_graph,
    classify,
    class_counts,
    simple_cycles,
    support_parity_ok,
)
from .core import LrbTable, validate_lrb
from .errors import CycleOverflowError
from .graphs import cycle_cap
from .order import FacePoset, chambers_by_absorption, face_poset, is_meet_semilattice, meet_criterion
from .support import SupportStructure, support_structure

MAX_VIOLATIONS = 10
ORACLE_CYCLE_CAP = 20000


@dataclass
class CheckResult:
    name: str
    applicable: bool = True
    violations: list = field(default_factory=list)
    note: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, item) -> bool:
        """Record a violation; returns False once the list is full."""
        self.violations.append(item)
        return len(self.violations) < MAX_VIOLATIONS

    def to_dict(self) -> dict:
        d = {"name": self.name, "applicable": self.applicable, "ok": self.ok,
             "violations": [list(v) if isinstance(v, tuple) else v for v in self.violations]}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Instance:
    """An LRB together with its derived structures, computed once."""

    lrb: LrbTable
    poset: FacePoset
    supports: SupportStructure
    graph: ChamberGraph
    classification: LrbClassification

    @classmethod
    def build(cls, s: LrbTable) -> "Instance":
        poset = face_poset(s)
        supports = support_structure(s)
        graph = chamber_graph(s, poset, supports)
        return cls(s, poset, supports, graph, classify(s, poset, supports, graph))

    def chambers_above(self, x: int) -> frozenset:
        return self.poset.up[x] & frozenset(self.poset.chambers)


def check_r_order(inst: Instance) -> CheckResult:
    res = CheckResult("green_r_antisymmetric")
    t = inst.lrb.table
    for x, y in combinations(range(inst.lrb.size), 2):
        if t[y][x] == x and t[x][y] == y:
            if not res.add((x, y)):
                break
    return res


def check_fleq(inst: Instance) -> CheckResult:
    res = CheckResult("lem_fleq")
    t = inst.lrb.table
    up = inst.poset.up
    rn = range(inst.lrb.size)
    for x in rn:
        for y in rn:
            xy = t[x][y]
            if y in up[xy] and y not in up[x]:
                res.add(("i", x, y))
            if xy not in up[x]:
                res.add(("ii", x, y))
            for z in rn:
                if z in up[x] and z in up[y] and z not in up[xy]:
                    if not res.add(("iii", x, y, z)):
                        return res
    return res


def check_equiv_chamber(inst: Instance) -> CheckResult:
    res = CheckResult("lem_equiv_chamber")
    a = set(inst.poset.chambers)
    b = set(chambers_by_absorption(inst.lrb))
    for x in sorted(a ^ b):
        res.add((x,))
    return res


def check_mult_support(inst: Instance) -> CheckResult:
    res = CheckResult("lem_mult_support")
    t = inst.lrb.table
    sup = inst.supports.class_of
    for c in inst.poset.chambers:
        below = inst.poset.lower_covers(c)
        for x in below:
            for y in below:
                if (t[x][y] == c) != (sup[x] != sup[y]):
                    if not res.add((x, y, c)):
                        return res
    return res


def check_support_lattice(inst: Instance) -> CheckResult:
    res = CheckResult("support_join_semilattice")
    sup = inst.supports
    t = inst.lrb.table
    ids = sup.class_ids
    for x in range(inst.lrb.size):
        for y in range(inst.lrb.size):
            if sup.join(sup.class_of[x], sup.class_of[y]) != sup.class_of[t[x][y]]:
                res.add(("supp(xy)", x, y))
            if sup.leq(sup.class_of[y], sup.class_of[x]) != (t[x][y] == x):
                res.add(("order", x, y))
    for a in ids:
        if sup.join(a, a) != a:
            res.add(("idempotent", a))
        for b in ids:
            if sup.join(a, b) != sup.join(b, a):
                res.add(("commutative", a, b))
            for c in ids:
                if sup.join(sup.join(a, b), c) != sup.join(a, sup.join(b, c)):
                    res.add(("associative", a, b, c))
    top = sup.top
    for ch in inst.poset.chambers:
        if sup.class_of[ch] != top:
            res.add(("chamber_not_top", ch))
    return res


def check_one_edge(inst: Instance) -> CheckResult:
    res = CheckResult("lem_one_edge", applicable=inst.classification.is_meet)
    if res.applicable:
        for (u, v), es in sorted(inst.graph.edge_pairs().items()):
            if len(es) > 1:
                res.add((u, v, len(es)))
    return res


def check_meet_criterion(inst: Instance) -> CheckResult:
    res = CheckResult("thm_meet_semilattice")
    brute = is_meet_semilattice(inst.lrb, inst.poset)
    crit = meet_criterion(inst.lrb, inst.poset, inst.supports)
    if brute != crit.holds:
        res.add(("brute", brute, "criterion", crit.holds))
    return res


def _edge_facets(inst: Instance) -> list:
    return sorted({e.facet for e in inst.graph.edges})


def check_diff_support(inst: Instance) -> CheckResult:
    res = CheckResult("lem_diff_support", applicable=inst.classification.is_mc)
    if not res.applicable:
        return res
    t = inst.lrb.table
    sup = inst.supports.class_of
    fs = _edge_facets(inst)
    for a in fs:
        for b in fs:
            if a == b or sup[a] == sup[b]:
                continue
            for x in sorted(inst.chambers_above(b)):
                if t[a][b] != t[a][x]:
                    if not res.add((a, b, x)):
                        return res
    return res


def check_cor_diff_support(inst: Instance) -> CheckResult:
    res = CheckResult("cor_diff_support", applicable=inst.classification.is_mc)
    if not res.applicable:
        return res
    t = inst.lrb.table
    sup = inst.supports.class_of
    edges = inst.graph.edges
    for e1 in edges:
        for e2 in edges:
            shared = {e1.u, e1.v} & {e2.u, e2.v}
            if e1 is e2 or not shared or sup[e1.facet] == sup[e2.facet]:
                continue
            a, b = e1.facet, e2.facet
            y = min(shared)
            if not (t[a][b] == t[b][a] == y):
                if not res.add((a, b, y)):
                    return res
    return res


def check_same_support_bij(inst: Instance) -> CheckResult:
    res = CheckResult("lem_same_support_bij", applicable=inst.classification.is_mc)
    if not res.applicable:
        return res
    t = inst.lrb.table
    sup = inst.supports.class_of
    fs = _edge_facets(inst)
    for a1 in fs:
        for a2 in fs:
            if sup[a1] != sup[a2]:
                continue
            src = inst.chambers_above(a1)
            dst = inst.chambers_above(a2)
            image = {t[a2][x] for x in src}
            if image != dst or any(t[a1][t[a2][x]] != x for x in src) \
                    or any(t[a2][t[a1][y]] != y for y in dst):
                if not res.add((a1, a2)):
                    return res
    return res


def check_same_support(inst: Instance) -> CheckResult:
    res = CheckResult("lem_same_support", applicable=inst.classification.is_mc)
    if not res.applicable:
        return res
    t = inst.lrb.table
    sup = inst.supports.class_of
    edges = inst.graph.edges
    for e1 in edges:
        a1 = e1.facet
        if len(inst.chambers_above(a1)) != 2:
            continue
        z, w = e1.u, e1.v
        for e2 in edges:
            a2 = e2.facet
            if e2 is e1 or sup[a1] != sup[a2]:
                continue
            x, y = e2.u, e2.v
            first = t[a1][x] == w and t[a1][y] == z and t[a2][w] == x and t[a2][z] == y
            second = t[a1][x] == z and t[a1][y] == w and t[a2][w] == y and t[a2][z] == x
            if first == second:
                if not res.add((a1, a2)):
                    return res
    return res


def _triangles(g: ChamberGraph) -> list:
    return [c for c in simple_cycles(g, max_len=3) if len(c) == 3]


def check_no_cycle_exactly_once(inst: Instance) -> CheckResult:
    res = CheckResult("cor_no_cycle_implies_exactly_once", applicable=inst.classification.is_mc)
    if not res.applicable:
        return res
    g = inst.graph
    on_triangle = {g.edges[i].facet for c in _triangles(g) for i in c.edges}
    counts: dict = {}
    for e in g.edges:
        counts[e.facet] = counts.get(e.facet, 0) + 1
    for f, k in sorted(counts.items()):
        if f not in on_triangle and k != 1:
            res.add((f, k))
    return res


def check_thin_mc(inst: Instance) -> CheckResult:
    res = CheckResult("lem_thin_mc_lrb", applicable=inst.classification.is_mc)
    if res.applicable and not inst.classification.thin_equivalence:
        res.add(("thin", inst.classification.is_thin))
    return res


def check_min_cycles(inst: Instance) -> CheckResult:
    """Minimal cycles through two edges repeat a label only as an all-``c`` triangle or square."""
    res = CheckResult("lem_mincyc", applicable=inst.classification.is_mc)
    if not res.applicable:
        return res
    g = inst.graph
    try:
        cycles = simple_cycles(g, cap=cycle_cap(ORACLE_CYCLE_CAP))
    except CycleOverflowError:
        res.applicable = False
        res.note = "cycle enumeration exceeded cap"
        return res
    best: dict = {}
    for c in cycles:
        es = set(c.edges)
        for p in combinations(sorted(es), 2):
            cur = best.get(p)
            if cur is None or len(c) < cur[0]:
                best[p] = (len(c), [c])
            elif len(c) == cur[0]:
                cur[1].append(c)
    for p, (_, cs) in sorted(best.items()):
        for c in cs:
            facets = [g.edges[i].facet for i in c.edges]
            if len(set(facets)) < len(facets):
                if not (len(c) in (3, 4) and len(set(facets)) == 1):
                    if not res.add((p, facets)):
                        return res
    return res


def check_parity_theorem(inst: Instance) -> CheckResult:
    cls = inst.classification
    res = CheckResult("thm_to_graph_parity", applicable=cls.is_mc and cls.is_thin)
    if res.applicable:
        pr = support_parity_ok(inst.graph)
        if not pr.ok:
            res.add((pr.reason,))
    return res


def check_parity_oracle(inst: Instance) -> CheckResult:
    """Fundamental-basis evenness agrees with enumeration of all simple cycles."""
    from .adjacency import basis_parity_even, exhaustive_parity_ok

    res = CheckResult("parity_basis_vs_enumeration")
    try:
        oracle = exhaustive_parity_ok(inst.graph, cap=cycle_cap(ORACLE_CYCLE_CAP))
    except CycleOverflowError:
        res.applicable = False
        res.note = "cycle enumeration exceeded cap"
        return res
    if basis_parity_even(inst.graph) != oracle:
        res.add(("basis", not oracle, "enumeration", oracle))
    return res


CHECKS = (
    check_r_order,
    check_fleq,
    check_equiv_chamber,
    check_mult_support,
    check_support_lattice,
    check_meet_criterion,
    check_one_edge,
    check_diff_support,
    check_cor_diff_support,
    check_same_support_bij,
    check_same_support,
    check_no_cycle_exactly_once,
    check_thin_mc,
    check_min_cycles,
    check_parity_theorem,
    check_parity_oracle,
)


def run_suite(s: LrbTable) -> list:
    """Run every check; an instance failing the LRB axioms yields a single failed result."""
    report = validate_lrb(s)
    if not report.ok:
        res = CheckResult("lrb_axioms")
        for f in report.failures():
            res.add((f["axiom"], f["witness"]))
        return [res]
    inst = Instance.build(s)
    return [check(inst) for check in CHECKS]
