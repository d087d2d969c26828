"""The face poset of an LRB and the meet-semilattice property.

Convention: ``x <= y`` in the face poset iff ``x*y == y``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import LrbTable, product


@dataclass(frozen=True)
class FacePoset:
    up: tuple  # up[x] = frozenset of y with x <= y
    covers: tuple
    minimals: tuple
    chambers: tuple
    facets: tuple
    rank: int
    chamber_distances: dict  # (minimal, chamber) -> cover-path length

    def leq(self, x: int, y: int) -> bool:
        return y in self.up[x]

    def down(self, y: int) -> frozenset:
        return frozenset(x for x in range(len(self.up)) if y in self.up[x])

    def upper_covers(self, x: int) -> tuple:
        return tuple(v for u, v in self.covers if u == x)

    def lower_covers(self, y: int) -> tuple:
        return tuple(u for u, v in self.covers if v == y)

    @property
    def is_graded_to_chambers(self) -> bool:
        return len(set(self.chamber_distances.values())) <= 1


def face_leq(s: LrbTable, x: int, y: int) -> bool:
    return product(s, x, y) == y


def _up_sets(s: LrbTable) -> list:
    t = s.table
    rn = range(s.size)
    return [frozenset(y for y in rn if t[x][y] == y) for x in rn]


def face_poset(s: LrbTable) -> FacePoset:
    n = s.size
    up = _up_sets(s)
    covers = []
    for x in range(n):
        strict = up[x] - {x}
        for y in sorted(strict):
            if not any(y in up[z] for z in strict if z != y):
                covers.append((x, y))
    covers.sort()
    down_count = [0] * n
    for x in range(n):
        for y in up[x]:
            down_count[y] += 1
    minimals = tuple(y for y in range(n) if down_count[y] == 1)
    chambers = tuple(x for x in range(n) if len(up[x]) == 1)
    chamber_set = set(chambers)
    facets = tuple(sorted({u for u, v in covers if v in chamber_set}))

    succ = [[] for _ in range(n)]
    for u, v in covers:
        succ[u].append(v)
    distances = {}
    for m in minimals:
        dist = {m: 0}
        queue = deque([m])
        while queue:
            u = queue.popleft()
            for v in succ[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        for c in chambers:
            if c in dist:
                distances[(m, c)] = dist[c]
    rank = min(distances.values())
    return FacePoset(
        up=tuple(up),
        covers=tuple(covers),
        minimals=minimals,
        chambers=chambers,
        facets=facets,
        rank=rank,
        chamber_distances=distances,
    )


def chambers_by_absorption(s: LrbTable) -> tuple:
    """Elements ``C`` with ``C*x == C`` for every ``x``."""
    t = s.table
    rn = range(s.size)
    return tuple(c for c in rn if all(t[c][x] == c for x in rn))


def meet(s: LrbTable, x: int, y: int, poset: Optional[FacePoset] = None) -> Optional[int]:
    """Greatest common lower bound of ``x`` and ``y``, or None."""
    up = poset.up if poset is not None else _up_sets(s)
    lower = [z for z in range(s.size) if x in up[z] and y in up[z]]
    for g in lower:
        if all(g in up[z] for z in lower):
            return g
    return None


def is_meet_semilattice(s: LrbTable, poset: Optional[FacePoset] = None) -> bool:
    up = poset.up if poset is not None else _up_sets(s)
    n = s.size
    below = [[z for z in range(n) if x in up[z]] for x in range(n)]
    for x in range(n):
        bx = set(below[x])
        for y in range(x + 1, n):
            lower = [z for z in below[y] if z in bx]
            if not any(all(g in up[z] for z in lower) for g in lower):
                return False
    return True


@dataclass(frozen=True)
class MeetCriterion:
    holds: bool
    has_least_element: bool
    cases: dict  # (x, y) -> 1, 2, 3, or None when no case applies

    @property
    def failing_pairs(self) -> list:
        return [p for p, c in self.cases.items() if c is None]


def meet_criterion(s: LrbTable, poset: Optional[FacePoset] = None, supports=None) -> MeetCriterion:
    """Decide the meet-semilattice property pair by pair through the three-case test.

    Case 1: ``xy == yx``.  Case 2: no common upper bound.  Case 3: exactly one
    common upper bound has support equal to the meet of the supports of all
    common upper bounds.  The three-case test presupposes a least element;
    without one the face poset is never a meet-semilattice, so that is
    checked first.
    """
    from .support import support_structure

    if poset is None:
        poset = face_poset(s)
    if supports is None:
        supports = support_structure(s)
    t = s.table
    n = s.size
    up = poset.up
    cases = {}
    for x in range(n):
        for y in range(n):
            if t[x][y] == t[y][x]:
                cases[(x, y)] = 1
                continue
            common = up[x] & up[y]
            if not common:
                cases[(x, y)] = 2
                continue
            target = supports.meet_of({supports.class_of[z] for z in common})
            hits = [z for z in common if supports.class_of[z] == target] if target is not None else []
            cases[(x, y)] = 3 if len(hits) == 1 else None
    has_least = len(poset.minimals) == 1
    holds = has_least and all(c is not None for c in cases.values())
    return MeetCriterion(holds=holds, has_least_element=has_least, cases=cases)
