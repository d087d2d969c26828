"""Support map, support lattice and fiber labels."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import LrbTable
from .errors import StructureError
from .order import FacePoset, face_poset


def principal_ideal(s: LrbTable, x: int) -> frozenset:
    """The two-sided ideal ``S^1 x S^1``."""
    t = s.table
    rn = range(s.size)
    left = {x} | {t[a][x] for a in rn}
    return frozenset(left | {t[l][b] for l in left for b in rn})


@dataclass(frozen=True)
class SupportStructure:
    class_of: tuple  # element -> class id (smallest element of the class)
    classes: dict  # class id -> frozenset of elements
    ideals: tuple  # element -> principal ideal
    order: frozenset  # pairs (c, d) with c below d in the support lattice
    join_table: dict  # (c, d) -> class id

    @property
    def class_ids(self) -> tuple:
        return tuple(sorted(self.classes))

    def leq(self, c: int, d: int) -> bool:
        return (c, d) in self.order

    def join(self, c: int, d: int) -> int:
        return self.join_table[(c, d)]

    def support(self, x: int) -> int:
        return self.class_of[x]

    def meet_of(self, cs: Iterable[int]) -> Optional[int]:
        cs = set(cs)
        lower = [c for c in self.class_ids if all(self.leq(c, d) for d in cs)]
        for g in lower:
            if all(self.leq(c, g) for c in lower):
                return g
        return None

    @property
    def top(self) -> Optional[int]:
        tops = [c for c in self.class_ids if all(self.leq(d, c) for d in self.class_ids)]
        return tops[0] if len(tops) == 1 else None


def support_structure(s: LrbTable) -> SupportStructure:
    """Partition ``S`` by equality of principal ideals and build the support lattice.

    The order is computed twice, from ``xy == x`` and from reverse inclusion of
    ideals; a disagreement, or a join that depends on representatives, raises
    :class:`StructureError`.
    """
    n = s.size
    t = s.table
    ideals = tuple(principal_ideal(s, x) for x in range(n))
    first = {}
    class_of = []
    for x in range(n):
        class_of.append(first.setdefault(ideals[x], x))
    class_of = tuple(class_of)
    classes = {}
    for x in range(n):
        classes.setdefault(class_of[x], set()).add(x)
    classes = {c: frozenset(m) for c, m in classes.items()}

    order = set()
    for x in range(n):
        for y in range(n):
            by_product = t[x][y] == x
            by_ideal = ideals[x] <= ideals[y]
            if by_product != by_ideal:
                raise StructureError(
                    f"support order mismatch at ({x}, {y}): xy==x is {by_product}, "
                    f"ideal inclusion is {by_ideal}"
                )
            if by_product:
                order.add((class_of[y], class_of[x]))

    join_table = {}
    for x in range(n):
        for y in range(n):
            key = (class_of[x], class_of[y])
            val = class_of[t[x][y]]
            if join_table.setdefault(key, val) != val:
                raise StructureError(f"join of classes {key} is not well defined")

    ids = sorted(classes)
    for c in ids:
        for d in ids:
            j = join_table[(c, d)]
            if not ((c, j) in order and (d, j) in order):
                raise StructureError(f"join {j} of ({c}, {d}) is not an upper bound")
            for u in ids:
                if (c, u) in order and (d, u) in order and (j, u) not in order:
                    raise StructureError(f"join {j} of ({c}, {d}) is not least")

    return SupportStructure(
        class_of=class_of,
        classes=classes,
        ideals=ideals,
        order=frozenset(order),
        join_table=join_table,
    )


@dataclass(frozen=True, order=True)
class FiberLabel:
    class_id: int
    index: int

    def __str__(self):
        return f"{self.class_id}.{self.index}"


def fiber_labels(
    s: LrbTable,
    poset: Optional[FacePoset] = None,
    supports: Optional[SupportStructure] = None,
) -> dict:
    """Map each facet to ``FiberLabel(class, i)``, numbering each fiber from 1 by element index."""
    poset = poset or face_poset(s)
    supports = supports or support_structure(s)
    counters: dict = {}
    labels = {}
    for f in poset.facets:
        c = supports.class_of[f]
        counters[c] = counters.get(c, 0) + 1
        labels[f] = FiberLabel(c, counters[c])
    return labels
