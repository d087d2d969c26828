"""Finite semigroups as multiplication tables, and the left regular band axioms."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError


@dataclass(frozen=True)
class LrbTable:
    """A finite semigroup on elements ``0..size-1``; ``table[x][y]`` is ``x*y``.

    Construction checks only shape, index range and, if given, the identity
    law.  The band axioms are checked by :func:`validate_lrb`.
    """

    table: tuple
    names: tuple = None
    identity: Optional[int] = None

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n == 0:
            raise InputError("empty table")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InputError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise InputError(f"entry [{i}][{j}] = {v} out of range [0, {n})")
        object.__setattr__(self, "table", rows)
        if self.names is None:
            names = tuple(str(i) for i in range(n))
        else:
            names = tuple(str(s) for s in self.names)
            if len(names) != n:
                raise InputError(f"{len(names)} names for {n} elements")
        object.__setattr__(self, "names", names)
        if self.identity is not None:
            e = int(self.identity)
            if not 0 <= e < n:
                raise InputError(f"identity {e} out of range")
            for x in range(n):
                if rows[e][x] != x or rows[x][e] != x:
                    raise InputError(f"element {e} is not a two-sided identity (fails at {x})")
            object.__setattr__(self, "identity", e)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"no element named {name!r}") from None

    def to_dict(self) -> dict:
        d = {"names": list(self.names), "table": [list(r) for r in self.table]}
        if self.identity is not None:
            d["identity"] = self.identity
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "LrbTable":
        if not isinstance(d, dict) or "table" not in d:
            raise InputError("instance JSON needs a 'table' field")
        table = d["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise InputError("'table' must be a list of lists")
        for row in table:
            for v in row:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise InputError(f"non-integer table entry {v!r}")
        return cls(table, d.get("names"), d.get("identity"))

    @classmethod
    def from_json(cls, text: str) -> "LrbTable":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return cls.from_dict(d)


def product(s: LrbTable, x: int, y: int) -> int:
    n = s.size
    if not (0 <= x < n and 0 <= y < n):
        raise InputError(f"element index out of range: ({x}, {y}) for size {n}")
    return s.table[x][y]


@dataclass(frozen=True)
class ValidationReport:
    is_associative: bool
    associativity_witness: Optional[tuple]
    is_band: bool
    band_witness: Optional[int]
    is_left_regular: bool
    left_regular_witness: Optional[tuple]
    identity_index: Optional[int]

    @property
    def ok(self) -> bool:
        return self.is_associative and self.is_band and self.is_left_regular

    def failures(self) -> list:
        out = []
        if not self.is_associative:
            x, y, z = self.associativity_witness
            out.append({"axiom": "associativity", "witness": [x, y, z]})
        if not self.is_band:
            out.append({"axiom": "idempotency", "witness": [self.band_witness]})
        if not self.is_left_regular:
            out.append({"axiom": "left_regularity", "witness": list(self.left_regular_witness)})
        return out


def find_identity(s: LrbTable) -> Optional[int]:
    if s.identity is not None:
        return s.identity
    t = s.table
    rn = range(s.size)
    for e in rn:
        if all(t[e][x] == x and t[x][e] == x for x in rn):
            return e
    return None


def validate_lrb(s: LrbTable) -> ValidationReport:
    """Exhaustively check idempotency, associativity and ``xyx = xy``."""
    t = s.table
    rn = range(s.size)

    band_witness = next((x for x in rn if t[x][x] != x), None)

    assoc_witness = None
    for x in rn:
        tx = t[x]
        for y in rn:
            xy = tx[y]
            txy = t[xy]
            ty = t[y]
            for z in rn:
                if txy[z] != tx[ty[z]]:
                    assoc_witness = (x, y, z)
                    break
            if assoc_witness:
                break
        if assoc_witness:
            break

    lr_witness = None
    for x in rn:
        for y in rn:
            xy = t[x][y]
            if t[xy][x] != xy:
                lr_witness = (x, y)
                break
        if lr_witness:
            break

    return ValidationReport(
        is_associative=assoc_witness is None,
        associativity_witness=assoc_witness,
        is_band=band_witness is None,
        band_witness=band_witness,
        is_left_regular=lr_witness is None,
        left_regular_witness=lr_witness,
        identity_index=find_identity(s),
    )


def adjoin_identity(s: LrbTable, name: str = "0") -> LrbTable:
    """Return ``S`` if it is a monoid, else ``S^1`` with the new identity at index 0."""
    e = find_identity(s)
    if e is not None:
        if s.identity == e:
            return s
        return LrbTable(s.table, s.names, e)
    n = s.size
    if name in s.names:
        name = "1" if "1" not in s.names else f"<id:{n}>"
    rows = [list(range(n + 1))]
    for x in range(n):
        rows.append([x + 1] + [v + 1 for v in s.table[x]])
    return LrbTable(rows, (name,) + s.names, 0)


def _fingerprint(s: LrbTable, x: int) -> tuple:
    t = s.table
    rn = range(s.size)
    left_fixed = sum(1 for y in rn if t[x][y] == x)
    right_fixed = sum(1 for y in rn if t[y][x] == x)
    up = sum(1 for y in rn if t[x][y] == y)
    down = sum(1 for y in rn if t[y][x] == y)
    same_support = sum(1 for y in rn if t[x][y] == x and t[y][x] == y)
    return (left_fixed, right_fixed, up, down, same_support)


def are_isomorphic(s: LrbTable, t: LrbTable) -> Optional[list]:
    """Return ``phi`` with ``phi[x*y] == phi[x]*phi[y]``, or None if none exists.

    Backtracking over fingerprint-compatible targets; every assignment
    propagates the images of products with already-mapped elements.
    """
    n = s.size
    if t.size != n:
        return None
    fs = [_fingerprint(s, x) for x in range(n)]
    ft = [_fingerprint(t, u) for u in range(n)]
    if sorted(fs) != sorted(ft):
        return None
    cands = {x: [u for u in range(n) if ft[u] == fs[x]] for x in range(n)}
    order = sorted(range(n), key=lambda x: (len(cands[x]), x))
    st, tt = s.table, t.table
    phi = [-1] * n
    used = [False] * n
    assigned: list = []

    def push(x, u, trail):
        stack = [(x, u)]
        while stack:
            x, u = stack.pop()
            if phi[x] != -1:
                if phi[x] != u:
                    return False
                continue
            if used[u] or ft[u] != fs[x]:
                return False
            phi[x] = u
            used[u] = True
            assigned.append(x)
            trail.append(x)
            for y in list(assigned):
                v = phi[y]
                for p, q in ((st[x][y], tt[u][v]), (st[y][x], tt[v][u])):
                    if phi[p] == -1:
                        stack.append((p, q))
                    elif phi[p] != q:
                        return False
        return True

    def undo(trail):
        for x in trail:
            used[phi[x]] = False
            phi[x] = -1
        del assigned[len(assigned) - len(trail):]

    def search(k):
        while k < n and phi[order[k]] != -1:
            k += 1
        if k == n:
            return True
        x = order[k]
        for u in cands[x]:
            if used[u]:
                continue
            trail: list = []
            if push(x, u, trail) and search(k + 1):
                return True
            undo(trail)
        return False

    return list(phi) if search(0) else None


def is_homomorphism(s: LrbTable, t: LrbTable, phi: Sequence[int]) -> bool:
    rn = range(s.size)
    return all(phi[s.table[x][y]] == t.table[phi[x]][phi[y]] for x in rn for y in rn)
