"""Cycle-space utilities on small undirected multigraphs.

Vertices are ``0..n-1``; edges are ``(u, v)`` pairs addressed by position, so
parallel edges are distinct.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CycleOverflowError

DEFAULT_CYCLE_CAP = 10**6


def cycle_cap(default: int = DEFAULT_CYCLE_CAP) -> int:
    """``LRB_CYCLE_CAP`` if set, else ``default``."""
    raw = os.environ.get("LRB_CYCLE_CAP")
    return int(raw) if raw else default


@dataclass(frozen=True)
class Cycle:
    vertices: tuple  # closed walk without the repeated start vertex
    edges: tuple  # edge positions, edges[i] joins vertices[i] and vertices[i+1]

    def __len__(self):
        return len(self.edges)


def _incidence(n: int, edges: Sequence) -> list:
    inc = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append((i, v))
        if u != v:
            inc[v].append((i, u))
    return inc


def components(n: int, edges: Sequence) -> list:
    inc = _incidence(n, edges)
    seen = [False] * n
    comps = []
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        comp = [r]
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for _, w in inc[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(n: int, edges: Sequence) -> bool:
    return n > 0 and len(components(n, edges)) == 1


def simple_cycles(n: int, edges: Sequence, max_len: Optional[int] = None, cap: Optional[int] = None) -> list:
    """All simple cycles, each reported once regardless of direction.

    A pair of parallel edges is a cycle of length 2; loops are cycles of
    length 1.  Raises :class:`CycleOverflowError` past ``cap`` cycles.
    """
    cap = cycle_cap() if cap is None else cap
    inc = _incidence(n, edges)
    out = []

    def emit(cyc):
        out.append(cyc)
        if len(out) > cap:
            raise CycleOverflowError(f"more than {cap} simple cycles")

    for i, (u, v) in enumerate(edges):
        if u == v:
            emit(Cycle((u,), (i,)))

    for s in range(n):
        path_v = [s]
        path_e = []
        on_path = [False] * n
        on_path[s] = True

        def dfs(u):
            for i, w in inc[u]:
                if path_e and i == path_e[-1]:
                    continue
                if edges[i][0] == edges[i][1]:
                    continue
                if w == s:
                    if path_e and path_e[0] < i:
                        emit(Cycle(tuple(path_v), tuple(path_e) + (i,)))
                    continue
                if w < s or on_path[w]:
                    continue
                if max_len is not None and len(path_e) + 2 > max_len:
                    continue
                on_path[w] = True
                path_v.append(w)
                path_e.append(i)
                dfs(w)
                path_e.pop()
                path_v.pop()
                on_path[w] = False

        dfs(s)
    if max_len is not None:
        out = [c for c in out if len(c) <= max_len]
    return out


def simple_paths(n: int, edges: Sequence, u: int, v: int) -> list:
    """Every simple path from ``u`` to ``v`` as a tuple of edge positions."""
    if u == v:
        return [()]
    inc = _incidence(n, edges)
    out = []
    on_path = [False] * n
    on_path[u] = True
    stack_e = []

    def dfs(x):
        for i, w in inc[x]:
            if w == v:
                out.append(tuple(stack_e) + (i,))
                continue
            if on_path[w]:
                continue
            on_path[w] = True
            stack_e.append(i)
            dfs(w)
            stack_e.pop()
            on_path[w] = False

    dfs(u)
    return out


def fundamental_cycles(n: int, edges: Sequence) -> list:
    """Fundamental cycles of a BFS spanning forest, one per non-tree edge."""
    inc = _incidence(n, edges)
    parent = [None] * n  # (parent vertex, edge position)
    depth = [-1] * n
    tree = set()
    for r in range(n):
        if depth[r] != -1:
            continue
        depth[r] = 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for i, w in inc[u]:
                if depth[w] == -1:
                    depth[w] = depth[u] + 1
                    parent[w] = (u, i)
                    tree.add(i)
                    queue.append(w)
    cycles = []
    for i, (u, v) in enumerate(edges):
        if i in tree:
            continue
        left_v, left_e = [u], []
        right_v, right_e = [v], []
        a, b = u, v
        while a != b:
            if depth[a] >= depth[b]:
                p, e = parent[a]
                left_e.append(e)
                left_v.append(p)
                a = p
            else:
                p, e = parent[b]
                right_e.append(e)
                right_v.append(p)
                b = p
        # walk: u -> ... -> lca -> ... -> v -> (edge i) -> u
        verts = left_v + right_v[-2::-1]
        es = left_e + right_e[::-1] + [i]
        cycles.append(Cycle(tuple(verts), tuple(es)))
    return cycles


def parity_coloring(n: int, edges: Sequence, flips: Sequence[bool]):
    """2-colour vertices so that edge ``i`` joins different colours iff ``flips[i]``.

    Returns ``(colors, conflict)`` where ``conflict`` is the position of an
    edge that cannot be satisfied, or None.  Colours are relative to the
    smallest vertex of each component.
    """
    inc = _incidence(n, edges)
    color = [-1] * n
    conflict = None
    for r in range(n):
        if color[r] != -1:
            continue
        color[r] = 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for i, w in inc[u]:
                want = color[u] ^ int(bool(flips[i]))
                if color[w] == -1:
                    color[w] = want
                    queue.append(w)
                elif color[w] != want and conflict is None:
                    conflict = i
    return color, conflict
