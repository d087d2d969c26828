"""Example families: sign-vector semigroups, line arrangements, free LRBs, the path example."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence, Union

from .core import LrbTable
from .errors import ClosureError, InputError

SignVector = tuple  # entries in {-1, 0, 1}

_SIGN_CHARS = {"-": -1, "0": 0, "+": 1}


def sign_vector(text: Union[str, Sequence[int]]) -> SignVector:
    """Parse ``"+-0"`` or a sequence of ints into a sign vector."""
    if isinstance(text, str):
        try:
            return tuple(_SIGN_CHARS[c] for c in text)
        except KeyError as exc:
            raise InputError(f"bad sign character {exc.args[0]!r}") from None
    vec = tuple(int(v) for v in text)
    if any(v not in (-1, 0, 1) for v in vec):
        raise InputError(f"sign entries must be -1, 0 or 1: {vec}")
    return vec


def format_signs(x: SignVector) -> str:
    return "".join("-0+"[v + 1] for v in x)


def compose_signs(x: SignVector, y: SignVector) -> SignVector:
    if len(x) != len(y):
        raise InputError(f"sign vectors of lengths {len(x)} and {len(y)}")
    return tuple(a if a else b for a, b in zip(x, y))


def covector_lrb(faces: Sequence, names: Optional[Sequence[str]] = None) -> LrbTable:
    """The composition table on ``faces``; they must be distinct and closed under composition."""
    faces = [sign_vector(f) for f in faces]
    if not faces:
        raise InputError("no faces given")
    if len({len(f) for f in faces}) != 1:
        raise InputError("sign vectors have different lengths")
    index = {}
    for i, f in enumerate(faces):
        if f in index:
            raise InputError(f"duplicate face {format_signs(f)} at positions {index[f]} and {i}")
        index[f] = i
    table = []
    for x in faces:
        row = []
        for y in faces:
            z = compose_signs(x, y)
            if z not in index:
                raise ClosureError(
                    f"{format_signs(x)} o {format_signs(y)} = {format_signs(z)} is not in the face list",
                    (x, y),
                )
            row.append(index[z])
        table.append(row)
    if names is None:
        names = [format_signs(f) for f in faces]
    zero = index.get(tuple(0 for _ in faces[0]))
    return LrbTable(table, names, zero)


def composition_closure(generators: Sequence) -> list:
    """Smallest composition-closed set containing ``generators``, in discovery order."""
    out = []
    seen = set()
    for g in generators:
        g = sign_vector(g)
        if g not in seen:
            seen.add(g)
            out.append(g)
    i = 0
    while i < len(out):
        x = out[i]
        for y in list(out[: i + 1]):
            for z in (compose_signs(x, y), compose_signs(y, x)):
                if z not in seen:
                    seen.add(z)
                    out.append(z)
        i += 1
    return out


@dataclass(frozen=True)
class LineArrangement:
    """Lines through the origin of the plane, given by direction angles in radians.

    Line ``k`` has direction ``(cos t, sin t)``; its positive side is the one its
    counterclockwise normal ``(-sin t, cos t)`` points into.  Directions that
    differ by ``pi`` describe the same line with opposite sides.
    """

    directions: tuple

    def __post_init__(self):
        dirs = tuple(float(t) for t in self.directions)
        if not dirs:
            raise InputError("an arrangement needs at least one line")
        mods = [t % math.pi for t in dirs]
        for i in range(len(mods)):
            for j in range(i):
                d = abs(mods[i] - mods[j])
                if min(d, math.pi - d) < 1e-9:
                    raise InputError(f"lines {j} and {i} are parallel")
        object.__setattr__(self, "directions", dirs)

    @classmethod
    def regular(cls, m: int, offset: float = 2 * math.pi / 3) -> "LineArrangement":
        """``m`` equally spaced lines.  With the default offset and ``m = 3`` the
        sign vectors match the worked three-line example (``F0 = 0++``,
        ``F2 = --0``, ``R4 = +--``)."""
        if m < 1:
            raise InputError("m must be at least 1")
        return cls(tuple(offset + k * math.pi / m for k in range(m)))

    def __len__(self):
        return len(self.directions)


def _side(angle: float, direction: float) -> int:
    v = math.sin(angle - direction)
    return 1 if v > 0 else -1


def line_arrangement_faces(arr: Union[int, LineArrangement]) -> list:
    """``(name, sign vector)`` for every face, in the order 0, F0.., R0...

    Faces are named in counterclockwise order; ``R0`` is the sector containing
    the negative y-axis (or starting at it, if a ray lies there), ``Fi`` is the
    ray between ``Ri`` and ``R(i+1)``.  One line has only three faces.
    """
    if isinstance(arr, int):
        arr = LineArrangement.regular(arr)
    m = len(arr)
    zero = (0,) * m
    dirs = arr.directions
    if m == 1:
        t = dirs[0]
        down = _side(3 * math.pi / 2, t) if abs(math.sin(3 * math.pi / 2 - t)) > 1e-12 else 1
        return [("0", zero), ("R0", (down,)), ("R1", (-down,))]

    rays = []
    for k, t in enumerate(dirs):
        for ang in (t % (2 * math.pi), (t + math.pi) % (2 * math.pi)):
            signs = tuple(0 if j == k else _side(ang, dirs[j]) for j in range(m))
            rays.append((ang, signs))
    rays.sort()
    start = 3 * math.pi / 2
    # first ray at or after -y; R0 is the sector ending at that ray unless -y lies on a ray
    first = next((i for i, (a, _) in enumerate(rays) if a >= start - 1e-12), 0)
    on_ray = abs(rays[first][0] - start) < 1e-12
    if on_ray:
        ordered = rays[first:] + rays[:first]
        ordered = ordered[1:] + ordered[:1]
    else:
        ordered = rays[first:] + rays[:first]
    # ordered[i] is the ray ending sector i (counterclockwise)
    sectors = []
    for i in range(2 * m):
        prev = ordered[i - 1][1]
        nxt = ordered[i][1]
        sectors.append(compose_signs(prev, nxt))
    # sector i lies between ordered[i-1] and ordered[i]; Fi is the ray after Ri
    faces = [("0", zero)]
    faces += [(f"F{i}", ordered[i][1]) for i in range(2 * m)]
    faces += [(f"R{i}", sectors[i]) for i in range(2 * m)]
    return faces


def line_arrangement_lrb(arr: Union[int, LineArrangement]) -> LrbTable:
    """Face semigroup of a line arrangement: ``4m + 1`` faces for ``m >= 2``, 3 for ``m = 1``."""
    faces = line_arrangement_faces(arr)
    return covector_lrb([f for _, f in faces], [name for name, _ in faces])


MAX_FREE_LETTERS = 6


def free_words(k: int) -> list:
    letters = "abcdef"[:k]
    words = [""]
    for length in range(1, k + 1):
        words += ["".join(p) for p in permutations(letters, length)]
    return words


def free_lrb(k: int) -> LrbTable:
    """Free LRB on ``k`` letters: repetition-free words, product keeps first occurrences."""
    if not 1 <= k <= MAX_FREE_LETTERS:
        raise InputError(f"alphabet size must be in [1, {MAX_FREE_LETTERS}], got {k}")
    words = free_words(k)
    index = {w: i for i, w in enumerate(words)}

    def mul(u, v):
        return u + "".join(c for c in v if c not in u)

    table = [[index[mul(u, v)] for v in words] for u in words]
    names = ["1"] + words[1:]
    return LrbTable(table, names, 0)


def path_example(n: int) -> LrbTable:
    """The ``2n``-element LRB whose chamber graph is a path on ``n`` chambers.

    Elements: identity ``0``, facets ``F1..F(n-1)``, chambers ``C1..Cn``.
    """
    if n < 2:
        raise InputError(f"path_example needs n >= 2, got {n}")
    size = 2 * n
    F = lambda i: i  # noqa: E731  (1 <= i <= n-1)
    C = lambda j: n - 1 + j  # noqa: E731  (1 <= j <= n)
    table = [[0] * size for _ in range(size)]
    for x in range(size):
        table[0][x] = x
    for j in range(1, n + 1):
        for x in range(size):
            table[C(j)][x] = C(j)
    for i in range(1, n):
        table[F(i)][0] = F(i)
        for j in range(1, n + 1):
            table[F(i)][C(j)] = C(i) if j <= i else C(i + 1)
        for j in range(1, n):
            if j < i:
                table[F(i)][F(j)] = C(i)
            elif j == i:
                table[F(i)][F(j)] = F(i)
            else:
                table[F(i)][F(j)] = C(i + 1)
    names = ["0"] + [f"F{i}" for i in range(1, n)] + [f"C{j}" for j in range(1, n + 1)]
    return LrbTable(table, names, 0)
