"""Complete graphs, edge indexing and edge colorings of K_n.

Edges of K_n are ranked lexicographically over sorted pairs, so edge ``(u, v)``
with ``u < v`` lives at position :func:`edge_index` in every color array.
Colorings are stored in restricted-growth form (colors numbered by first
occurrence), which quotients out relabelings of the color set.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class InvalidEdgeError(ValueError):
    pass


class InvalidSubsetError(ValueError):
    pass


class DimensionError(ValueError):
    pass


class InvalidParamsError(ValueError):
    pass


Edge = tuple[int, int]


def num_edges(n: int) -> int:
    return comb(n, 2)


def edge_index(u: int, v: int, n: int) -> int:
    """Rank of the pair ``(u, v)`` among all sorted pairs of ``range(n)``."""
    if not (0 <= u < v < n):
        raise InvalidEdgeError(f"need 0 <= u < v < n, got u={u}, v={v}, n={n}")
    # pairs starting with 0..u-1 come first: sum_{i<u} (n-1-i)
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def edge_pair(index: int, n: int) -> Edge:
    """Inverse of :func:`edge_index`."""
    m = num_edges(n)
    if not (0 <= index < m):
        raise InvalidEdgeError(f"edge index {index} out of range for n={n}")
    u = 0
    row = n - 1
    while index >= row:
        index -= row
        u += 1
        row -= 1
    return u, u + 1 + index


def all_edges(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidEdgeError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def restricted_growth(colors: Iterable[int]) -> tuple[int, ...]:
    """Relabel colors by order of first occurrence."""
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class EdgeColoring:
    """A total coloring of the edges of K_n.

    ``colors[i]`` is the color of the edge with lexicographic rank ``i``.  The
    constructor normalizes to restricted-growth form, so two colorings with the
    same color classes compare equal.
    """

    n: int
    colors: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DimensionError(f"K_n needs n >= 2, got {self.n}")
        colors = tuple(int(c) for c in self.colors)
        if len(colors) != num_edges(self.n):
            raise DimensionError(
                f"expected {num_edges(self.n)} colors for K_{self.n}, got {len(colors)}"
            )
        object.__setattr__(self, "colors", restricted_growth(colors))

    @classmethod
    def monochromatic(cls, n: int) -> EdgeColoring:
        return cls(n, (0,) * num_edges(n))

    @classmethod
    def rainbow(cls, n: int) -> EdgeColoring:
        return cls(n, tuple(range(num_edges(n))))

    @classmethod
    def from_function(cls, n: int, color_of) -> EdgeColoring:
        return cls(n, tuple(color_of(u, v) for u, v in combinations(range(n), 2)))

    @cached_property
    def class_count(self) -> int:
        return max(self.colors) + 1

    @cached_property
    def classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {}
        for e, c in zip(combinations(range(self.n), 2), self.colors):
            out.setdefault(c, []).append(e)
        return out

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric ``n x n`` color lookup; the diagonal holds -1."""
        rows = [[-1] * self.n for _ in range(self.n)]
        for (u, v), c in zip(combinations(range(self.n), 2), self.colors):
            rows[u][v] = rows[v][u] = c
        return tuple(tuple(r) for r in rows)

    @property
    def array(self) -> np.ndarray:
        a = np.asarray(self.colors, dtype=np.int64)
        a.setflags(write=False)
        return a

    def color(self, u: int, v: int) -> int:
        u, v = normalize_edge(u, v)
        return self.colors[edge_index(u, v, self.n)]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "colors": list(self.colors)})

    def to_text(self) -> str:
        return f"{self.n}\n{' '.join(map(str, self.colors))}\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "colors": list(self.colors)}


def restrict(c: EdgeColoring, keep: Iterable[int]) -> EdgeColoring:
    """Coloring of K_|keep| induced on ``keep``, relabeled in increasing order."""
    vs = sorted(set(keep))
    if len(vs) < 2:
        raise InvalidSubsetError(f"need at least 2 vertices, got {len(vs)}")
    if vs[0] < 0 or vs[-1] >= c.n:
        raise InvalidSubsetError(f"vertices {vs} not all in range({c.n})")
    mat = c.matrix
    return EdgeColoring(len(vs), tuple(mat[u][v] for u, v in combinations(vs, 2)))


def is_refinement(fine: EdgeColoring, coarse: EdgeColoring) -> bool:
    """True iff every color class of ``fine`` sits inside one class of ``coarse``."""
    if fine.n != coarse.n:
        raise DimensionError(f"n mismatch: {fine.n} vs {coarse.n}")
    image: dict[int, int] = {}
    for f, g in zip(fine.colors, coarse.colors):
        if image.setdefault(f, g) != g:
            return False
    return True


@dataclass(frozen=True)
class ForestShape:
    """The linear forest kP3 ∪ tP2."""

    k: int
    t: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.t < 0 or self.k + self.t < 1:
            raise InvalidParamsError(f"need k, t >= 0 and k + t >= 1, got k={self.k}, t={self.t}")

    @property
    def vertex_demand(self) -> int:
        return 3 * self.k + 2 * self.t

    @property
    def edge_demand(self) -> int:
        return 2 * self.k + self.t

    def is_spanning(self, n: int) -> bool:
        return self.vertex_demand == n

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append(f"{self.k}P3" if self.k > 1 else "P3")
        if self.t:
            parts.append(f"{self.t}P2" if self.t > 1 else "P2")
        return " ∪ ".join(parts)


P3 = tuple[int, int, int]


def normalize_p3(a: int, b: int, c: int) -> P3:
    """Orient a path a-b-c so its smaller end comes first."""
    return (a, b, c) if a < c else (c, b, a)


@dataclass(frozen=True)
class RainbowWitness:
    """Vertex-disjoint P3s ``(a, b, c)`` (edges ab, bc) and P2s ``(u, v)``.

    Components are kept normalized and sorted, so equal witnesses compare equal
    and ``key`` gives the global canonical order used by every search.
    """

    p3s: tuple[P3, ...]
    p2s: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p3s", tuple(sorted(normalize_p3(*p) for p in self.p3s)))
        object.__setattr__(self, "p2s", tuple(sorted(normalize_edge(*e) for e in self.p2s)))

    @property
    def key(self) -> tuple:
        return (self.p3s, self.p2s)

    @property
    def shape(self) -> ForestShape:
        return ForestShape(len(self.p3s), len(self.p2s))

    @property
    def vertices(self) -> list[int]:
        return [v for p in self.p3s for v in p] + [v for e in self.p2s for v in e]

    def edges(self) -> list[Edge]:
        out = []
        for a, b, c in self.p3s:
            out.append(normalize_edge(a, b))
            out.append(normalize_edge(b, c))
        out.extend(self.p2s)
        return out

    def colors_used(self, c: EdgeColoring) -> set[int]:
        return {c.color(u, v) for u, v in self.edges()}

    def relabel(self, mapping: Sequence[int]) -> RainbowWitness:
        return RainbowWitness(
            tuple(tuple(mapping[v] for v in p) for p in self.p3s),
            tuple(tuple(mapping[v] for v in e) for e in self.p2s),
        )

    def to_dict(self) -> dict:
        return {"p3s": [list(p) for p in self.p3s], "p2s": [list(e) for e in self.p2s]}


# -- file format -------------------------------------------------------------


def loads_coloring(text: str) -> EdgeColoring:
    """Parse the JSON form ``{"n": .., "colors": [..]}`` or the two-line text form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return EdgeColoring(int(data["n"]), tuple(data["colors"]))
    lines = stripped.splitlines()
    if not lines:
        raise ValueError("empty coloring file")
    n = int(lines[0])
    colors = tuple(int(x) for x in " ".join(lines[1:]).split())
    return EdgeColoring(n, colors)


def read_coloring(path: str | Path) -> EdgeColoring:
    return loads_coloring(Path(path).read_text())


def write_coloring(c: EdgeColoring, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "text" if path.suffix in {".txt", ".col"} else "json"
    if fmt == "json":
        path.write_text(c.to_json() + "\n")
    elif fmt == "text":
        path.write_text(c.to_text())
    else:
        raise ValueError(f"unknown coloring format {fmt!r}")


# -- random colorings ----------------------------------------------------------


def random_coloring(n: int, num_colors: int, rng: random.Random) -> EdgeColoring:
    """Each edge gets a color drawn uniformly from ``num_colors``."""
    return EdgeColoring(n, tuple(rng.randrange(num_colors) for _ in range(num_edges(n))))


def random_surjective_coloring(n: int, num_classes: int, rng: random.Random) -> EdgeColoring:
    """Random coloring of K_n using exactly ``num_classes`` colors."""
    m = num_edges(n)
    if not (1 <= num_classes <= m):
        raise InvalidParamsError(f"num_classes must be in [1, {m}], got {num_classes}")
    order = list(range(m))
    rng.shuffle(order)
    colors = [0] * m
    for i, e in enumerate(order):
        colors[e] = i if i < num_classes else rng.randrange(num_classes)
    return EdgeColoring(n, tuple(colors))
