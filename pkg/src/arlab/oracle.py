"""Exact anti-Ramsey numbers for tiny n by exhaustive search over colorings.

Edges are colored one at a time in lexicographic order and colors are kept in
restricted-growth form, so every partition of E(K_n) into color classes is
generated exactly once.  A branch dies as soon as the last edge of some copy of
the forbidden graph is colored and that copy is rainbow; the copy table is
indexed by each copy's largest edge so that check is a lookup.  A branch also
dies when even making every remaining edge a new color cannot beat the best
coloring found so far.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .constructions import build_lower_bound
from .core import EdgeColoring, ForestShape, InvalidParamsError, edge_index
from .detector import copy_edge_table, find_rainbow_forest

PROVEN = "proven"
LOWER_BOUND_ONLY = "lowerBoundOnly"
ORACLE_MAX_N = 7


@dataclass(frozen=True)
class ARResult:
    n: int
    pattern: str
    value: int
    status: str
    extremal_coloring: EdgeColoring
    nodes_explored: int
    leaves: int = 0

    @property
    def proven(self) -> bool:
        return self.status == PROVEN

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "value": self.value,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "extremal_coloring": self.extremal_coloring.to_dict(),
        }


class _Budget(Exception):
    pass


class ClassMaximizer:
    """Branch-and-bound over restricted-growth colorings of K_n avoiding rainbow copies.

    ``copies`` holds the forbidden subgraphs as edge-index tuples.  With
    ``prune=False`` the incumbent bound is off, so with no copies every set
    partition of the edges is visited once (``leaves`` counts them).
    """

    def __init__(
        self,
        n: int,
        copies: Sequence[Sequence[int]],
        budget: int | None = None,
        break_symmetry: bool = True,
        prune: bool = True,
    ):
        self.n = n
        self.m = comb(n, 2)
        self.by_last: list[list[tuple[int, ...]]] = [[] for _ in range(self.m)]
        # copies whose second-largest edge is i: once i is colored, only the last edge is open
        self.by_second: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(self.m)]
        for cp in copies:
            cp = tuple(sorted(cp))
            self.by_last[cp[-1]].append(cp)
            if len(cp) >= 2:
                self.by_second[cp[-2]].append((cp[:-1], cp[-1]))
        self.budget = budget
        self.prune = prune
        # edges 01, 02, 12 of the first triangle
        self.triangle = (0, 1, edge_index(1, 2, n)) if (break_symmetry and n >= 3) else None
        self.nodes = 0
        self.leaves = 0
        self.best_value = 0
        self.best: tuple[int, ...] | None = None

    def seed(self, c: EdgeColoring) -> None:
        self.best_value = c.class_count
        self.best = c.colors

    def run(self) -> bool:
        """Search; True iff the tree was exhausted within budget."""
        self.col = [0] * self.m
        self.forced = [0] * self.m
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, self.m + 100))
        try:
            self._dfs(0, 0, 0)
        except _Budget:
            return False
        finally:
            sys.setrecursionlimit(limit)
        return True

    def _dfs(self, i: int, used: int, n_forced: int) -> None:
        # n_forced: edges >= i that some copy already forces to repeat a color
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Budget
        m = self.m
        if self.prune and used + (m - i) - n_forced <= self.best_value:
            return
        if i == m:
            self.leaves += 1
            if used > self.best_value or self.best is None:
                self.best_value = used
                self.best = tuple(self.col)
            return
        col = self.col
        forced = self.forced
        checks = self.by_last[i]
        opening = self.by_second[i]
        tri = self.triangle
        rest = n_forced - (1 if forced[i] else 0)
        for c in range(used, -1, -1):
            if tri is not None and i == tri[2] and col[tri[0]] != col[tri[1]]:
                # a two-colored first triangle is rotated so its equal pair meets at vertex 0
                if c == col[tri[0]] or c == col[tri[1]]:
                    continue
            col[i] = c
            ok = True
            for cp in checks:
                if len({col[e] for e in cp}) == len(cp):
                    ok = False
                    break
            if not ok:
                continue
            newly = []
            for head, last in opening:
                if len({col[e] for e in head}) == len(head):
                    if forced[last] == 0:
                        newly.append(last)
                    forced[last] += 1
            self._dfs(i + 1, used + 1 if c == used else used, rest + len(newly))
            for head, last in opening:
                if len({col[e] for e in head}) == len(head):
                    forced[last] -= 1


def _triangle_copies(n: int) -> list[tuple[int, ...]]:
    return [
        (edge_index(a, b, n), edge_index(a, c, n), edge_index(b, c, n))
        for a, b, c in combinations(range(n), 3)
    ]


def _has_rainbow_triangle(c: EdgeColoring) -> bool:
    mat = c.matrix
    return any(
        len({mat[a][b], mat[a][d], mat[b][d]}) == 3 for a, b, d in combinations(range(c.n), 3)
    )


def _finish(
    search: ClassMaximizer, exhausted: bool, n: int, pattern: str
) -> ARResult:
    assert search.best is not None
    return ARResult(
        n=n,
        pattern=pattern,
        value=search.best_value,
        status=PROVEN if exhausted else LOWER_BOUND_ONLY,
        extremal_coloring=EdgeColoring(n, search.best),
        nodes_explored=search.nodes,
        leaves=search.leaves,
    )


def compute_ar(
    n: int,
    shape: ForestShape,
    node_budget: int | None = None,
    seed: EdgeColoring | None = None,
    break_symmetry: bool = True,
) -> ARResult:
    """AR(n, kP3 ∪ tP2) by exhaustive search.

    The search starts from ``seed`` when given; for spanning shapes with
    k >= 1 and t >= 2 it defaults to the rainbow-clique construction, so only
    colorings beating it are explored.  If ``node_budget`` runs out the result
    is the best coloring found, with status ``lowerBoundOnly``.
    """
    if shape.vertex_demand > n:
        raise InvalidParamsError(f"{shape} needs {shape.vertex_demand} vertices, got n={n}")
    if shape.edge_demand < 2:
        raise InvalidParamsError("a single edge is rainbow under every coloring")
    if n > ORACLE_MAX_N and node_budget is None:
        raise InvalidParamsError(f"exhaustion is only feasible for n <= {ORACLE_MAX_N}; pass a budget")
    if seed is None and shape.is_spanning(n) and shape.k >= 1 and shape.t >= 2:
        seed = build_lower_bound(shape.k, shape.t)
    if seed is None:
        seed = EdgeColoring.monochromatic(n)
    if find_rainbow_forest(seed, shape).found:
        raise InvalidParamsError("seed coloring contains a rainbow copy")
    search = ClassMaximizer(n, copy_edge_table(n, shape).tolist(), node_budget, break_symmetry)
    search.seed(seed)
    exhausted = search.run()
    result = _finish(search, exhausted, n, str(shape))
    assert not find_rainbow_forest(result.extremal_coloring, shape).found
    return result


def compute_ar_triangle(
    n: int, node_budget: int | None = None, break_symmetry: bool = True
) -> ARResult:
    """Largest number of colors on K_n with no rainbow triangle."""
    if not (3 <= n <= ORACLE_MAX_N):
        raise InvalidParamsError(f"need 3 <= n <= {ORACLE_MAX_N}, got {n}")
    search = ClassMaximizer(n, _triangle_copies(n), node_budget, break_symmetry)
    search.seed(EdgeColoring.monochromatic(n))
    exhausted = search.run()
    result = _finish(search, exhausted, n, "C3")
    assert not _has_rainbow_triangle(result.extremal_coloring)
    return result
