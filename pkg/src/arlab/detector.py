"""Rainbow kP3 ∪ tP2 detection in edge-colored complete graphs.

Two independent routes answer the same question:

* :func:`find_rainbow_forest` is a backtracking search that places P3s and
  then P2s in increasing canonical order, pruning on repeated colors, on
  uncoverable vertices and on color scarcity.
* :func:`detect_by_enumeration` lists every labeled copy of the forest and
  tests each one with vectorized numpy, for n <= 10.

Both return the lexicographically least rainbow copy under
:attr:`RainbowWitness.key`, so their witnesses can be compared directly.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .core import (
    EdgeColoring,
    ForestShape,
    RainbowWitness,
    edge_index,
    normalize_edge,
)

ORACLE_MAX_N = 10


class InfeasibleShapeError(ValueError):
    """The forest needs more vertices than the host graph has."""


class OracleScaleError(ValueError):
    pass


@dataclass(frozen=True)
class DetectionOutcome:
    found: bool
    witness: RainbowWitness | None
    nodes_explored: int
    complete: bool

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "complete": self.complete,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.to_dict() if self.witness else None,
        }


class _BudgetHit(Exception):
    pass


def color_matrix(
    c: EdgeColoring,
    forbidden_colors: Iterable[int] = (),
    edge_pool: Iterable[tuple[int, int]] | None = None,
) -> list[list[int]]:
    """Color lookup with -1 marking edges the search may not use."""
    banned = set(forbidden_colors)
    mat = [list(row) for row in c.matrix]
    allowed = None if edge_pool is None else {normalize_edge(*e) for e in edge_pool}
    for u in range(c.n):
        row = mat[u]
        for v in range(c.n):
            if u == v:
                continue
            if row[v] in banned or (allowed is not None and (min(u, v), max(u, v)) not in allowed):
                row[v] = -1
    return mat


class _ForestSearch:
    """Depth-first search for the least rainbow kP3 ∪ tP2 inside ``vertices``."""

    def __init__(self, mat: Sequence[Sequence[int]], vertices: Sequence[int], k: int, t: int):
        self.mat = mat
        self.vertices = sorted(vertices)
        self.k = k
        self.t = t
        self.spanning = 3 * k + 2 * t == len(self.vertices)
        self.nodes = 0
        self.budget: int | None = None
        self.used: set[int] = set()
        self.colors: set[int] = set()
        self.p3s: list[tuple[int, int, int]] = []
        self.p2s: list[tuple[int, int]] = []

    # -- candidate generation ---------------------------------------------

    def p3_candidates(self, after: int):
        mat, used, colors = self.mat, self.used, self.colors
        free = [v for v in self.vertices if v not in used]
        for a in free:
            if a <= after:
                continue
            row_a = mat[a]
            for b in free:
                cab = row_a[b]
                if b == a or cab < 0 or cab in colors:
                    continue
                row_b = mat[b]
                for c in free:
                    if c <= a or c == b:
                        continue
                    cbc = row_b[c]
                    if cbc < 0 or cbc == cab or cbc in colors:
                        continue
                    yield (a, b, c), cab, cbc

    def p2_candidates(self, after: int):
        mat, used, colors = self.mat, self.used, self.colors
        free = [v for v in self.vertices if v not in used]
        for i, u in enumerate(free):
            if u <= after:
                continue
            row = mat[u]
            for v in free[i + 1 :]:
                cuv = row[v]
                if cuv >= 0 and cuv not in colors:
                    yield (u, v), cuv
            if self.spanning:
                # the least uncovered vertex must start the next P2
                return

    # -- pruning ------------------------------------------------------------

    def hopeless(self, k_left: int, t_left: int) -> bool:
        mat, used, colors = self.mat, self.used, self.colors
        free = [v for v in self.vertices if v not in used]
        available: set[int] = set()
        single: dict[int, int] = {}
        need = 2 * k_left + t_left
        for v in free:
            row = mat[v]
            seen = {row[w] for w in free if w != v} - colors
            seen.discard(-1)
            if self.spanning:
                if not seen:
                    return True
                if len(seen) == 1:
                    (only,) = seen
                    # one edge of color `only` covers at most two such vertices
                    single[only] = single.get(only, 0) + 1
                    if single[only] > 2:
                        return True
            available |= seen
        return len(available) < need

    # -- search -------------------------------------------------------------

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetHit

    def dfs(self, k_left: int, t_left: int) -> bool:
        self.tick()
        if k_left == 0 and t_left == 0:
            return True
        if self.hopeless(k_left, t_left):
            return False
        if k_left:
            after = self.p3s[-1][0] if self.p3s else -1
            for cand in list(self.p3_candidates(after)):
                if self.try_p3(cand, k_left, t_left):
                    return True
            return False
        after = self.p2s[-1][0] if self.p2s else -1
        for cand in list(self.p2_candidates(after)):
            if self.try_p2(cand, t_left):
                return True
        return False

    def try_p3(self, cand, k_left: int, t_left: int) -> bool:
        (a, b, c), c1, c2 = cand
        self.used.update((a, b, c))
        self.colors.update((c1, c2))
        self.p3s.append((a, b, c))
        if self.dfs(k_left - 1, t_left):
            return True
        self.p3s.pop()
        self.colors.difference_update((c1, c2))
        self.used.difference_update((a, b, c))
        return False

    def try_p2(self, cand, t_left: int) -> bool:
        (u, v), cuv = cand
        self.used.update((u, v))
        self.colors.add(cuv)
        self.p2s.append((u, v))
        if self.dfs(0, t_left - 1):
            return True
        self.p2s.pop()
        self.colors.discard(cuv)
        self.used.difference_update((u, v))
        return False

    def root_candidates(self) -> list:
        if self.k:
            return list(self.p3_candidates(-1))
        return list(self.p2_candidates(-1))

    def solve_from(self, cand, budget: int | None) -> tuple[RainbowWitness | None, int, bool]:
        """Search the subtree under one root choice; returns (witness, nodes, complete)."""
        self.budget = budget
        self.nodes = 0
        try:
            if self.k:
                ok = self.try_p3(cand, self.k, self.t)
            else:
                ok = self.try_p2(cand, self.t)
        except _BudgetHit:
            return None, self.nodes, False
        if ok:
            return RainbowWitness(tuple(self.p3s), tuple(self.p2s)), self.nodes, True
        return None, self.nodes, True


def _solve_region(
    mat: Sequence[Sequence[int]],
    vertices: Sequence[int],
    shape: ForestShape,
    budget: int | None = None,
    threads: int = 1,
) -> DetectionOutcome:
    """Least rainbow copy of ``shape`` on ``vertices`` using edges with ``mat >= 0``.

    The root level fans out over the first component; subtrees are merged in
    candidate order so the witness and the node count match a sequential run
    whatever the thread count.
    """
    if shape.vertex_demand > len(vertices):
        raise InfeasibleShapeError(
            f"{shape} needs {shape.vertex_demand} vertices, region has {len(vertices)}"
        )
    root = _ForestSearch(mat, vertices, shape.k, shape.t)
    root.tick()
    if root.hopeless(shape.k, shape.t):
        return DetectionOutcome(False, None, root.nodes, True)
    cands = root.root_candidates()

    def run(cand):
        return _ForestSearch(mat, vertices, shape.k, shape.t).solve_from(cand, budget)

    nodes = root.nodes
    if threads > 1 and len(cands) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(run, cands)
            return _merge(results, nodes, budget)
    return _merge(map(run, cands), nodes, budget)


def _merge(results, nodes: int, budget: int | None) -> DetectionOutcome:
    for witness, sub_nodes, complete in results:
        if budget is not None and (not complete or nodes + sub_nodes > budget):
            return DetectionOutcome(False, None, budget, False)
        nodes += sub_nodes
        if witness is not None:
            return DetectionOutcome(True, witness, nodes, True)
    return DetectionOutcome(False, None, nodes, True)


def find_rainbow_forest(
    c: EdgeColoring,
    shape: ForestShape,
    budget: int | None = None,
    threads: int = 1,
) -> DetectionOutcome:
    """Decide whether ``c`` contains a rainbow kP3 ∪ tP2.

    ``budget`` caps the number of search nodes; when it is hit the outcome has
    ``complete=False`` and ``found=False`` means "unknown", not "absent".
    """
    if shape.vertex_demand > c.n:
        raise InfeasibleShapeError(f"{shape} needs {shape.vertex_demand} vertices, K_{c.n} has {c.n}")
    return _solve_region(c.matrix, range(c.n), shape, budget=budget, threads=threads)


# -- enumeration oracle ---------------------------------------------------------


def _check_oracle_scale(n: int) -> None:
    if n > ORACLE_MAX_N:
        raise OracleScaleError(f"copy enumeration is limited to n <= {ORACLE_MAX_N}, got {n}")


@lru_cache(maxsize=None)
def enumerate_copies(n: int, shape: ForestShape) -> tuple[RainbowWitness, ...]:
    """Every labeled copy of ``shape`` in K_n, sorted by canonical key."""
    _check_oracle_scale(n)
    if shape.vertex_demand > n:
        raise InfeasibleShapeError(f"{shape} needs {shape.vertex_demand} vertices, K_{n} has {n}")
    k, t = shape.k, shape.t
    seen = set()
    for seq in permutations(range(n), shape.vertex_demand):
        p3s = tuple(seq[3 * i : 3 * i + 3] for i in range(k))
        p2s = tuple(seq[3 * k + 2 * j : 3 * k + 2 * j + 2] for j in range(t))
        seen.add(RainbowWitness(p3s, p2s))
    return tuple(sorted(seen, key=lambda w: w.key))


@lru_cache(maxsize=None)
def copy_edge_table(n: int, shape: ForestShape) -> np.ndarray:
    """Edge indices of every copy, one row per copy in canonical order."""
    rows = [[edge_index(u, v, n) for u, v in w.edges()] for w in enumerate_copies(n, shape)]
    table = np.asarray(rows, dtype=np.int64).reshape(len(rows), shape.edge_demand)
    table.setflags(write=False)
    return table


def count_copies(n: int, shape: ForestShape) -> int:
    return len(enumerate_copies(n, shape))


def closed_copy_count(n: int, shape: ForestShape) -> int:
    """n! / ((n - 3k - 2t)! 2^k 2^t k! t!)"""
    k, t = shape.k, shape.t
    return factorial(n) // (
        factorial(n - shape.vertex_demand) * 2**k * 2**t * factorial(k) * factorial(t)
    )


def rainbow_mask(c: EdgeColoring, shape: ForestShape) -> np.ndarray:
    """Boolean mask over :func:`enumerate_copies` marking the rainbow copies."""
    table = copy_edge_table(c.n, shape)
    cols = np.sort(c.array[table], axis=1)
    if cols.shape[1] < 2:
        return np.ones(len(cols), dtype=bool)
    return np.all(cols[:, 1:] != cols[:, :-1], axis=1)


def detect_by_enumeration(c: EdgeColoring, shape: ForestShape) -> DetectionOutcome:
    _check_oracle_scale(c.n)
    mask = rainbow_mask(c, shape)
    if not mask.any():
        return DetectionOutcome(False, None, len(mask), True)
    first = int(np.argmax(mask))
    return DetectionOutcome(True, enumerate_copies(c.n, shape)[first], first + 1, True)


# -- witness validation ---------------------------------------------------------


def witness_problem(c: EdgeColoring, w: RainbowWitness, shape: ForestShape) -> str | None:
    """Why ``w`` is not a rainbow copy of ``shape`` under ``c``; None if it is."""
    if len(w.p3s) != shape.k or len(w.p2s) != shape.t:
        return "wrong-shape"
    verts = w.vertices
    if any(not (0 <= v < c.n) for v in verts):
        return "vertex-out-of-range"
    if len(set(verts)) != len(verts):
        return "vertex-reused"
    if any(len(set(p)) != 3 for p in w.p3s):
        return "vertex-reused"
    cols = [c.color(u, v) for u, v in w.edges()]
    if len(set(cols)) != len(cols):
        return "color-repeated"
    return None


def validate_witness(c: EdgeColoring, w: RainbowWitness, shape: ForestShape) -> bool:
    return witness_problem(c, w, shape) is None
