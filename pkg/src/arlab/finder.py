"""Witness construction by induction on the number of P3 components.

For n = 3k + 2t and a coloring with more than the extremal number of colors,
:func:`find_constructive` removes the three vertices whose deletion keeps the
most colors, finds a rainbow (k−1)P3 ∪ tP2 on the rest recursively, and then
extends it by releasing a few inherited components and re-searching the freed
vertices together with the removed triple.  The base case k = 1 is the He–Jin
theorem, which is applied through the complete detector.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .catalog import spanning_threshold
from .core import (
    Edge,
    EdgeColoring,
    ForestShape,
    InvalidParamsError,
    RainbowWitness,
    normalize_edge,
    restrict,
)
from .detector import (
    _solve_region,
    color_matrix,
    find_rainbow_forest,
    validate_witness,
)

DEFAULT_MAX_RADIUS = 3


class TooSmallError(ValueError):
    pass


class BelowThresholdError(ValueError):
    """The coloring does not have more colors than the extremal number."""


class ConflictError(ValueError):
    pass


class LemmaBoundViolation(AssertionError):
    """Dense-triple selection kept fewer colors than the lemma guarantees."""


@dataclass(frozen=True)
class DenseTripleSelection:
    removed: tuple[int, int, int]
    retained_colors: int
    lemma_bound: int | None = None


@dataclass(frozen=True)
class RepresentativeSubgraph:
    edges: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class RepairTrace:
    """How one induction level extended the inherited forest.

    ``released`` names the types ("P3"/"P2") of the inherited components that
    were re-searched; ``edge_pool`` is ``"G"`` when the representative subgraph
    sufficed and ``"K_n"`` when the rebuilt region needed any edge of K_n.
    """

    k: int
    retained: tuple
    region: tuple[int, ...]
    radius: int
    released: tuple[str, ...] = ()
    edge_pool: str = "G"
    removed: tuple[int, ...] = ()
    retained_colors: int | None = None
    fallback: bool = False

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "removed": list(self.removed),
            "retained_colors": self.retained_colors,
            "radius": self.radius,
            "released": list(self.released),
            "edge_pool": self.edge_pool,
            "region": list(self.region),
            "retained": [list(p) for p in self.retained],
            "fallback": self.fallback,
        }


@dataclass(frozen=True)
class ConstructiveResult:
    witness: RainbowWitness
    traces: tuple[RepairTrace, ...] = field(default=())

    @property
    def fallback_used(self) -> int:
        return sum(tr.fallback for tr in self.traces)

    @property
    def max_radius(self) -> int:
        return max((tr.radius for tr in self.traces), default=0)

    def to_dict(self) -> dict:
        return {"witness": self.witness.to_dict(), "levels": [tr.to_dict() for tr in self.traces]}


def _admissible_spanning(n: int) -> bool:
    """Whether n = 3k + 2t for some k >= 1, t >= 2."""
    return any((n - 3 * k) >= 4 and (n - 3 * k) % 2 == 0 for k in range(1, n // 3 + 1))


def lemma_bound(n: int) -> int:
    """½(n−6)(n−7) + 2, with n = 3k + 2t."""
    return (n - 6) * (n - 7) // 2 + 2


def retained_color_counts(c: EdgeColoring) -> tuple[list[tuple[int, int, int]], np.ndarray]:
    """Colors kept by K_n minus each triple, triples in lexicographic order."""
    n = c.n
    triples = list(combinations(range(n), 3))
    ind = np.zeros((len(triples), n), dtype=bool)
    for i, tr in enumerate(triples):
        ind[i, list(tr)] = True
    us, vs = np.triu_indices(n, k=1)
    kept = ~(ind[:, us] | ind[:, vs])
    onehot = np.zeros((len(us), c.class_count), dtype=np.int64)
    onehot[np.arange(len(us)), c.array] = 1
    counts = (kept.astype(np.int64) @ onehot > 0).sum(axis=1)
    return triples, counts


def select_dense_triple(c: EdgeColoring) -> DenseTripleSelection:
    """Remove the triple whose deletion keeps the most colors (least triple on ties).

    When n = 3k + 2t with k >= 1, t >= 2 and the coloring has more colors than
    the extremal number, the kept count must reach ½(n−6)(n−7) + 2; falling
    short raises :class:`LemmaBoundViolation`.
    """
    if c.n < 5:
        raise TooSmallError(f"need n >= 5, got {c.n}")
    triples, counts = retained_color_counts(c)
    best = int(np.argmax(counts))
    retained = int(counts[best])
    bound = None
    n = c.n
    if _admissible_spanning(n) and c.class_count >= (n - 3) * (n - 4) // 2 + 2:
        bound = lemma_bound(n)
        if retained < bound:
            raise LemmaBoundViolation(
                f"best triple {triples[best]} keeps {retained} colors, bound is {bound}"
            )
    return DenseTripleSelection(triples[best], retained, bound)


def representative_subgraph(
    c: EdgeColoring,
    must_include: frozenset[Edge] | set[Edge] | list[Edge] = (),
    removed: tuple[int, ...] | set[int] = (),
) -> RepresentativeSubgraph:
    """One edge per color class, containing ``must_include``.

    Classes not hit by ``must_include`` take their least edge touching
    ``removed`` if there is one, else their least edge.
    """
    forced: dict[int, Edge] = {}
    for u, v in must_include:
        e = normalize_edge(u, v)
        col = c.color(*e)
        if col in forced and forced[col] != e:
            raise ConflictError(f"edges {forced[col]} and {e} share color {col}")
        forced[col] = e
    near = set(removed)
    chosen = []
    for col, members in sorted(c.classes.items()):
        if col in forced:
            chosen.append(forced[col])
            continue
        touching = [e for e in members if e[0] in near or e[1] in near]
        chosen.append(touching[0] if touching else members[0])
    return RepresentativeSubgraph(frozenset(chosen))


def _components(h: RainbowWitness) -> list[tuple]:
    return list(h.p3s) + list(h.p2s)


def _component_edges(comp: tuple) -> list[Edge]:
    if len(comp) == 3:
        a, b, cc = comp
        return [normalize_edge(a, b), normalize_edge(b, cc)]
    return [normalize_edge(*comp)]


def _try_release(c, g_edges, comps, removed, released_idx, threads):
    released = [comps[i] for i in released_idx]
    retained = [comp for i, comp in enumerate(comps) if i not in set(released_idx)]
    region = sorted(set(removed).union(v for comp in released for v in comp))
    banned = {c.color(*e) for comp in retained for e in _component_edges(comp)}
    shape = ForestShape(1 + sum(len(p) == 3 for p in released), sum(len(p) == 2 for p in released))
    for pool_name, pool in (("G", g_edges), ("K_n", None)):
        mat = color_matrix(c, banned, pool)
        out = _solve_region(mat, region, shape, threads=threads)
        if out.found:
            w = out.witness
            merged = RainbowWitness(
                tuple(p for p in retained if len(p) == 3) + w.p3s,
                tuple(p for p in retained if len(p) == 2) + w.p2s,
            )
            kinds = tuple("P3" if len(p) == 3 else "P2" for p in released)
            return merged, tuple(retained), tuple(region), kinds, pool_name
    return None


def extend_by_repair(
    c: EdgeColoring,
    g: RepresentativeSubgraph,
    h: RainbowWitness,
    removed: tuple[int, int, int],
    max_radius: int = DEFAULT_MAX_RADIUS,
    threads: int = 1,
    min_radius: int = 0,
) -> tuple[RainbowWitness, RepairTrace] | None:
    """Grow ``h`` by one P3 using ``removed`` and at most ``max_radius`` released components.

    For each radius r, every set of r components of ``h`` is released in order;
    the released vertices plus ``removed`` are re-searched for the matching
    forest, first on edges of ``g`` and then on all edges of K_n, avoiding the
    colors of the components that stay.  The first success is returned.
    """
    if max_radius < 0:
        raise InvalidParamsError("max_radius must be >= 0")
    comps = _components(h)
    for radius in range(min_radius, min(max_radius, len(comps)) + 1):
        for idx in combinations(range(len(comps)), radius):
            hit = _try_release(c, g.edges, comps, removed, idx, threads)
            if hit is None:
                continue
            merged, retained, region, kinds, pool = hit
            trace = RepairTrace(
                k=len(merged.p3s),
                retained=retained,
                region=region,
                radius=radius,
                released=kinds,
                edge_pool=pool,
                removed=tuple(removed),
            )
            return merged, trace
    return None


def find_constructive(
    c: EdgeColoring,
    shape: ForestShape,
    max_radius: int = DEFAULT_MAX_RADIUS,
    threads: int = 1,
) -> ConstructiveResult:
    """Rainbow spanning kP3 ∪ tP2 in a coloring above the extremal number.

    Returns the witness with one :class:`RepairTrace` per induction level
    (base level first).  If bounded repair fails the radius escalates to all
    inherited components, and only then does the full detector run; that last
    step is flagged with ``fallback=True``.
    """
    k, t, n = shape.k, shape.t, c.n
    if k < 1 or t < 2 or n != 3 * k + 2 * t:
        raise BelowThresholdError(f"need k >= 1, t >= 2 and n = 3k + 2t; got {shape} on K_{n}")
    need = spanning_threshold(k, t) + 1
    if c.class_count < need:
        raise BelowThresholdError(f"{c.class_count} colors; need at least {need}")

    if k == 1:
        out = find_rainbow_forest(c, shape, threads=threads)
        if not out.found:
            raise AssertionError(f"no rainbow {shape} although {c.class_count} >= {need} colors")
        trace = RepairTrace(
            k=1, retained=(), region=tuple(range(n)), radius=0, edge_pool="base"
        )
        return ConstructiveResult(out.witness, (trace,))

    sel = select_dense_triple(c)
    keep = [v for v in range(n) if v not in sel.removed]
    sub = find_constructive(restrict(c, keep), ForestShape(k - 1, t), max_radius, threads)
    h = sub.witness.relabel(keep)
    g = representative_subgraph(c, h.edges(), sel.removed)

    hit = extend_by_repair(c, g, h, sel.removed, max_radius, threads)
    if hit is None and max_radius < k - 1 + t:
        hit = extend_by_repair(c, g, h, sel.removed, k - 1 + t, threads, min_radius=max_radius + 1)
    if hit is not None:
        witness, trace = hit
        trace = _with_selection(trace, sel)
    else:
        out = find_rainbow_forest(c, shape, threads=threads)
        if not out.found:
            raise AssertionError(f"no rainbow {shape} although {c.class_count} >= {need} colors")
        witness = out.witness
        trace = RepairTrace(
            k=k,
            retained=(),
            region=tuple(range(n)),
            radius=k - 1 + t,
            edge_pool="K_n",
            removed=sel.removed,
            retained_colors=sel.retained_colors,
            fallback=True,
        )
    assert validate_witness(c, witness, shape)
    return ConstructiveResult(witness, sub.traces + (trace,))


def _with_selection(trace: RepairTrace, sel: DenseTripleSelection) -> RepairTrace:
    return RepairTrace(
        k=trace.k,
        retained=trace.retained,
        region=trace.region,
        radius=trace.radius,
        released=trace.released,
        edge_pool=trace.edge_pool,
        removed=sel.removed,
        retained_colors=sel.retained_colors,
    )


def run_trials(
    k: int,
    t: int,
    trials: int,
    seed: int,
    max_radius: int = DEFAULT_MAX_RADIUS,
    threads: int = 1,
) -> list[dict]:
    """Seeded finder runs on random colorings with exactly one color above the extremal number."""
    import random

    from .core import random_surjective_coloring

    n = 3 * k + 2 * t
    classes = spanning_threshold(k, t) + 1
    rows = []

    def one(i: int) -> dict:
        rng = random.Random(f"{seed}:{k}:{t}:{i}")
        c = random_surjective_coloring(n, classes, rng)
        res = find_constructive(c, ForestShape(k, t), max_radius=max_radius)
        return {
            "trial": i,
            "valid": validate_witness(c, res.witness, ForestShape(k, t)),
            "spanning": sorted(res.witness.vertices) == list(range(n)),
            "fallback": res.fallback_used,
            "max_radius": res.max_radius,
            "witness": res.witness.to_dict(),
        }

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(one, range(trials)))
    else:
        rows = [one(i) for i in range(trials)]
    return rows
