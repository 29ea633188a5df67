import random

import pytest

from arlab.catalog import spanning_threshold
from arlab.constructions import build_lower_bound
from arlab.core import EdgeColoring, ForestShape, RainbowWitness, random_surjective_coloring
from arlab.detector import validate_witness
from arlab.finder import (
    BelowThresholdError,
    ConflictError,
    TooSmallError,
    extend_by_repair,
    find_constructive,
    lemma_bound,
    representative_subgraph,
    run_trials,
    select_dense_triple,
)

H = RainbowWitness(((0, 1, 2),), ((3, 4), (5, 6)))
S = (7, 8, 9)


def coloring(n, special):
    """Color 0 everywhere except the listed edges."""
    return EdgeColoring.from_function(n, lambda u, v: special.get((u, v), 0))


def test_dense_triple_on_rainbow():
    sel = select_dense_triple(EdgeColoring.rainbow(10))
    assert sel.removed == (0, 1, 2)
    assert sel.retained_colors == 21
    assert sel.lemma_bound == lemma_bound(10) == 8


def test_dense_triple_avoids_the_shared_color_vertices():
    c = build_lower_bound(2, 2)  # rainbow K_7 on 0..6, 7..9 see one color
    sel = select_dense_triple(c)
    assert sel.removed == (7, 8, 9)
    assert sel.lemma_bound is None  # the construction sits exactly at the threshold


def test_lemma_bound_on_random_colorings():
    rng = random.Random(2024)
    need = spanning_threshold(2, 2) + 1
    for _ in range(200):
        c = random_surjective_coloring(10, rng.randint(need, 45), rng)
        sel = select_dense_triple(c)
        assert sel.retained_colors >= lemma_bound(10)


def test_dense_triple_too_small():
    with pytest.raises(TooSmallError):
        select_dense_triple(EdgeColoring.rainbow(4))


def test_representative_subgraph_of_construction():
    g = representative_subgraph(build_lower_bound(1, 2))
    clique = {(u, v) for u in range(4) for v in range(u + 1, 4)}
    assert g.edges == frozenset(clique | {(0, 4)})
    assert len(g) == 7


def test_representative_prefers_removed_vertices():
    g = representative_subgraph(build_lower_bound(1, 2), removed=(5, 6))
    assert (0, 5) in g.edges


def test_representative_conflict():
    with pytest.raises(ConflictError):
        representative_subgraph(EdgeColoring.monochromatic(5), must_include=[(0, 1), (2, 3)])


def test_radius_zero_extension():
    c = coloring(10, {(1, 2): 1, (3, 4): 2, (5, 6): 3, (7, 8): 4, (8, 9): 5})
    g = representative_subgraph(c, H.edges(), S)
    w, trace = extend_by_repair(c, g, H, S)
    assert trace.radius == 0 and trace.edge_pool == "G"
    assert w == RainbowWitness(((0, 1, 2), (7, 8, 9)), ((3, 4), (5, 6)))
    assert validate_witness(c, w, ForestShape(2, 2))


def test_radius_one_extension():
    # S-edges reuse the colors of both P2s, but (3,4) can trade places with S
    c = coloring(
        10,
        {(1, 2): 1, (3, 4): 2, (5, 6): 3, (7, 8): 4, (4, 8): 4, (7, 9): 2, (8, 9): 3, (3, 9): 5},
    )
    g = representative_subgraph(c, H.edges(), S)
    w, trace = extend_by_repair(c, g, H, S)
    assert trace.radius == 1
    assert trace.released == ("P2",)
    assert trace.edge_pool == "K_n"
    assert w == RainbowWitness(((0, 1, 2), (3, 9, 7)), ((4, 8), (5, 6)))
    assert validate_witness(c, w, ForestShape(2, 2))
    # radius 0 alone is not enough
    assert extend_by_repair(c, g, H, S, max_radius=0) is None


def test_below_threshold():
    with pytest.raises(BelowThresholdError):
        find_constructive(build_lower_bound(1, 2), ForestShape(1, 2))
    with pytest.raises(BelowThresholdError):
        find_constructive(EdgeColoring.rainbow(8), ForestShape(1, 2))


def test_constructive_trace_levels():
    rng = random.Random(3)
    c = random_surjective_coloring(13, spanning_threshold(3, 2) + 1, rng)
    res = find_constructive(c, ForestShape(3, 2))
    assert validate_witness(c, res.witness, ForestShape(3, 2))
    assert [tr.k for tr in res.traces] == [1, 2, 3]
    assert res.traces[0].edge_pool == "base"
    for tr in res.traces[1:]:
        assert tr.retained_colors >= lemma_bound(3 * tr.k + 4)


@pytest.mark.parametrize("k,t", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_trials_need_small_radius(k, t):
    rows = run_trials(k, t, 125, seed=99)
    assert all(r["valid"] and r["spanning"] for r in rows)
    assert sum(r["fallback"] for r in rows) == 0
    assert max(r["max_radius"] for r in rows) <= 3


def test_trials_are_deterministic():
    a = run_trials(2, 2, 20, seed=4)
    b = run_trials(2, 2, 20, seed=4, threads=4)
    assert a == b
    assert run_trials(2, 2, 20, seed=5) != a
