import random

import pytest

from arlab.constructions import build_lower_bound
from arlab.core import EdgeColoring, ForestShape, RainbowWitness, random_coloring
from arlab.detector import (
    InfeasibleShapeError,
    OracleScaleError,
    closed_copy_count,
    count_copies,
    detect_by_enumeration,
    enumerate_copies,
    find_rainbow_forest,
    validate_witness,
    witness_problem,
)

SHAPES = [ForestShape(1, 1), ForestShape(1, 2), ForestShape(0, 3), ForestShape(2, 1)]


def test_rainbow_always_has_copy():
    out = find_rainbow_forest(EdgeColoring.rainbow(7), ForestShape(1, 2))
    assert out.found and out.complete
    assert out.witness == RainbowWitness(((0, 1, 2),), ((3, 4), (5, 6)))


def test_monochromatic_never_has_copy():
    out = find_rainbow_forest(EdgeColoring.monochromatic(7), ForestShape(1, 2))
    assert not out.found and out.complete


def test_infeasible_shape():
    with pytest.raises(InfeasibleShapeError):
        find_rainbow_forest(EdgeColoring.rainbow(6), ForestShape(1, 2))


COUNT_CASES = [
    (n, s)
    for n in range(3, 9)
    for s in (ForestShape(1, 0), ForestShape(0, 2), ForestShape(1, 1), ForestShape(0, 3), ForestShape(1, 2), ForestShape(2, 1))
    if s.vertex_demand <= n
]


@pytest.mark.parametrize("n,shape", COUNT_CASES)
def test_copy_count_closed_form(n, shape):
    assert count_copies(n, shape) == closed_copy_count(n, shape)


def test_copy_count_examples():
    assert count_copies(4, ForestShape(0, 2)) == 3
    assert count_copies(3, ForestShape(1, 0)) == 3
    assert count_copies(5, ForestShape(1, 1)) == 30


def test_enumeration_scale_guard():
    with pytest.raises(OracleScaleError):
        detect_by_enumeration(EdgeColoring.rainbow(11), ForestShape(1, 1))


@pytest.mark.parametrize("n", [5, 6, 7, 8])
@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_agrees_with_enumeration(n, shape):
    rng = random.Random(f"detector:{n}:{shape}")
    if shape.vertex_demand > n:
        # both methods refuse a shape that cannot fit
        for method in (find_rainbow_forest, detect_by_enumeration):
            with pytest.raises(InfeasibleShapeError):
                method(EdgeColoring.rainbow(n), shape)
        return
    for _ in range(100):
        c = random_coloring(n, rng.randint(2, n * (n - 1) // 2), rng)
        fast = find_rainbow_forest(c, shape)
        slow = detect_by_enumeration(c, shape)
        assert fast.found == slow.found
        assert fast.witness == slow.witness
        if fast.found:
            assert validate_witness(c, fast.witness, shape)


def test_k7_ten_colors():
    rng = random.Random(7)
    shape = ForestShape(1, 2)
    for _ in range(500):
        c = random_coloring(7, 10, rng)
        assert find_rainbow_forest(c, shape).found == detect_by_enumeration(c, shape).found


def test_refinement_is_monotone():
    rng = random.Random(11)
    shape = ForestShape(1, 2)
    for _ in range(200):
        coarse = random_coloring(7, 6, rng)
        # split one class into two
        fine_colors = list(coarse.colors)
        idx = [i for i, x in enumerate(fine_colors) if x == fine_colors[0]]
        for i in idx[::2]:
            fine_colors[i] = 50
        fine = EdgeColoring(7, tuple(fine_colors))
        if find_rainbow_forest(coarse, shape).found:
            assert find_rainbow_forest(fine, shape).found


@pytest.mark.parametrize("threads", [2, 8])
def test_thread_count_does_not_change_result(threads):
    rng = random.Random(5)
    shape = ForestShape(2, 2)
    for _ in range(40):
        c = random_coloring(10, rng.randint(15, 40), rng)
        assert find_rainbow_forest(c, shape, threads=threads) == find_rainbow_forest(c, shape)


def test_budget_marks_incomplete():
    out = find_rainbow_forest(build_lower_bound(3, 3), ForestShape(3, 3), budget=1)
    # the construction is refuted at the root, so even budget 1 suffices
    assert out.complete and not out.found
    c = random_coloring(12, 30, random.Random(1))
    full = find_rainbow_forest(c, ForestShape(2, 3))
    capped = find_rainbow_forest(c, ForestShape(2, 3), budget=1)
    if full.nodes_explored > 1:
        assert not capped.complete and not capped.found


def test_validate_witness_negatives():
    c = EdgeColoring.rainbow(7)
    shape = ForestShape(1, 2)
    good = RainbowWitness(((0, 1, 2),), ((3, 4), (5, 6)))
    assert witness_problem(c, good, shape) is None
    assert witness_problem(c, RainbowWitness(((0, 1, 2),), ((3, 4),)), shape) == "wrong-shape"
    assert witness_problem(c, RainbowWitness(((0, 1, 2),), ((2, 4), (5, 6))), shape) == "vertex-reused"
    assert witness_problem(c, RainbowWitness(((0, 1, 7),), ((3, 4), (5, 6))), shape) == "vertex-out-of-range"
    mono = EdgeColoring.monochromatic(7)
    assert witness_problem(mono, good, shape) == "color-repeated"
    assert not validate_witness(mono, good, shape)


@pytest.mark.parametrize("k,t", [(1, 2), (1, 3)])
def test_construction_absent_by_both_methods(k, t):
    c = build_lower_bound(k, t)
    shape = ForestShape(k, t)
    assert not detect_by_enumeration(c, shape).found
    assert not find_rainbow_forest(c, shape).found


def test_enumeration_is_canonically_sorted():
    copies = enumerate_copies(6, ForestShape(1, 1))
    keys = [w.key for w in copies]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
