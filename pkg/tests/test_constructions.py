import pytest

from arlab.catalog import spanning_threshold
from arlab.constructions import build_clique_plus_one, build_lower_bound
from arlab.core import EdgeColoring, ForestShape, InvalidParamsError, restrict
from arlab.detector import detect_by_enumeration, find_rainbow_forest


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("t", range(2, 7))
def test_class_count_matches_threshold(k, t):
    assert build_lower_bound(k, t).class_count == spanning_threshold(k, t)


@pytest.mark.parametrize("n,s,classes", [(7, 3, 7), (5, 1, 7), (6, 4, 2)])
def test_clique_plus_one_examples(n, s, classes):
    assert build_clique_plus_one(n, s).class_count == classes


def test_structure():
    c = build_lower_bound(1, 2)
    assert restrict(c, range(4)) == EdgeColoring.rainbow(4)
    shared = c.color(0, 4)
    assert shared == 3  # first occurrence comes before row 1 of the clique
    for u in range(7):
        for v in range(4, 7):
            if u != v:
                assert c.color(u, v) == shared


@pytest.mark.parametrize("n,s", [(5, 0), (5, 4), (2, 1)])
def test_bad_params(n, s):
    with pytest.raises(InvalidParamsError):
        build_clique_plus_one(n, s)


def test_bad_shape():
    with pytest.raises(InvalidParamsError):
        build_lower_bound(0, 2)
    with pytest.raises(InvalidParamsError):
        build_lower_bound(1, 1)


@pytest.mark.parametrize("k,t", [(1, 2), (1, 3)])
def test_absence_by_enumeration(k, t):
    c = build_lower_bound(k, t)
    assert not detect_by_enumeration(c, ForestShape(k, t)).found


@pytest.mark.parametrize("k,t", [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)])
def test_absence_by_detector(k, t):
    out = find_rainbow_forest(build_lower_bound(k, t), ForestShape(k, t))
    assert out.complete and not out.found


def test_one_recolored_edge_creates_rainbow_copy():
    c = build_lower_bound(1, 2)
    colors = list(c.colors)
    colors[-1] = 99  # edge (5, 6)
    bumped = EdgeColoring(7, tuple(colors))
    assert bumped.class_count == 8
    assert find_rainbow_forest(bumped, ForestShape(1, 2)).found
