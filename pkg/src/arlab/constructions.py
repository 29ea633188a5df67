"""Rainbow-free extremal colorings.

The lower-bound coloring for kP3 ∪ tP2 on n = 3k + 2t vertices is a rainbow
clique on the first n − 3 vertices with every other edge sharing one extra
color.  Any spanning copy of the forest must cover the three outside vertices,
and each of them only sees the shared color, so no copy is rainbow.
"""

from __future__ import annotations

from itertools import combinations

from .core import EdgeColoring, InvalidParamsError


def build_clique_plus_one(n: int, s: int) -> EdgeColoring:
    """Rainbow K_{n-s} on vertices ``0..n-s-1``; all remaining edges share one color."""
    if not (1 <= s <= n - 2):
        raise InvalidParamsError(f"need 1 <= s <= n - 2, got n={n}, s={s}")
    clique = n - s
    colors = []
    next_color = 0
    for u, v in combinations(range(n), 2):
        if v < clique:
            colors.append(next_color)
            next_color += 1
        else:
            colors.append(-1)
    # edge (0, n-s) precedes row 1 of the clique, so after restricted-growth
    # normalization the shared color is id n-s-1, not the largest one
    return EdgeColoring(n, tuple(next_color if c < 0 else c for c in colors))


def build_lower_bound(k: int, t: int) -> EdgeColoring:
    """Extremal coloring of K_{3k+2t} with no rainbow kP3 ∪ tP2."""
    if k < 1 or t < 2:
        raise InvalidParamsError(f"need k >= 1 and t >= 2, got k={k}, t={t}")
    return build_clique_plus_one(3 * k + 2 * t, 3)
