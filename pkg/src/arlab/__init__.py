"""Anti-Ramsey numbers of the linear forests kP3 ∪ tP2.

Formula catalog, extremal colorings, rainbow-copy detection, an inductive
witness finder and an exact oracle for small complete graphs.
"""

from .catalog import FormulaResult, consistency_report, evaluate, spanning_threshold
from .constructions import build_clique_plus_one, build_lower_bound
from .core import (
    EdgeColoring,
    ForestShape,
    RainbowWitness,
    edge_index,
    edge_pair,
    is_refinement,
    random_coloring,
    random_surjective_coloring,
    read_coloring,
    restrict,
    write_coloring,
)
from .crosscheck import run_crosscheck
from .detector import (
    count_copies,
    detect_by_enumeration,
    find_rainbow_forest,
    validate_witness,
)
from .finder import (
    extend_by_repair,
    find_constructive,
    representative_subgraph,
    select_dense_triple,
)
from .oracle import compute_ar, compute_ar_triangle

__all__ = [
    "EdgeColoring",
    "ForestShape",
    "FormulaResult",
    "RainbowWitness",
    "build_clique_plus_one",
    "build_lower_bound",
    "compute_ar",
    "compute_ar_triangle",
    "consistency_report",
    "count_copies",
    "detect_by_enumeration",
    "edge_index",
    "edge_pair",
    "evaluate",
    "extend_by_repair",
    "find_constructive",
    "find_rainbow_forest",
    "is_refinement",
    "random_coloring",
    "random_surjective_coloring",
    "read_coloring",
    "representative_subgraph",
    "restrict",
    "run_crosscheck",
    "select_dense_triple",
    "spanning_threshold",
    "validate_witness",
    "write_coloring",
]
