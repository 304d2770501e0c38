"""Generalized Schur numbers S(r; k_1, ..., k_r): bounds, witness colorings,
the Ramsey difference embedding, and SAT-based exact values."""

from .bounds import (
    best_bounds,
    conjecture_values,
    iterated_lower_bound,
    product_lower_bound,
    ramsey_upper_bound,
    robertson_schaal_exact,
    schur_classic_bounds,
    step_lower_bound,
    two_color_corollary_bound,
    znam_diagonal_lb,
)
from .constructions import (
    EdgeColoring,
    case1_coloring,
    case2_coloring,
    clique_to_solution,
    difference_edge_coloring,
    find_mono_clique,
)
from .core import (
    EXCEEDS_CAP,
    BoundReport,
    Coloring,
    ProblemSpec,
    SolutionTuple,
    brute_force_value,
    enumerate_tuples,
    find_mono_solution,
    is_solution,
    verify_valid,
)
from .search import check_conjectured_value, reproduce_table, search_exact

__version__ = "0.1.0"
