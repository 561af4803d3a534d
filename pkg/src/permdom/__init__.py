"""Domination properties of permutation graphs.

Exact dominating-set solvers, the counting formulas for domination-number-1
and pair/efficient domination, extremal comb constructions, strong-fixed-
point sequences, and an exhaustive oracle that cross-validates all of it
over small S_n.
"""
from .constructions import (
    CombWitness,
    comb_sigma,
    comb_tau,
    connected_with_gamma,
    extend_preserving_gamma,
    is_comb,
)
from .counting import (
    CountTable,
    disconnected_count,
    efficient_dom_count,
    f1,
    g1,
    pair_count,
    pair_count_adjacent,
    pair_count_nonadjacent,
    singleton_dom_count,
)
from .domination import (
    DominationResult,
    NeighborClassification,
    all_minimum_dominating_sets,
    classify_neighbors,
    count_singleton_dominators,
    domination_number_exact,
    heuristic_dominating_set,
    is_dominating,
    is_efficient_dominating,
    quick_rule_position_ends,
    quick_rule_value_ends,
)
from .graph import (
    PermutationGraph,
    build_graph,
    closed_neighborhood,
    components,
    degree_bound_check,
    is_connected,
    is_connected_search,
)
from .oracle import (
    TallyReport,
    efficient_tally,
    full_tally,
    heuristic_quality,
    pair_tally,
)
from .perm import (
    Permutation,
    inverse,
    parse_permutation,
    reverse,
    strong_fixed_points,
)
from .sequences import (
    RationalPolynomial,
    StOffsetFamily,
    lift_families,
    lift_polynomial,
    sequence_table,
    st,
    st_closed_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
