"""Edge-fault tolerance of the strong Menger property on hypercube-like networks."""

__version__ = "0.1.0"

from .bounds import BudgetExceeded, brute_force_e_max, decompose, e_max, f
from .fault import (
    ConditionalFaultModel,
    admissible,
    extremal_witness,
    find_breaking_fault_set,
    paper_value,
    sm_lambda_r_exhaustive,
    verify_lemma_2_7,
    verify_lower_bound,
)
from .graph import (
    HLNetwork,
    are_isomorphic,
    build_crossed_cube_3,
    build_hypercube,
    build_random_hl,
    component_sizes,
    compose,
    delete_edges,
    edge_boundary,
    largest_component_size,
    min_degree,
    subcube,
)
from .menger import edge_connectivity, is_sm_lambda, max_edge_disjoint_paths, min_edge_cut
