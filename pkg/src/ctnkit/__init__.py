"""ctnkit: the complete transposition graph CT_n at desk scale.

Exact permutation arithmetic, canonical edge indexing, fixed-length
cycle enumeration with a measured 4-cycle census, auxiliary-graph
counting identities with constructive cycle lifting, even-cycle-free
subgraph search, and the density bound table, all behind a deterministic
CLI (`ctnkit` or `python -m ctnkit`).
"""

__version__ = "0.1.0"

from .auxgraphs import (
    AuxGraph,
    IdentityReport,
    TranspositionFamily,
    build_aux,
    cycles_in_aux,
    family,
    iter_aux_graphs,
    lift_cycle,
    verify_identities,
)
from .cycles import (
    CensusReport,
    CycleWitness,
    count_cycles_of_length,
    cycle_support,
    cycles_of_length,
    find_cycle_of_length,
    four_cycle_census,
    four_cycles_through_two_path,
    girth,
    support_intersection_check,
    support_size_counts,
)
from .extremal import (
    RamseyReport,
    SearchReport,
    best_local_search,
    exact_max_cycle_free,
    local_search_max,
    ramsey_experiment,
    verify_cycle_free,
)
from .graph import (
    SubgraphMask,
    TranspositionGraph,
    degree_sequence,
    load_mask,
    mask_from_dict,
    mask_to_dict,
    save_mask,
    subgraph_support,
    transposition_graph,
    write_degree_csv,
)
from .perms import Permutation, Transposition, all_transpositions, compose
from .stats import (
    BoundReport,
    ChiVector,
    PathCompletionReport,
    bound_envelope,
    chi_vector,
    classify_intersection,
    four_cycle_class_counts,
    path_completion_stats,
)

__all__ = [
    "AuxGraph",
    "BoundReport",
    "CensusReport",
    "ChiVector",
    "CycleWitness",
    "IdentityReport",
    "PathCompletionReport",
    "Permutation",
    "RamseyReport",
    "SearchReport",
    "SubgraphMask",
    "Transposition",
    "TranspositionFamily",
    "TranspositionGraph",
    "all_transpositions",
    "best_local_search",
    "bound_envelope",
    "build_aux",
    "chi_vector",
    "classify_intersection",
    "compose",
    "count_cycles_of_length",
    "cycle_support",
    "cycles_in_aux",
    "cycles_of_length",
    "degree_sequence",
    "exact_max_cycle_free",
    "family",
    "find_cycle_of_length",
    "four_cycle_census",
    "four_cycle_class_counts",
    "four_cycles_through_two_path",
    "girth",
    "iter_aux_graphs",
    "lift_cycle",
    "load_mask",
    "local_search_max",
    "mask_from_dict",
    "mask_to_dict",
    "path_completion_stats",
    "ramsey_experiment",
    "save_mask",
    "subgraph_support",
    "support_intersection_check",
    "support_size_counts",
    "transposition_graph",
    "verify_cycle_free",
    "verify_identities",
    "write_degree_csv",
]
