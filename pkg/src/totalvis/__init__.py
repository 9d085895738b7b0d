"""Exact total mutual-visibility solver, graph products and claim checker."""

from .constructors import (
    FamilySpec,
    cartesian_product,
    corona_product,
    generate,
    join_graph,
    lexicographic_product,
)
from .domination import DominationResult, connected_domination_number, domination_number
from .errors import (
    BadParameter,
    DisconnectedGraph,
    EdgeListSyntaxError,
    Infeasible,
    NotApplicable,
    OutOfRangeVertex,
    SelfLoop,
    TooLarge,
    TotalVisError,
)
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_graph,
    diameter,
    is_connected,
    leaf_set,
    parse_edge_list,
    serialize_edge_list,
)
from .suites import SuiteReport, run_suite
from .theorems import (
    ClaimVerdict,
    check_cartesian,
    check_diameter_characterization,
    check_gamma_c_characterization,
    check_graph_claims,
    check_lexicographic,
)
from .visibility import (
    SolveResult,
    brute_force_max_tmv,
    compulsory_set,
    convex_p3_centers,
    forbidden_set,
    is_pair_visible,
    is_tmv_set,
    max_tmv,
    mu_it,
    mu_t,
    simplicial_set,
    twin_partition_of_simplicials,
)

__all__ = [
    "FamilySpec",
    "cartesian_product",
    "corona_product",
    "generate",
    "join_graph",
    "lexicographic_product",
    "DominationResult",
    "connected_domination_number",
    "domination_number",
    "BadParameter",
    "DisconnectedGraph",
    "EdgeListSyntaxError",
    "Infeasible",
    "NotApplicable",
    "OutOfRangeVertex",
    "SelfLoop",
    "TooLarge",
    "TotalVisError",
    "UNREACHABLE",
    "DistanceMatrix",
    "Graph",
    "all_pairs_distances",
    "build_graph",
    "diameter",
    "is_connected",
    "leaf_set",
    "parse_edge_list",
    "serialize_edge_list",
    "SuiteReport",
    "run_suite",
    "ClaimVerdict",
    "check_cartesian",
    "check_diameter_characterization",
    "check_gamma_c_characterization",
    "check_graph_claims",
    "check_lexicographic",
    "SolveResult",
    "brute_force_max_tmv",
    "compulsory_set",
    "convex_p3_centers",
    "forbidden_set",
    "is_pair_visible",
    "is_tmv_set",
    "max_tmv",
    "mu_it",
    "mu_t",
    "simplicial_set",
    "twin_partition_of_simplicials",
]

__version__ = "0.1.0"
