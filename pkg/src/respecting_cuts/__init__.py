"""Cut sizes of spanning-tree-respecting cuts via subtree cut algebra."""

from .errors import (
    DEFAULT_MAX_K,
    EdgeWeightError,
    EndpointRangeError,
    GraphInputError,
    KLimitExceeded,
    QueryError,
    SelfLoopError,
    TreeStructureError,
    UniverseMismatchError,
)
from .gamma import (
    CaseTag,
    GammaCase,
    GammaTable,
    all_subtree_cut_sizes,
    classify_gamma_case,
    cut_size_via_tree,
    k_respecting_cut_size,
    k_wise_gamma,
    pairwise_gamma,
)
from .generators import (
    STRATEGIES,
    gen_connected_graph,
    gen_query_set,
    gen_spanning_tree,
)
from .graph import Graph, build_graph, cut_edge_set, cut_size_direct
from .oracle import (
    check_cut_space_identity,
    oracle_k_wise_gamma,
    symmetric_difference,
    xor_of_subtrees,
    xor_size_by_inclusion_exclusion,
)
from .tree import RootedSpanningTree, build_rooted_tree

__all__ = [
    "DEFAULT_MAX_K",
    "CaseTag",
    "EdgeWeightError",
    "EndpointRangeError",
    "GammaCase",
    "GammaTable",
    "Graph",
    "GraphInputError",
    "KLimitExceeded",
    "QueryError",
    "RootedSpanningTree",
    "STRATEGIES",
    "SelfLoopError",
    "TreeStructureError",
    "UniverseMismatchError",
    "all_subtree_cut_sizes",
    "build_graph",
    "build_rooted_tree",
    "check_cut_space_identity",
    "classify_gamma_case",
    "cut_edge_set",
    "cut_size_direct",
    "cut_size_via_tree",
    "gen_connected_graph",
    "gen_query_set",
    "gen_spanning_tree",
    "k_respecting_cut_size",
    "k_wise_gamma",
    "oracle_k_wise_gamma",
    "pairwise_gamma",
    "symmetric_difference",
    "xor_of_subtrees",
    "xor_size_by_inclusion_exclusion",
]
