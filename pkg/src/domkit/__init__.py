"""domkit: exact solvers, validators, and product theorems for [1,k]-domination."""

from .domsets import (
    SetKind,
    VertexSet,
    dominating,
    efficient,
    in_sd_class,
    independent_one_k,
    j_dependent_one_k,
    j_dependent_total_one_k,
    one_k,
    open_efficient,
    satisfies,
    spanning_number,
    total_dominating,
    total_one_k,
)
from .graphs import (
    Graph,
    ProductIndex,
    build_standard,
    complement,
    distance,
    format_edge_list,
    is_connected,
    lex_product,
    load_graph,
    parse_edge_list,
    save_graph,
)
from .lex_theory import (
    DiscrepancyReport,
    DisconnectedFactorError,
    ProductAnalysis,
    characterize_independent,
    characterize_total,
    corollary_value,
    product_gamma,
    verify_against_oracle,
    verify_membership_against_oracle,
)
from .npc import (
    GadgetMeta,
    ReductionError,
    X3CInstance,
    build_gadget,
    cover_to_witness,
    decide_x3c,
    witness_to_cover,
)
from .solvers import (
    DEFAULT_MAX_N,
    GraphTooLargeError,
    SolveResult,
    closed_form,
    exists_set,
    min_set,
)

__all__ = [
    "DEFAULT_MAX_N",
    "DiscrepancyReport",
    "DisconnectedFactorError",
    "GadgetMeta",
    "Graph",
    "GraphTooLargeError",
    "ProductAnalysis",
    "ProductIndex",
    "ReductionError",
    "SetKind",
    "SolveResult",
    "VertexSet",
    "X3CInstance",
    "build_gadget",
    "build_standard",
    "characterize_independent",
    "characterize_total",
    "closed_form",
    "complement",
    "corollary_value",
    "cover_to_witness",
    "decide_x3c",
    "distance",
    "dominating",
    "efficient",
    "exists_set",
    "format_edge_list",
    "in_sd_class",
    "independent_one_k",
    "is_connected",
    "j_dependent_one_k",
    "j_dependent_total_one_k",
    "lex_product",
    "load_graph",
    "min_set",
    "one_k",
    "open_efficient",
    "parse_edge_list",
    "product_gamma",
    "satisfies",
    "save_graph",
    "spanning_number",
    "total_dominating",
    "total_one_k",
    "verify_against_oracle",
    "verify_membership_against_oracle",
    "witness_to_cover",
]
