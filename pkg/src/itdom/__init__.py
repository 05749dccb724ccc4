"""Exact solvers and an exhaustive small-graph verification harness for
independent transversal domination and related invariants."""

__version__ = "0.1.0"

from .graphs import (
    Bipartition,
    EdgeListError,
    Graph,
    Graph6Error,
    bipartition,
    complement,
    complete,
    complete_bipartite,
    components,
    corona,
    cycle,
    disjoint_union,
    encode_graph6,
    format_edge_list,
    induced_subgraph,
    is_complete,
    is_connected,
    is_tree,
    iter_bits,
    mask_of,
    members,
    named_graph,
    parse_edge_list,
    parse_graph6,
    path,
    pendant_vertices,
    permute,
    petersen,
    star,
)
from .catalog import (
    CatalogEntry,
    canonical_form,
    canonical_graph6,
    enumerate_connected_graphs,
    enumerate_graphs,
    raw_connected_sweep,
)
from .invariants import (
    InvariantReport,
    OmegaCapError,
    OmegaFamily,
    SolverLimitError,
    compute_report,
    core_and_xi,
    domination_number,
    domination_sets,
    gamma_it,
    gamma_it_sets,
    gamma_t,
    gamma_tt,
    matching_number,
    maximum_matching,
    omega,
    tau_i,
)
from .oracle import ORACLE_IDS, OracleLimitError, naive_oracle
from .theorems import (
    CharacterizationResult,
    ExtremalResult,
    InvariantCache,
    PROVEN_IDS,
    REFUTABLE_IDS,
    SEARCH_MODES,
    Status,
    THEOREMS,
    TheoremVerdict,
    check,
    figure1_graph,
    is_corona,
    pendant_condition,
    search_extremal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
