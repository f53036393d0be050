"""Exact deciders, spectral bounds, and sufficient-condition verification
for fractional [a, b]-deleted graphs."""

from .graph import (
    EdgeListError,
    Graph,
    Graph6Error,
    complete,
    components,
    cut_count,
    degree_sum_minus,
    delete_edge,
    delete_vertices,
    disjoint_union,
    extremal,
    is_connected,
    join,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .maxflow import MaxFlow, feasible_flow
from .oracle import (
    PAIR_GUARD,
    SUBSET_GUARD,
    DeficiencyWitness,
    FractionalAssignment,
    SizeGuardError,
    deficiency_witness,
    epsilon,
    factor_deficiency_witness,
    find_fractional_factor,
    has_fractional_gf_factor,
    has_gf_factor_lovasz,
    is_fractional_ab_deleted,
    is_fractional_ab_deleted_by_edges,
    theta,
)
from .spectral import (
    DEFAULT_TOL,
    ConvergenceError,
    EigenResult,
    SpectralSummary,
    adjacency_matrix,
    eigen_max_symmetric,
    feng_yu_bound,
    hsf_bound,
    hsf_bound_at,
    signless_laplacian_matrix,
    signless_laplacian_radius,
    spectral_radius,
    spectral_summary,
)
from .theorems import (
    DEFAULT_MARGIN,
    THEOREM_IDS,
    ScanRecord,
    SharpnessError,
    SharpnessReport,
    TheoremReport,
    eval_edge_count_condition,
    eval_signless_laplacian_condition,
    eval_spectral_radius_condition,
    eval_theorem,
    graphs_with_min_edges,
    scan,
    summarize,
    verify_sharpness,
)

__version__ = "0.1.0"
