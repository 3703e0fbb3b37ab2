"""
Tools package for the Folkman workbench.
Pure graph kernels: core types, I/O, exact solvers, Folkman invariants,
constructions, proof steps and parameterised explorations.
"""

from .errors import (
    BudgetExceeded,
    FolkmanError,
    MalformedInput,
    PreconditionViolated,
    SizeCapExceeded,
)

from .graph_core import (
    Graph,
    VertexSet,
    add_vertex_with_neighborhood,
    build_graph,
    canonical_form,
    complement,
    delete_edge,
    delete_vertices,
    disjoint_union,
    enumerate_graphs,
    induced_subgraph,
    is_bipartite,
    is_clique,
    is_independent,
    members,
    merge_vertices,
    vertex_set,
)

from .graph_io import (
    GraphStream,
    StreamRecord,
    parse_dimacs_or_edgelist,
    parse_graph6,
    read_graph6_lines,
    stream_graphs,
    write_dimacs,
    write_edgelist,
    write_graph,
    write_graph6,
)

from .exact_solvers import (
    ColoringCertificate,
    DiamondMatch,
    SolverBudget,
    all_induced_even_cycles,
    all_maximum_independent_sets,
    chromatic_number,
    chromatic_numbers_all_subsets,
    clique_number,
    find_diamond,
    find_induced_even_cycle,
    independence_number,
    independence_numbers_all_subsets,
    is_k_colorable,
    is_proper_coloring,
    odd_cycle_transversal,
    shortest_cycle,
)

from .folkman_invariants import (
    PotentialWitness,
    check_folkman_bound,
    folkman_number,
    independence_ratio,
    is_k_near_bipartite,
    min_deletion_to_half_stable,
    min_independence_ratio,
    potential,
    potential_superadditivity,
)

from .constructions import (
    basic_graph,
    fig1_gadget,
    generalized_mycielski,
    mycielski,
    mycielski_iterated,
)

from .proof_machinery import (
    ReductionTrace,
    apex_replacement,
    audit_proof_inequalities,
    diamond_reduction,
    even_cycle_contraction,
    extend_coloring_over_clique,
    extend_coloring_over_odd_cycle,
    hajnal_common_vertex,
    lift_coloring_through_diamond,
    lift_coloring_through_merge,
)

from .exploration import (
    alpha_p,
    audit_generalized_mycielski,
    c2_failure_threshold,
    f_p_objective,
    folkman_coefficient_report,
    mycielski_mir_report,
    reed_gap,
)

__all__ = [
    # Errors
    "FolkmanError",
    "MalformedInput",
    "PreconditionViolated",
    "SizeCapExceeded",
    "BudgetExceeded",

    # Graph core
    "Graph",
    "VertexSet",
    "build_graph",
    "vertex_set",
    "members",
    "induced_subgraph",
    "delete_vertices",
    "is_independent",
    "is_clique",
    "is_bipartite",
    "merge_vertices",
    "add_vertex_with_neighborhood",
    "delete_edge",
    "complement",
    "disjoint_union",
    "canonical_form",
    "enumerate_graphs",

    # Graph I/O
    "parse_graph6",
    "write_graph6",
    "parse_dimacs_or_edgelist",
    "write_dimacs",
    "write_edgelist",
    "write_graph",
    "GraphStream",
    "StreamRecord",
    "stream_graphs",
    "read_graph6_lines",

    # Exact solvers
    "SolverBudget",
    "ColoringCertificate",
    "DiamondMatch",
    "independence_number",
    "all_maximum_independent_sets",
    "independence_numbers_all_subsets",
    "clique_number",
    "is_k_colorable",
    "chromatic_number",
    "chromatic_numbers_all_subsets",
    "is_proper_coloring",
    "shortest_cycle",
    "find_induced_even_cycle",
    "all_induced_even_cycles",
    "find_diamond",
    "odd_cycle_transversal",

    # Folkman invariants
    "PotentialWitness",
    "potential",
    "folkman_number",
    "independence_ratio",
    "min_independence_ratio",
    "min_deletion_to_half_stable",
    "is_k_near_bipartite",
    "check_folkman_bound",
    "potential_superadditivity",

    # Constructions
    "basic_graph",
    "mycielski",
    "mycielski_iterated",
    "generalized_mycielski",
    "fig1_gadget",

    # Proof machinery
    "ReductionTrace",
    "even_cycle_contraction",
    "diamond_reduction",
    "apex_replacement",
    "extend_coloring_over_clique",
    "extend_coloring_over_odd_cycle",
    "lift_coloring_through_merge",
    "lift_coloring_through_diamond",
    "hajnal_common_vertex",
    "audit_proof_inequalities",

    # Exploration
    "alpha_p",
    "f_p_objective",
    "audit_generalized_mycielski",
    "c2_failure_threshold",
    "mycielski_mir_report",
    "reed_gap",
    "folkman_coefficient_report",
]
