"""Clique colouring of binomial random graphs.

A clique colouring assigns colours to vertices so that no maximal clique
with at least two vertices is monochromatic; the clique chromatic number is
the fewest colours that suffice.  The package provides deterministic
G(n, p) sampling, maximal-clique machinery, constructive colouring schemes
with validation, small-graph exact solvers, asymptotic regime predictions,
and a reproducible experiment runner, all behind the ``cliquecolour`` CLI.
"""

from .cliques import (
    CliqueSet,
    EdgeStats,
    count_k_cliques_in_subset,
    dense_set_ratio,
    edge_triangle_stats,
    enumerate_maximal_cliques,
    k1_cliques_per_edge,
)
from .constructors import (
    DenseParams,
    TriFreeParams,
    dense_schedule,
    dense_two_phase_colouring,
    dominating_set_colouring,
    greedy_domset_colouring,
    greedy_mis,
    portfolio_colouring,
    trifree_decomposition_colouring,
)
from .errors import (
    BudgetExceededError,
    CliqueOverflowError,
    EdgeListParseError,
    ParameterError,
)
from .graph import (
    GnpParams,
    Graph,
    complete_graph,
    cycle_graph,
    keyed_hash,
    parse_edge_list,
    sample_gnp,
    serialize_edge_list,
)
from .lab import (
    SweepConfig,
    SweepRow,
    parse_config,
    per_graph_report,
    read_rows,
    run_sweep,
)
from .solver import (
    Colouring,
    McfResult,
    ValidationReport,
    exact_chromatic,
    exact_clique_chromatic,
    exact_mcf,
    independence_number,
    sparse_lower_bound,
    triangle_vertex_count,
    validate,
)
from .theory import (
    RegimeReport,
    TheoryConstants,
    chernoff_tail,
    classify_regime,
    f_exponent,
    theory_constants,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CliqueOverflowError",
    "CliqueSet",
    "Colouring",
    "DenseParams",
    "EdgeListParseError",
    "EdgeStats",
    "GnpParams",
    "Graph",
    "McfResult",
    "ParameterError",
    "RegimeReport",
    "SweepConfig",
    "SweepRow",
    "TheoryConstants",
    "TriFreeParams",
    "ValidationReport",
    "chernoff_tail",
    "classify_regime",
    "complete_graph",
    "count_k_cliques_in_subset",
    "cycle_graph",
    "dense_schedule",
    "dense_set_ratio",
    "dense_two_phase_colouring",
    "dominating_set_colouring",
    "edge_triangle_stats",
    "enumerate_maximal_cliques",
    "exact_chromatic",
    "exact_clique_chromatic",
    "exact_mcf",
    "f_exponent",
    "greedy_domset_colouring",
    "greedy_mis",
    "independence_number",
    "k1_cliques_per_edge",
    "keyed_hash",
    "parse_config",
    "parse_edge_list",
    "per_graph_report",
    "portfolio_colouring",
    "read_rows",
    "run_sweep",
    "sample_gnp",
    "serialize_edge_list",
    "sparse_lower_bound",
    "theory_constants",
    "triangle_vertex_count",
    "validate",
]
