"""copymax: which large host maximises copies of a small graph?

A quasi-star, a quasi-clique, or a strictly intermediate three-class host:
the answer depends on the edge density and on the pattern's fractional
independence structure.  This package computes the machinery exactly and
numerically, and cross-checks every closed form against brute-force counts
on explicit finite graphs.
"""

from .graphs import (
    Graph,
    GraphInvariants,
    IndependenceCensus,
    are_isomorphic,
    automorphism_count,
    builtin_graph,
    canonical_form,
    clique_with_pendant_star,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_connected_graphs,
    enumerate_graph_classes,
    graph_invariants,
    independence_number,
    independent_set_census,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    write_graph6,
)
from .weightings import (
    Weighting,
    WeightingSpectrum,
    enumerate_weightings,
    fractional_independence_number,
    interior_limit_constant,
    spectrum,
    star_limit_constant,
)
from .density import (
    ClassFractions,
    CurveSample,
    DensityCurve,
    ProfilePoint,
    asymptotic_exponent,
    attribute_winner,
    best_t_density,
    class_fractions,
    clique_density,
    crossover_beta,
    density_curve,
    star_density,
    t_density,
    t_density_grid,
)
from .lp import (
    DualityMismatchError,
    DualityReport,
    LinearProgram,
    LPSolution,
    dual_lp,
    duality_check,
    epsilon_for_density,
    maximal_weighting,
    primal_lp,
    primal_optimum_formula,
    solve_lp,
)
from .hosts import (
    ConvergenceResult,
    CountBudgetExceeded,
    CountReport,
    HostGraph,
    build_host,
    convergence_report,
    copies_count,
    hom_count,
    injective_count,
    injective_count_from_spectrum,
    three_class_graph,
)
from .classify import (
    QStarCurve,
    SweepRow,
    ThreeClassProbe,
    TypeClassification,
    classify_type,
    default_beta_grid,
    exhaustive_ex,
    q_star_curve,
    search_counterexamples,
    sweep_connected_graphs,
    sweep_to_csv,
    three_class_host_probe,
)

__version__ = "0.1.0"
