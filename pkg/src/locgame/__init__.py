"""Localization games on graphs and in the plane."""

from .blindbush import (
    ChainReport,
    CutSchedule,
    blind_localization_number,
    bush_number,
    bush_scaling_experiment,
    bush_step,
    check_chain,
    domination_number,
    replay_schedule,
)
from .catalog import enumerate_graphs, enumerate_trees, tree_canonical_code
from .errors import LimitExceededError
from .graphs import (
    DistanceMatrix,
    Graph,
    add_isolated,
    add_universal,
    all_pairs_distances,
    format_graph,
    generate,
    parse_graph,
    subdivide,
)
from .locating import (
    EquivalenceReport,
    check_isolated_equivalence,
    check_uvw_increment,
    is_dominating_locating_set,
    is_locating_set,
    min_dominating_locating_set,
    min_locating_set,
    reduce_add_isolated,
    reduce_add_uvw,
    reduce_multiuniversal,
    unseen_vertices,
    verify_multiuniversal_zeta,
)
from .pathdecomp import (
    PathDecomposition,
    normalize_decomposition,
    pathwidth_exact,
    validate_decomposition,
)
from .plane import (
    ApproxParams,
    ApproxResult,
    Circle,
    EscapeTrace,
    Point,
    RandomWalkRobber,
    StaticRobber,
    TwoCopResult,
    WaypointRobber,
    approx_one_cop,
    circle_intersection,
    derive_delta,
    greedy_prober,
    make_random_prober,
    one_cop_escape,
    trilaterate,
    two_cop_play,
)
from .solver import (
    SolveResult,
    SolverBudget,
    adversarial_robber,
    belief_step,
    cop_wins,
    localization_number,
    metric_dimension,
    partition_by_signature,
)
from .strategies import (
    Strategy,
    VerificationReport,
    bipartite_parity_strategy,
    complete_bipartite_strategy,
    path_strategy,
    pathwidth_strategy,
    star_strategy,
    verify_strategy,
)
from .trees import (
    ColoredTree,
    build_subdivided_ary_tree,
    check_bimatching_lemma,
    max_bicolored_matching,
    occupancy_window,
    regular_vertex_count,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxParams",
    "ApproxResult",
    "ChainReport",
    "Circle",
    "ColoredTree",
    "CutSchedule",
    "DistanceMatrix",
    "EquivalenceReport",
    "EscapeTrace",
    "Graph",
    "LimitExceededError",
    "PathDecomposition",
    "Point",
    "RandomWalkRobber",
    "SolveResult",
    "SolverBudget",
    "StaticRobber",
    "Strategy",
    "TwoCopResult",
    "VerificationReport",
    "WaypointRobber",
    "add_isolated",
    "add_universal",
    "adversarial_robber",
    "all_pairs_distances",
    "approx_one_cop",
    "belief_step",
    "bipartite_parity_strategy",
    "blind_localization_number",
    "build_subdivided_ary_tree",
    "bush_number",
    "bush_scaling_experiment",
    "bush_step",
    "check_bimatching_lemma",
    "check_chain",
    "check_isolated_equivalence",
    "check_uvw_increment",
    "circle_intersection",
    "complete_bipartite_strategy",
    "cop_wins",
    "derive_delta",
    "domination_number",
    "enumerate_graphs",
    "enumerate_trees",
    "format_graph",
    "generate",
    "greedy_prober",
    "is_dominating_locating_set",
    "is_locating_set",
    "localization_number",
    "make_random_prober",
    "max_bicolored_matching",
    "metric_dimension",
    "min_dominating_locating_set",
    "min_locating_set",
    "normalize_decomposition",
    "occupancy_window",
    "one_cop_escape",
    "parse_graph",
    "partition_by_signature",
    "path_strategy",
    "pathwidth_exact",
    "pathwidth_strategy",
    "reduce_add_isolated",
    "reduce_add_uvw",
    "reduce_multiuniversal",
    "regular_vertex_count",
    "replay_schedule",
    "star_strategy",
    "subdivide",
    "tree_canonical_code",
    "trilaterate",
    "two_cop_play",
    "unseen_vertices",
    "validate_decomposition",
    "verify_multiuniversal_zeta",
    "verify_strategy",
]
