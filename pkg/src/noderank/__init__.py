"""noderank: node-influence analysis for complex networks.

Rank the nodes of an undirected graph by structural influence (coreness-
distance GSM scores, DEMATEL total-relation prominence, their fusion, and
the four classical centrality baselines), then check the ranking against
robustness-under-attack curves and SIR spreading experiments.
"""

from .centrality import (
    CentralityVector,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    eigenvector_centrality_robust,
    rank_order,
)
from .errors import *  # noqa: F401,F403 (re-export the exception family)
from .generators import GeneratorSpec, generate
from .graph import (
    Graph,
    NodeRecord,
    ParseReport,
    build_graph,
    emit_edge_list,
    emit_gnid_table,
    largest_connected_component,
    load_edge_list,
    load_gnid_table,
    parse_edge_list,
    remove_nodes,
)
from .influence import (
    DematelResult,
    FusedRanking,
    GsmScores,
    dematel_direct,
    dematel_total,
    fused_ranking,
    gsm_scores,
    rank_by,
    total_relation,
)
from .metrics import (
    DegreeHistogram,
    GraphSummary,
    average_clustering,
    average_degree,
    bfs_distances,
    degree_histogram,
    density,
    k_shell,
    local_clustering,
    path_stats,
    summarize,
)
from .propagation import (
    RankingValidation,
    SirParams,
    SpreadResult,
    auto_beta,
    sir_simulate,
    sir_trial_counts,
    validate_ranking,
)
from .robustness import (
    RemovalPlan,
    RobustnessCurve,
    StrategyComparison,
    compare_strategies,
    run_removal,
)

__version__ = "0.1.0"
