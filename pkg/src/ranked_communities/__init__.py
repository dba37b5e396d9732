"""Centrality-ordered label propagation and multilevel community detection."""
from ._accel import USE_NUMBA
from .centrality import (
    CentralityScores,
    Measure,
    betweenness_scores,
    closeness_scores,
    combined_scores,
    degree_scores,
    pagerank_scores,
    relative_closeness,
    shortest_distances,
)
from .graph import Graph, LatticeParams, build_graph, parse_edge_list, ring_lattice, strength
from .label_propagation import label_propagation, neighbor_label_weights
from .multilevel import CommunityState, aggregate, local_moving, modularity_gain, multilevel
from .ordering import (
    NodeOrder,
    Strategy,
    TieMode,
    ascending_order,
    ascending_order_combined,
    natural_order,
    random_order,
)
from .partition import Partition
from .quality import modularity

__version__ = "0.1.0"
