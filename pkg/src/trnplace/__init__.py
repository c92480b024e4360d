"""Reliability-aware trusted repeater node (TRN) placement for QKD optical networks."""

from .centrality import betweenness, degree_centrality, dijkstra_sssp, eigenvector
from .evaluation import canonical_paths, compare_baselines, cpc, cpc_curve
from .placement import ScoreParams, composite_score, monte_carlo_rank, top_k
from .reliability import (
    ReliabilityAssignment,
    WeightParams,
    build_modified_graph,
    modified_weight,
    sample_reliabilities,
)
from .topology import Link, Node, Topology, generate_topology, normalize_distances, parse_topology

__version__ = "0.1.0"
