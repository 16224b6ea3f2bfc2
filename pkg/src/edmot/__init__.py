"""Motif-aware community detection via clique edge enhancement.

Pipeline: build the triangle co-occurrence hypergraph, partition its top-K
connected components into modules, complete each module into a clique, union
those edges into the original network, and partition the rewired result.
"""

from .components import ComponentSet, connected_components, fragmentation_report, top_k_components
from .graph import (EdgeListError, Graph, LabelMap, graph_stats, induced_subgraph,
                    largest_connected_component, parse_edge_list, parse_label_file,
                    write_edge_list)
from .metrics import EvalReport, evaluate, nmi, pairwise_f_score
from .motif import (TRIANGLE, MotifDescriptor, brute_force_motif_adjacency,
                    build_motif_adjacency, count_triangles, enumerate_triangles)
from .partition import (Partition, PartitionerConfig, louvain, louvain_with_history,
                        modularity, singleton_partition)
from .pipeline import (PipelineError, PipelineTrace, clique_edge_set, detect_communities,
                       partition_components_to_modules, partition_hypergraph,
                       rewire_network, run_edmot)

__version__ = "0.1.0"

__all__ = [
    "ComponentSet", "EdgeListError", "EvalReport", "Graph", "LabelMap",
    "MotifDescriptor", "Partition", "PartitionerConfig", "PipelineError",
    "PipelineTrace", "TRIANGLE", "brute_force_motif_adjacency",
    "build_motif_adjacency", "clique_edge_set", "connected_components",
    "count_triangles", "detect_communities", "enumerate_triangles", "evaluate",
    "fragmentation_report", "graph_stats", "induced_subgraph",
    "largest_connected_component", "louvain", "louvain_with_history",
    "modularity", "nmi", "pairwise_f_score", "parse_edge_list",
    "parse_label_file", "partition_components_to_modules",
    "partition_hypergraph", "rewire_network", "run_edmot",
    "singleton_partition", "top_k_components", "write_edge_list",
]
