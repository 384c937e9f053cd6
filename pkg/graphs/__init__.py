"""
chordspec.graphs

Graph representation, combinators, canonical forms, graph6 and enumeration
"""

from .core import (
    Graph, VertexSet, GraphError, VertexError, Graph6Error, SizeBudgetError,
    PartitionError, DisconnectedGraphError, NonEquitableError,
    empty, add_edge, remove_edge, edges_within, edges_between, join,
    disjoint_union, add_pendant, identify, induced_subgraph, permute,
    complement, components, is_connected,
)
from .canon import GraphId, canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from .graph6 import from_graph6, to_graph6, read_graph6_lines, write_graph6_lines
from .families import (
    complete_bipartite, friendship, friendship_pendant, k2a_bullet_f, k2a_star_f,
    star, complete, path, cycle, wheel, petersen, random_graph, random_connected_graph,
)
from .enumerate import all_graphs, count_classes

__all__ = [
    'Graph', 'VertexSet', 'GraphId',
    'GraphError', 'VertexError', 'Graph6Error', 'SizeBudgetError',
    'PartitionError', 'DisconnectedGraphError', 'NonEquitableError',
    'empty', 'add_edge', 'remove_edge', 'edges_within', 'edges_between', 'join',
    'disjoint_union', 'add_pendant', 'identify', 'induced_subgraph', 'permute',
    'complement', 'components', 'is_connected',
    'canonical_form', 'canonical_graph', 'canonical_labeling', 'is_isomorphic',
    'from_graph6', 'to_graph6', 'read_graph6_lines', 'write_graph6_lines',
    'complete_bipartite', 'friendship', 'friendship_pendant', 'k2a_bullet_f', 'k2a_star_f',
    'star', 'complete', 'path', 'cycle', 'wheel', 'petersen', 'random_graph', 'random_connected_graph',
    'all_graphs', 'count_classes',
]
