import numpy as np
import pytest

from graphs import (
    Graph, GraphError, VertexError, VertexSet, add_edge, add_pendant, complement,
    complete, complete_bipartite, components, cycle, disjoint_union, edges_between,
    edges_within, empty, identify, induced_subgraph, is_connected, is_isomorphic,
    join, path, permute, random_graph, remove_edge,
)


def test_from_edges_statistics():
    G = Graph.from_edges(4, [(2, 3), (0, 1), (1, 2)])
    assert G.e == 3
    assert G.degrees() == [1, 2, 2, 1]
    assert G.edges() == [(0, 1), (1, 2), (2, 3)]
    assert G.neighbors(1) == (0, 2)
    assert G.has_edge(3, 2) and not G.has_edge(0, 3)
    assert G == path(4)


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 3)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(VertexError):
        Graph.from_edges(3, edges)


def test_asymmetric_masks_rejected():
    with pytest.raises(GraphError):
        Graph(2, (2, 0))


def test_adjacency_matrix_is_symmetric():
    A = cycle(5).adjacency_matrix()
    assert np.array_equal(A, A.T)
    assert A.sum() == 2 * 5


def test_add_and_remove_edge():
    G = add_edge(empty(3), 0, 2)
    assert G.edges() == [(0, 2)]
    assert add_edge(G, 2, 0) == G
    assert remove_edge(G, 0, 2) == empty(3)
    with pytest.raises(VertexError):
        add_edge(G, 1, 1)


def test_join_is_complete_bipartite():
    G = join(empty(2), empty(3))
    assert G == complete_bipartite(2, 3)
    assert G.e == 6


def test_disjoint_union_shifts_second_graph():
    G = disjoint_union(path(2), path(2))
    assert G.edges() == [(0, 1), (2, 3)]


def test_add_pendant_uses_next_index():
    G = add_pendant(path(3), 1)
    assert G.n == 4
    assert G.edges() == [(0, 1), (1, 2), (1, 3)]


def test_identify_glues_paths():
    assert identify(path(3), 2, path(3), 0) == path(5)


def test_edge_counts_on_sets():
    G = complete(4)
    S = VertexSet.of(4, [0, 1])
    assert edges_within(G, S) == 1
    assert edges_between(G, S, S.complement()) == 4
    with pytest.raises(GraphError):
        edges_between(G, S, VertexSet.of(4, [1, 2]))


def test_vertex_set_helpers():
    S = VertexSet.of(5, [4, 1])
    assert S.members == (1, 4)
    assert len(S) == 2
    assert 4 in S and 0 not in S
    assert list(S.complement()) == [0, 2, 3]
    with pytest.raises(VertexError):
        VertexSet.of(3, [3])


def test_complement():
    assert complement(complete(4)).e == 0
    assert is_isomorphic(complement(cycle(5)), cycle(5))


def test_components_and_connectivity():
    G = disjoint_union(cycle(3), path(2))
    assert components(G) == [frozenset({0, 1, 2}), frozenset({3, 4})]
    assert not is_connected(G)
    assert is_connected(cycle(3))
    with pytest.raises(GraphError):
        is_connected(empty(0))


def test_permute_and_induced_subgraph():
    assert permute(path(3), [1, 0, 2]).edges() == [(0, 1), (0, 2)]
    assert induced_subgraph(cycle(5), [0, 1, 2]) == path(3)
    with pytest.raises(GraphError):
        permute(path(3), [0, 0, 1])


def test_edge_count_splits_over_any_cut(rng):
    for _ in range(200):
        G = random_graph(int(rng.integers(1, 16)), float(rng.uniform(0, 1)), rng)
        S = VertexSet.of(G.n, [v for v in range(G.n) if rng.random() < 0.5])
        rest = S.complement()
        assert edges_within(G, S) + edges_within(G, rest) + edges_between(G, S, rest) == G.e


def test_join_edge_count(rng):
    for _ in range(100):
        G1 = random_graph(int(rng.integers(1, 8)), 0.5, rng)
        G2 = random_graph(int(rng.integers(1, 8)), 0.5, rng)
        assert join(G1, G2).e == G1.e + G2.e + G1.n * G2.n


def test_degree_sum_is_twice_edge_count(rng):
    for _ in range(200):
        G = random_graph(int(rng.integers(0, 20)), float(rng.uniform(0, 1)), rng)
        assert sum(G.degrees()) == 2 * G.e
        assert int(G.adjacency_matrix().sum()) == 2 * G.e


def test_trusted_graph_equals_validated_graph():
    assert Graph.trusted(4, path(4).masks) == path(4)
