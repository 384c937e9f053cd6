import io

import networkx as nx
import pytest

from graphs import (
    GraphId, Graph6Error, canonical_form, canonical_graph, canonical_labeling, complete_bipartite,
    cycle, empty, from_graph6, is_isomorphic, path, permute, petersen, random_graph, read_graph6_lines,
    star, to_graph6, write_graph6_lines,
)
from graphs.canon import canonical_search, orbit, same_orbit
from tests.conftest import to_networkx


@pytest.mark.parametrize("G, text", [
    (empty(0), "?"),
    (empty(1), "@"),
    (path(2), "A_"),
])
def test_known_graph6_strings(G, text):
    assert to_graph6(G) == text
    assert from_graph6(text) == G


def test_graph6_matches_networkx(rng):
    samples = [petersen(), complete_bipartite(2, 4), path(70)]
    samples += [random_graph(int(rng.integers(2, 15)), 0.4, rng) for _ in range(50)]
    for G in samples:
        expected = nx.to_graph6_bytes(to_networkx(G), header=False).strip().decode("ascii")
        assert to_graph6(G) == expected, f"graph6 differs for {G}"
        assert from_graph6(expected) == G


def test_long_format_prefix():
    text = to_graph6(path(70))
    assert text.startswith("~")
    assert from_graph6(text) == path(70)


@pytest.mark.parametrize("text", ["", "A", "A~", "A ", "Bw_"])
def test_malformed_graph6(text):
    with pytest.raises(Graph6Error):
        from_graph6(text)


def test_graph6_streams():
    stream = io.StringIO(">>graph6<<\nA_\n\n>>graph6<<Bw\n")
    graphs = list(read_graph6_lines(stream))
    assert graphs == [path(2), from_graph6("Bw")]

    out = io.StringIO()
    assert write_graph6_lines(graphs, out) == 2
    assert out.getvalue() == "A_\nBw\n"


def test_canonical_form_is_labelling_invariant(rng):
    for _ in range(40):
        G = random_graph(int(rng.integers(1, 10)), 0.5, rng)
        perm = [int(x) for x in rng.permutation(G.n)]
        H = permute(G, perm)
        assert canonical_graph(G) == canonical_graph(H)
        assert canonical_form(G) == canonical_form(H)
        assert is_isomorphic(G, H)


def test_canonical_labeling_is_a_permutation():
    perm = canonical_labeling(petersen())
    assert sorted(perm) == list(range(10))
    assert is_isomorphic(permute(petersen(), perm), petersen())


def test_isomorphism_agrees_with_networkx(rng):
    for _ in range(80):
        n = int(rng.integers(4, 8))
        G, H = random_graph(n, 0.5, rng), random_graph(n, 0.5, rng)
        assert is_isomorphic(G, H) == nx.is_isomorphic(to_networkx(G), to_networkx(H))


def test_non_isomorphic_trees():
    assert not is_isomorphic(path(4), star(4))
    assert is_isomorphic(cycle(4), complete_bipartite(2, 2))


def test_graph_id_text():
    gid = canonical_form(path(2))
    assert isinstance(gid, GraphId)
    assert str(gid) == "A_"


def test_same_orbit():
    assert same_orbit(path(3), 0, 2)
    assert not same_orbit(path(3), 0, 1)
    assert same_orbit(petersen(), 0, 7)


@pytest.mark.parametrize("G", [cycle(6), petersen(), complete_bipartite(2, 4), path(5)])
def test_search_automorphisms(G):
    order, code, generators = canonical_search(G)
    assert all(permute(G, g) == G for g in generators)
    assert all(same_orbit(G, 0, w) for w in orbit(generators, 0))
    assert sorted(order) == list(range(G.n))
