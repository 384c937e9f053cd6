from itertools import combinations, permutations
from math import factorial

import pytest

from graphs import Graph, SizeBudgetError, all_graphs, count_classes, is_connected
from graphs.canon import canonical_code
from graphs.enumerate import children, expand, subtree_roots
from utils.parallel_utils import all_graphs_parallel

CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def burnside_count(n: int) -> int:
    """Unlabelled graphs on n vertices: average of 2^(pair orbits) over S_n"""
    pairs = list(combinations(range(n), 2))
    total = 0
    for perm in permutations(range(n)):
        seen, orbits = set(), 0
        for pair in pairs:
            if pair in seen:
                continue
            orbits += 1
            a, b = pair
            while (a, b) not in seen:
                seen.add((a, b))
                a, b = sorted((perm[a], perm[b]))
        total += 2 ** orbits
    return total // factorial(n)


def brute_force_classes(n: int) -> set:
    pairs = list(combinations(range(n), 2))
    codes = set()
    for bits in range(1 << len(pairs)):
        G = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        codes.add(canonical_code(G))
    return codes


@pytest.mark.parametrize("n", range(1, 8))
def test_class_counts(n):
    assert count_classes(n) == CLASS_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    assert sum(1 for _ in all_graphs(n, connected_only=True)) == CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_burnside_oracle(n):
    assert burnside_count(n) == CLASS_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_enumeration_matches_brute_force(n):
    generated = [canonical_code(G) for G in all_graphs(n)]
    assert len(set(generated)) == len(generated), "isomorphic duplicates generated"
    assert set(generated) == brute_force_classes(n)


@pytest.mark.slow
def test_class_count_order_8():
    assert count_classes(8) == CLASS_COUNTS[8]


def test_children_are_pairwise_non_isomorphic():
    for G in all_graphs(4):
        kids = list(children(G))
        codes = {canonical_code(H) for H in kids}
        assert len(codes) == len(kids)
        assert all(H.n == 5 for H in kids)


def test_subtrees_cover_the_whole_tree():
    roots = subtree_roots(7, split_depth=5)
    assert roots == list(all_graphs(5))
    assert sum(sum(1 for _ in expand(root, 7)) for root in roots) == CLASS_COUNTS[7]
    assert subtree_roots(4, split_depth=5) == list(all_graphs(4))


@pytest.mark.parametrize("jobs", [1, 2])
def test_parallel_enumeration_keeps_order(jobs):
    assert list(all_graphs_parallel(6, jobs=jobs)) == list(all_graphs(6))
    connected = list(all_graphs_parallel(6, connected_only=True, jobs=jobs))
    assert len(connected) == CONNECTED_COUNTS[6]
    assert all(is_connected(G) for G in connected)


@pytest.mark.parametrize("n", [0, 11])
def test_order_budget(n):
    with pytest.raises(SizeBudgetError):
        list(all_graphs(n))
