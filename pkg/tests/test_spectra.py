import math
from fractions import Fraction

import numpy as np
import pytest

from graphs import (
    DisconnectedGraphError, Graph, NonEquitableError, PartitionError, SizeBudgetError,
    all_graphs, complete, complete_bipartite, disjoint_union, empty, friendship, friendship_pendant,
    induced_subgraph, path, random_connected_graph, random_graph, remove_edge, star,
)
from spectra import (
    CharPoly, Partition, char_poly, compare_radius_to_sqrt, component_blocks, count_eigs_above,
    eigen_residual, gamma_star, is_equitable, jacobi_eigh, kelmans_rotate, perron, power_brackets,
    power_radius, quotient_eigenvalues, radius_disagreement,
    quotient_matrix, real_roots, sign_at_sqrt, spectral_radius, spectrum, square_free_factors,
    sturm_sequence, verify_quotient_lift,
)
from graphs.canon import same_orbit
from spectra.exact import count_poly_roots_above, sign_of_sqrt_sum
from spectra.numeric import ARGMAX_TIE
from verifiers.lemmas import bipartite_partition, pendant_partition

# (x - 3)^2 (x + 1)
DOUBLE_ROOT = CharPoly((1, -5, 3, 9))


def test_jacobi_matches_numpy(rng):
    for _ in range(60):
        G = random_graph(int(rng.integers(1, 13)), float(rng.uniform(0.1, 0.9)), rng)
        values = spectrum(G).values
        expected = sorted(np.linalg.eigvalsh(G.adjacency_matrix()), reverse=True)
        assert np.allclose(values, expected, atol=1e-10)


def test_jacobi_vectors_diagonalize():
    A = friendship(3).adjacency_matrix()
    values, vectors, bound = jacobi_eigh(A)
    assert np.allclose(vectors.T @ vectors, np.eye(7), atol=1e-12)
    assert np.allclose(A @ vectors, vectors * values, atol=1e-10)
    assert bound < 1e-10


@pytest.mark.parametrize("n", range(6, 51))
def test_threshold_identity_numeric(n):
    assert abs(spectral_radius(complete_bipartite(2, n - 2)) - math.sqrt(2 * n - 4)) < 1e-10


@pytest.mark.parametrize("n", range(6, 17))
def test_threshold_identity_exact(n):
    counted = count_eigs_above(complete_bipartite(2, n - 2), 2 * n - 4)
    assert counted.above == 0
    assert counted.is_eigenvalue


@pytest.mark.parametrize("n", [6, 24, 25, 50])
def test_threshold_identity_through_quotient(n):
    G = complete_bipartite(2, n - 2)
    Q = quotient_matrix(G, bipartite_partition(2, n - 2))
    assert Q.as_ints() == [[0, n - 2], [2, 0]]
    assert sign_at_sqrt(Q.char_poly(), 2 * n - 4).sign == 0


def test_power_iteration_agrees_with_jacobi(rng):
    for _ in range(30):
        G = random_connected_graph(int(rng.integers(2, 11)), 0.5, rng)
        assert abs(power_radius(G) - spectral_radius(G)) < 1e-8
    assert power_radius(empty(3)) == 0.0


def test_spectral_hygiene_small_classes():
    for n in range(1, 8):
        for G in all_graphs(n):
            values = np.array(spectrum(G).values)
            assert abs(values.sum()) < 1e-9
            assert abs((values ** 2).sum() - 2 * G.e) < 1e-9
            assert eigen_residual(G) < 1e-9


def test_perron_vector():
    data = perron(friendship(3))
    x = np.array(data.vector)
    assert data.argmax == 0
    assert np.all(x > 0)
    assert abs(np.linalg.norm(x) - 1) < 1e-12
    assert abs(data.rho - (1 + math.sqrt(25)) / 2) < 1e-10
    with pytest.raises(DisconnectedGraphError):
        perron(empty(2))


def test_perron_ties_pick_least_vertex():
    assert perron(complete(4)).argmax == 0


def test_char_poly_small_graphs():
    assert char_poly(complete(3)).coeffs == (1, 0, -3, -2)
    assert char_poly(path(3)).coeffs == (1, 0, -2, 0)
    assert str(char_poly(complete(3))) == "x^3-3x-2"
    with pytest.raises(SizeBudgetError):
        char_poly(path(25))


def test_char_poly_matches_numpy(rng):
    for _ in range(20):
        G = random_graph(int(rng.integers(2, 9)), 0.5, rng)
        expected = np.poly(G.adjacency_matrix())
        assert np.allclose([float(c) for c in char_poly(G).coeffs], expected, atol=1e-6)


@pytest.mark.parametrize("a, b, m, sign", [
    (1, -1, 2, -1),
    (-1, 1, 2, 1),
    (3, -2, 2, 1),
    (-3, 2, 2, -1),
    (0, 0, 5, 0),
    (2, -1, 4, 0),
    (5, 0, 7, 1),
])
def test_sign_of_sqrt_sum(a, b, m, sign):
    assert sign_of_sqrt_sum(a, b, m) == sign


def test_sign_at_sqrt():
    p = CharPoly((1, 0, -8))
    assert sign_at_sqrt(p, 8).sign == 0
    assert sign_at_sqrt(p, 9).sign == 1
    assert sign_at_sqrt(p, 7).sign == -1
    assert sign_at_sqrt(DOUBLE_ROOT, 9).sign == 0


def test_square_free_factors():
    factors = {(mult, -q[0] / q[1]) for mult, q in square_free_factors(DOUBLE_ROOT)}
    assert factors == {(1, Fraction(-1)), (2, Fraction(3))}


def test_sturm_sequence_chain():
    chain = sturm_sequence([Fraction(-2), Fraction(0), Fraction(1)])
    assert chain == [[-2, 0, 1], [0, 2], [2]]


@pytest.mark.parametrize("m, above, is_eigenvalue", [(4, 2, False), (9, 0, True), (10, 0, False), (1, 2, False)])
def test_root_counting_with_multiplicity(m, above, is_eigenvalue):
    counted = count_poly_roots_above(DOUBLE_ROOT, m)
    assert (counted.above, counted.is_eigenvalue) == (above, is_eigenvalue)


def test_real_roots_keep_repeated_roots():
    assert np.allclose(real_roots(DOUBLE_ROOT), [3, 3, -1], atol=1e-12)


def test_exact_counts_agree_with_numerics():
    for G in all_graphs(6):
        values = spectrum(G).values
        for m in (2, 5, 8):
            numeric = sum(1 for x in values if x > math.sqrt(m) + 1e-6)
            near = any(abs(x - math.sqrt(m)) <= 1e-6 for x in values)
            if not near:
                assert count_eigs_above(G, m).above == numeric


def test_pendant_friendship_quotient():
    G = friendship_pendant(2)
    P = pendant_partition(2)
    assert is_equitable(G, P)
    Q = quotient_matrix(G, P)
    assert Q.as_ints() == [[0, 4, 1], [1, 1, 0], [1, 0, 0]]
    f = Q.char_poly()
    assert f.coeffs == (1, -1, -5, 1)
    assert f.exact_at(2) == -5
    assert verify_quotient_lift(G, P)
    assert abs(quotient_eigenvalues(Q)[0] - spectral_radius(G)) < 1e-8


def test_non_equitable_partition():
    P = Partition.of([[0, 1], [2]])
    assert not is_equitable(path(3), P)
    with pytest.raises(NonEquitableError):
        verify_quotient_lift(path(3), P)
    with pytest.raises(PartitionError):
        is_equitable(path(3), Partition.of([[0], [1]]))


def test_quotient_of_bipartition():
    Q = quotient_matrix(complete_bipartite(2, 4), bipartite_partition(2, 4))
    assert np.allclose(quotient_eigenvalues(Q), [math.sqrt(8), -math.sqrt(8)], atol=1e-12)
    assert Q.trace() == 0


def test_kelmans_rotation_example():
    rotated = kelmans_rotate(path(4), 1, 2)
    assert rotated.edges() == [(0, 1), (1, 2), (1, 3)]
    assert spectral_radius(rotated) > spectral_radius(path(4))
    assert kelmans_rotate(complete(3), 0, 1) == complete(3)


def test_kelmans_rotation_increases_radius(rng):
    for _ in range(60):
        G = random_connected_graph(int(rng.integers(3, 10)), 0.4, rng)
        data = perron(G)
        x = data.vector
        for u in range(G.n):
            for v in range(G.n):
                if u == v or x[u] < x[v] - ARGMAX_TIE:
                    continue
                rotated = kelmans_rotate(G, u, v)
                if rotated != G:
                    assert spectral_radius(rotated) > data.rho + 1e-12
                    assert rotated.e == G.e


def _proper_subgraph(G: Graph, rng) -> Graph:
    """Delete a random vertex set (never all of V), then a random edge set"""
    while True:
        keep = [v for v in range(G.n) if rng.random() < 0.8] or [int(rng.integers(G.n))]
        H = induced_subgraph(G, keep)
        for u, v in H.edges():
            if rng.random() < 0.3:
                H = remove_edge(H, u, v)
        if H.n < G.n or H.e < G.e:
            return H


def test_subgraphs_never_raise_radius(rng):
    for _ in range(500):
        G = random_connected_graph(int(rng.integers(2, 11)), float(rng.uniform(0.2, 0.8)), rng)
        H = _proper_subgraph(G, rng)
        assert spectral_radius(H) <= spectral_radius(G) + 1e-10


def test_gamma_star():
    assert gamma_star(complete_bipartite(2, 4)) == 8
    assert gamma_star(star(5)) == 4
    with pytest.raises(DisconnectedGraphError):
        gamma_star(empty(3))


def test_threshold_decisions():
    on = compare_radius_to_sqrt(complete_bipartite(2, 4), 8)
    assert (on.sign, on.exact) == (0, True)
    below = compare_radius_to_sqrt(friendship_pendant(2), 8)
    assert below.sign == -1 and not below.exact
    above = compare_radius_to_sqrt(complete(6), 8)
    assert above.sign == 1 and not above.exact


def test_perron_entry_ratios():
    x = perron(star(4)).vector
    assert abs(x[0] / x[1] - math.sqrt(3)) < 1e-10
    data = perron(complete_bipartite(2, 4))
    assert data.argmax in (0, 1)
    assert abs(data.vector[0] / data.vector[2] - math.sqrt(2)) < 1e-10


def test_radius_between_average_and_max_degree():
    for G in all_graphs(6):
        rho = spectral_radius(G)
        degrees = G.degrees()
        assert 2 * G.e / G.n - 1e-10 <= rho <= max(degrees) + 1e-10
        if len(set(degrees)) == 1:
            assert abs(rho - degrees[0]) < 1e-10


@pytest.mark.parametrize("n", [3, 4, 6])
def test_gamma_star_complete(n):
    assert gamma_star(complete(n)) == (n - 1) + (n - 1) * (n - 2)


def test_jacobi_converges_on_star():
    result = spectrum(star(5))
    assert abs(result.radius - 2.0) <= result.accuracy
    assert result.accuracy < 1e-12
    assert eigen_residual(star(5)) < 1e-12


def test_jacobi_bound_covers_true_error(rng):
    for _ in range(40):
        G = random_graph(int(rng.integers(2, 13)), float(rng.uniform(0.1, 0.9)), rng)
        result = spectrum(G)
        expected = sorted(np.linalg.eigvalsh(G.adjacency_matrix()), reverse=True)
        assert np.max(np.abs(np.array(result.values) - expected)) <= result.accuracy + 1e-12


def test_power_brackets_contain_radius(rng):
    for _ in range(30):
        G = random_connected_graph(int(rng.integers(2, 11)), 0.4, rng)
        rho = spectral_radius(G)
        for step, (low, high) in enumerate(power_brackets(G.adjacency_matrix())):
            assert low - 1e-12 <= rho <= high + 1e-12
            if step == 50:
                break


def test_component_blocks():
    G = disjoint_union(complete(3), path(2))
    blocks = sorted(component_blocks(G), key=len)
    assert [len(b) for b in blocks] == [2, 3]
    assert blocks[1].sum() == 6


def test_radius_disagreement_is_small(rng):
    for _ in range(20):
        G = random_graph(int(rng.integers(1, 11)), 0.5, rng)
        assert radius_disagreement(G) < 1e-9


def test_threshold_decision_on_disconnected_graphs():
    on = compare_radius_to_sqrt(disjoint_union(complete_bipartite(2, 4), empty(1)), 8)
    assert (on.sign, on.exact) == (0, True)
    above = compare_radius_to_sqrt(disjoint_union(empty(2), complete(6)), 8)
    assert above.sign == 1 and not above.exact
    assert 5 - 1e-6 < above.rho < 5 + 1e-6


def test_perron_argmax_on_symmetric_path():
    G = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)])
    assert same_orbit(G, 0, 1)
    assert perron(G).argmax == 0


def test_perron_argmax_is_least_in_its_orbit():
    for n in range(1, 8):
        for G in all_graphs(n, connected_only=True):
            u = perron(G).argmax
            assert not any(same_orbit(G, w, u) for w in range(u))
