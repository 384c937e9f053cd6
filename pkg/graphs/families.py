"""
Named graph families with fixed labelling conventions.

Hubs sit at vertex 0 and bipartition sides are contiguous, so the
equitable partitions in spectra.partitions can name cells by index.
"""

from typing import List, Tuple

import numpy as np

from .core import Graph, GraphError, add_pendant, empty, identify, is_connected, join


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: parts {0..s-1} and {s..s+t-1}"""
    if s < 0 or t < 0:
        raise GraphError(f"part sizes must be non-negative, got ({s}, {t})")
    return join(empty(s), empty(t))


def friendship(k: int) -> Graph:
    """F_k: hub 0, triangle i on {0, 2i-1, 2i}"""
    if k < 1:
        raise GraphError(f"friendship graph needs k >= 1, got {k}")
    edges: List[Tuple[int, int]] = []
    for i in range(1, k + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def friendship_pendant(k: int) -> Graph:
    """F_k with a pendant vertex (index 2k+1) hung on the hub"""
    return add_pendant(friendship(k), 0)


def _check_k2a(a: int, k: int) -> None:
    if a < 2 or k < 1:
        raise GraphError(f"K_(2,a) glued to F_k needs a >= 2 and k >= 1, got a={a}, k={k}")


def k2a_bullet_f(a: int, k: int) -> Graph:
    """K_{2,a} • F_k: the hub of F_k glued onto an a-side vertex.

    Labels: 0,1 the 2-side; 2 the merged vertex; 3..a+1 the rest of the
    a-side; a+2..a+2k+1 the friendship leaves.
    """
    _check_k2a(a, k)
    return identify(complete_bipartite(2, a), 2, friendship(k), 0)


def k2a_star_f(a: int, k: int) -> Graph:
    """K_{2,a} * F_k: the hub of F_k glued onto a 2-side vertex.

    Labels: 0 the merged vertex; 1 the other 2-side vertex; 2..a+1 the
    a-side; a+2..a+2k+1 the friendship leaves.
    """
    _check_k2a(a, k)
    return identify(complete_bipartite(2, a), 0, friendship(k), 0)


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0"""
    if n < 1:
        raise GraphError("star needs at least one vertex")
    return complete_bipartite(1, n - 1)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle on 1..n-1"""
    if n < 4:
        raise GraphError(f"wheel needs n >= 4, got {n}")
    return join(empty(1), cycle(n - 1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p) sample drawn from rng"""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    coins = rng.random((n, n)) < p
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v]])


def random_connected_graph(n: int, p: float, rng: np.random.Generator, attempts: int = 1000) -> Graph:
    for _ in range(attempts):
        G = random_graph(n, p, rng)
        if is_connected(G):
            return G
    raise GraphError(f"no connected G({n}, {p}) sample after {attempts} attempts")
