"""
Isomorph-free generation of all graphs of a given order by canonical
augmentation: a child G + v is kept only when v lies in the orbit of the
canonically chosen last vertex, and isomorphic siblings are dropped.
"""

import logging
from typing import Iterator, List, Optional, Set, Tuple

from .canon import canonical_search, orbit, same_orbit
from .core import Graph, SizeBudgetError, is_connected

logger = logging.getLogger(__name__)

MAX_ORDER = 10


def _check_order(n: int, max_order: int = MAX_ORDER) -> None:
    if not 1 <= n <= max_order:
        raise SizeBudgetError(f"enumeration supports 1 <= n <= {max_order}, got {n}")


def _vertex_key(G: Graph, degrees: List[int], v: int) -> Tuple[int, Tuple[int, ...]]:
    return degrees[v], tuple(sorted(degrees[w] for w in G.neighbors(v)))


def _accept(child: Graph, new_vertex: int) -> Optional[Tuple[int, tuple]]:
    """Canonical code of child if the augmentation is canonical, else None.

    The last vertex is chosen among the vertices of least (degree,
    neighbor-degree) key as the one with the greatest canonical position.
    """
    degrees = child.degrees()
    least_degree = min(degrees)
    if degrees[new_vertex] != least_degree:
        return None
    keys = {v: _vertex_key(child, degrees, v) for v in range(child.n) if degrees[v] == least_degree}
    least = min(keys.values())
    if keys[new_vertex] != least:
        return None
    candidates = [v for v, key in keys.items() if key == least]
    order, code, automorphisms = canonical_search(child)
    if len(candidates) > 1:
        position = {v: i for i, v in enumerate(order)}
        chosen = max(candidates, key=position.__getitem__)
        # automorphisms from the search need not generate all of Aut(child)
        if chosen not in orbit(automorphisms, new_vertex) and not same_orbit(child, new_vertex, chosen):
            return None
    return child.n, code


def children(G: Graph) -> Iterator[Graph]:
    """Canonical one-vertex extensions of G, in increasing neighbor-mask order"""
    n = G.n
    seen: Set[Tuple[int, tuple]] = set()
    for nbrs in range(1 << n):
        masks = tuple(m | ((nbrs >> u & 1) << n) for u, m in enumerate(G.masks)) + (nbrs,)
        child = Graph.trusted(n + 1, masks)
        code = _accept(child, n)
        if code is None or code in seen:
            continue
        seen.add(code)
        yield child


def expand(root: Graph, n: int) -> Iterator[Graph]:
    """Depth-first stream of the order-n descendants of root"""
    if root.n == n:
        yield root
        return
    for child in children(root):
        yield from expand(child, n)


def all_graphs(n: int, connected_only: bool = False, max_order: int = MAX_ORDER) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs"""
    _check_order(n, max_order)
    for G in expand(Graph(1, (0,)), n):
        if not connected_only or is_connected(G):
            yield G


def subtree_roots(n: int, split_depth: int = 5) -> List[Graph]:
    """Augmentation-tree nodes at order min(n, split_depth), in stream order"""
    _check_order(n)
    return list(all_graphs(min(n, split_depth)))


def count_classes(n: int) -> int:
    _check_order(n)
    return sum(1 for _ in all_graphs(n))
