"""
Canonical labelling by individualization-refinement.

Ordered partitions are refined to equitable ones by neighbor-count
signatures; the search individualizes vertices of the first non-singleton
cell and keeps the lexicographically least relabelled adjacency code.
Automorphisms discovered at the leaves prune sibling branches.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .core import Graph, GraphError, permute

logger = logging.getLogger(__name__)

Cells = List[List[int]]
Code = Tuple[int, ...]


@dataclass(frozen=True)
class GraphId:
    """Isomorphism-class identifier: graph6 bytes of the canonical relabelling"""
    canon: bytes

    def __str__(self) -> str:
        return self.canon.decode("ascii")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def refine(G: Graph, cells: Cells) -> Cells:
    """Split cells until every vertex of a cell sees the same number of
    neighbors in every cell. Subcells replace their parent in place, ordered
    by signature."""
    cells = [list(c) for c in cells]
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                sig = tuple(_popcount(G.masks[v] & cm) for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                refined.append(groups[sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _leaf_code(G: Graph, order: Sequence[int]) -> Code:
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        mask = G.masks[v]
        while mask:
            low = mask & -mask
            row |= 1 << pos[low.bit_length() - 1]
            mask ^= low
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, G: Graph):
        self.G = G
        self.best_code: Optional[Code] = None
        self.best_order: Optional[List[int]] = None
        self.first_code: Optional[Code] = None
        self.first_order: Optional[List[int]] = None
        self.generators: List[Tuple[int, ...]] = []

    def run(self, cells: Cells) -> None:
        self._visit(refine(self.G, cells), [])

    def _visit(self, cells: Cells, path: List[int]) -> None:
        target_index = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target_index is None:
            self._leaf([c[0] for c in cells])
            return
        target = sorted(cells[target_index])
        explored: List[int] = []
        for v in target:
            if explored and self._in_explored_orbit(v, explored, path):
                continue
            explored.append(v)
            rest = [w for w in cells[target_index] if w != v]
            child = cells[:target_index] + [[v], rest] + cells[target_index + 1:]
            self._visit(refine(self.G, child), path + [v])

    def _leaf(self, order: List[int]) -> None:
        code = _leaf_code(self.G, order)
        if self.first_code is None:
            self.first_code, self.first_order = code, order
            self.best_code, self.best_order = code, order
            return
        if code == self.first_code:
            self._record_automorphism(self.first_order, order)
        elif code == self.best_code:
            self._record_automorphism(self.best_order, order)
        if code < self.best_code:
            self.best_code, self.best_order = code, order

    def _record_automorphism(self, source: List[int], target: List[int]) -> None:
        gamma = [0] * self.G.n
        for a, b in zip(source, target):
            gamma[a] = b
        self.generators.append(tuple(gamma))

    def _in_explored_orbit(self, v: int, explored: List[int], path: List[int]) -> bool:
        gens = [g for g in self.generators if all(g[p] == p for p in path)]
        if not gens:
            return False
        images = orbit(gens, v)
        return any(w in images for w in explored)


def canonical_search(G: Graph, coloring: Optional[Sequence[Sequence[int]]] = None
                     ) -> Tuple[Tuple[int, ...], Code, List[Tuple[int, ...]]]:
    """(canonical order, winning code, automorphisms met on the way).

    The automorphisms generate a subgroup of Aut(G), not always all of it.
    """
    if G.n == 0:
        return (), (), []
    cells = [list(c) for c in coloring] if coloring is not None else [list(range(G.n))]
    if sorted(v for c in cells for v in c) != list(range(G.n)) or any(not c for c in cells):
        raise GraphError("coloring must be an ordered partition of the vertex set")
    search = _Search(G)
    search.run(cells)
    return tuple(search.best_order), search.best_code, search.generators


def canonical_order(G: Graph, coloring: Optional[Sequence[Sequence[int]]] = None) -> Tuple[Tuple[int, ...], Code]:
    """Vertices listed in canonical position order, with the winning code.

    coloring, when given, is an ordered partition that isomorphisms must
    respect cell by cell.
    """
    order, code, _ = canonical_search(G, coloring)
    return order, code


def orbit(generators: Sequence[Sequence[int]], v: int) -> Set[int]:
    """Images of v under the group the permutations generate"""
    seen = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in generators:
            if g[x] not in seen:
                seen.add(g[x])
                frontier.append(g[x])
    return seen


def canonical_labeling(G: Graph) -> Tuple[int, ...]:
    """perm with perm[v] = canonical label of v"""
    order, _ = canonical_order(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return tuple(perm)


def canonical_graph(G: Graph) -> Graph:
    return permute(G, canonical_labeling(G))


def canonical_form(G: Graph) -> GraphId:
    from .graph6 import to_graph6
    return GraphId(to_graph6(canonical_graph(G)).encode("ascii"))


def canonical_code(G: Graph, coloring: Optional[Sequence[Sequence[int]]] = None) -> Tuple[int, Code]:
    """Hashable isomorphism invariant, cheaper than canonical_form"""
    _, code = canonical_order(G, coloring)
    return G.n, code


def same_orbit(G: Graph, v: int, w: int) -> bool:
    """True iff some automorphism of G maps v to w"""
    if v == w:
        return True
    rest_v = [x for x in range(G.n) if x != v]
    rest_w = [x for x in range(G.n) if x != w]
    return canonical_code(G, [rest_v, [v]]) == canonical_code(G, [rest_w, [w]])


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.e == H.e and canonical_code(G) == canonical_code(H)
