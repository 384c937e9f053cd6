"""
Exhaustive cycle enumeration, kept as an independent oracle for the
Menger-based detector.
"""

import logging
from typing import List, Optional

from graphs.core import Graph, SizeBudgetError
from .detector import ChordedWitness

logger = logging.getLogger(__name__)

ORACLE_MAX_ORDER = 12
ORACLE_MAX_PATHS = 10_000_000


def _chord_of(G: Graph, cycle: List[int]) -> Optional[ChordedWitness]:
    k = len(cycle)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if G.has_edge(cycle[i], cycle[j]):
                return ChordedWitness(tuple(cycle), (min(cycle[i], cycle[j]), max(cycle[i], cycle[j])))
    return None


def find_chorded_cycle_oracle(G: Graph, max_order: int = ORACLE_MAX_ORDER,
                              max_paths: int = ORACLE_MAX_PATHS) -> Optional[ChordedWitness]:
    """DFS over simple paths starting at their least vertex; every closed
    path of length >= 4 is tested for a chord."""
    if G.n > max_order:
        raise SizeBudgetError(f"cycle oracle limited to n <= {max_order}, got {G.n}")
    explored = 0

    for start in range(G.n):
        above = ~((1 << (start + 1)) - 1)
        stack = [(start, [start], 1 << start)]
        while stack:
            x, path, on_path = stack.pop()
            explored += 1
            if explored > max_paths:
                raise SizeBudgetError(f"cycle oracle gave up after {max_paths} paths")
            if len(path) >= 4 and G.has_edge(x, start):
                # edges induced by the cycle's vertex set beyond its own k edges
                induced = sum(bin(G.masks[y] & on_path).count("1") for y in path) // 2
                if induced > len(path):
                    return _chord_of(G, path)
            nxt = G.masks[x] & above & ~on_path
            while nxt:
                low = nxt & -nxt
                y = low.bit_length() - 1
                stack.append((y, path + [y], on_path | low))
                nxt ^= low
    return None


def has_chorded_cycle_oracle(G: Graph, max_order: int = ORACLE_MAX_ORDER,
                             max_paths: int = ORACLE_MAX_PATHS) -> bool:
    return find_chorded_cycle_oracle(G, max_order, max_paths) is not None
