"""
Chorded-cycle detection through Menger's theorem.

An edge uv is a chord of some cycle iff G - uv still has two internally
vertex-disjoint u-v paths; both paths then have length >= 2 and their union
is a cycle through u and v.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from graphs.core import Graph, GraphError, VertexError, remove_edge

logger = logging.getLogger(__name__)

Path = List[int]


@dataclass(frozen=True)
class ChordedWitness:
    cycle: Tuple[int, ...]
    chord: Tuple[int, int]

    def is_valid(self, G: Graph) -> bool:
        """Re-check the certificate against G from scratch"""
        c = self.cycle
        k = len(c)
        if k < 4 or len(set(c)) != k or any(not 0 <= x < G.n for x in c):
            return False
        if any(not G.has_edge(c[i], c[(i + 1) % k]) for i in range(k)):
            return False
        a, b = self.chord
        if a not in c or b not in c or not G.has_edge(a, b):
            return False
        gap = abs(c.index(a) - c.index(b))
        return gap not in (0, 1, k - 1)

    def validate(self, G: Graph) -> "ChordedWitness":
        if not self.is_valid(G):
            raise GraphError(f"invalid chorded-cycle witness: {self}")
        return self

    def __str__(self) -> str:
        return f"cycle {' '.join(map(str, self.cycle))} chord {self.chord[0]}-{self.chord[1]}"


class _FlowNetwork:
    """Vertex-split unit-capacity network: x_in = 2x, x_out = 2x + 1"""

    def __init__(self, G: Graph, source: int, sink: int):
        self.residual: Dict[int, Dict[int, int]] = {i: {} for i in range(2 * G.n)}
        for x in range(G.n):
            through = 2 if x in (source, sink) else 1
            self._arc(2 * x, 2 * x + 1, through)
        for a, b in G.edges():
            self._arc(2 * a + 1, 2 * b, 1)
            self._arc(2 * b + 1, 2 * a, 1)
        self.capacity = {x: dict(arcs) for x, arcs in self.residual.items()}

    def _arc(self, x: int, y: int, cap: int) -> None:
        self.residual[x][y] = self.residual[x].get(y, 0) + cap
        self.residual[y].setdefault(x, 0)

    def _augmenting_path(self, s: int, t: int) -> Optional[Dict[int, int]]:
        parent = {s: s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, cap in self.residual[x].items():
                if cap > 0 and y not in parent:
                    parent[y] = x
                    if y == t:
                        return parent
                    queue.append(y)
        return None

    def max_flow(self, s: int, t: int, limit: int) -> int:
        """Edmonds-Karp augmentation, stopping once the flow reaches limit"""
        flow = 0
        while flow < limit:
            parent = self._augmenting_path(s, t)
            if parent is None:
                break
            y = t
            while y != s:
                x = parent[y]
                self.residual[x][y] -= 1
                self.residual[y][x] += 1
                y = x
            flow += 1
        return flow

    def flow_on(self, x: int, y: int) -> int:
        return max(0, self.capacity[x].get(y, 0) - self.residual[x][y])


def two_disjoint_paths(G: Graph, u: int, v: int) -> Optional[Tuple[Path, Path]]:
    """Two u-v paths sharing no internal vertex, or None"""
    for x in (u, v):
        if not 0 <= x < G.n:
            raise VertexError(f"vertex {x} outside [0, {G.n})")
    if u == v:
        raise VertexError("two_disjoint_paths needs distinct endpoints")
    net = _FlowNetwork(G, u, v)
    if net.max_flow(2 * u + 1, 2 * v, 2) < 2:
        return None

    used: Dict[Tuple[int, int], int] = {}
    paths = []
    for _ in range(2):
        path = [u]
        x = u
        while x != v:
            for y in G.neighbors(x):
                arc = (2 * x + 1, 2 * y)
                if net.flow_on(*arc) - used.get(arc, 0) > 0:
                    used[arc] = used.get(arc, 0) + 1
                    break
            else:
                raise RuntimeError("flow decomposition lost its way")
            if y in path:
                # circulation through an earlier vertex: cut the loop
                path = path[:path.index(y) + 1]
            else:
                path.append(y)
            x = y
        paths.append(path)
    return paths[0], paths[1]


def find_chorded_cycle(G: Graph, detector: str = "flow") -> Optional[ChordedWitness]:
    """Witness for the lexicographically first edge that is a chord.

    detector="oracle" delegates to the cycle-enumeration oracle instead.
    """
    if detector == "oracle":
        from .oracle import find_chorded_cycle_oracle
        return find_chorded_cycle_oracle(G)
    if detector != "flow":
        raise ValueError(f"unknown detector {detector!r}")
    degrees = G.degrees()
    for u, v in G.edges():
        if degrees[u] < 3 or degrees[v] < 3:
            continue
        paths = two_disjoint_paths(remove_edge(G, u, v), u, v)
        if paths is None:
            continue
        first, second = paths
        cycle = tuple(first) + tuple(reversed(second[1:-1]))
        return ChordedWitness(cycle, (u, v))
    return None


def posa_bound_holds(G: Graph, threshold: Optional[int] = None) -> bool:
    """False only for a graph with at least 2n-3 edges and no chorded cycle"""
    if threshold is None:
        threshold = 2 * G.n - 3
    return G.e < threshold or find_chorded_cycle(G) is not None
