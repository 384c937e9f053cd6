"""
Graph core - immutable simple undirected graphs on vertices 0..n-1
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

MAX_ORDER = 64


class GraphError(ValueError):
    """Base class for every graph-level error raised by this project"""


class VertexError(GraphError):
    """Out-of-range vertex index or a forbidden loop"""


class Graph6Error(GraphError):
    """Malformed graph6 text"""


class SizeBudgetError(GraphError):
    """Input exceeds the size budget of an exact or exhaustive routine"""


class PartitionError(GraphError):
    """Cells do not partition the vertex set"""


class DisconnectedGraphError(GraphError):
    """Operation needs a connected graph"""


class NonEquitableError(GraphError):
    """Partition is not equitable"""


@dataclass(frozen=True)
class VertexSet:
    """Subset of [0, n) with bitset semantics"""
    n: int
    mask: int

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise VertexError(f"vertex {v} outside [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adjacency kept as one bitmask per vertex.

    Instances are never mutated: every combinator returns a new graph.
    """
    n: int
    masks: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.masks) != self.n:
            raise GraphError("one adjacency mask per vertex required")
        full = (1 << self.n) - 1
        for u, mask in enumerate(self.masks):
            if mask & ~full:
                raise VertexError(f"neighbor of {u} outside [0, {self.n})")
            if mask >> u & 1:
                raise VertexError(f"loop at vertex {u}")
            for v in _bits(mask):
                if not self.masks[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def trusted(cls, n: int, masks: Tuple[int, ...]) -> "Graph":
        """Build without validation; masks must already be symmetric and loop-free"""
        G = object.__new__(cls)
        object.__setattr__(G, "n", n)
        object.__setattr__(G, "masks", masks)
        return G

    # -- statistics -------------------------------------------------------

    @property
    def adj(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbor tuples, one per vertex"""
        return tuple(tuple(_bits(m)) for m in self.masks)

    @property
    def e(self) -> int:
        return sum(bin(m).count("1") for m in self.masks) // 2

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return bin(self.masks[v]).count("1")

    def degrees(self) -> List[int]:
        return [bin(m).count("1") for m in self.masks]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        _check_vertex(self.n, v)
        return tuple(_bits(self.masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.masks[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in _bits(self.masks[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        if self.n < 63:
            rows = np.array(self.masks, dtype=np.int64)[:, None] >> np.arange(self.n, dtype=np.int64)
            return (rows & 1).astype(dtype)
        matrix = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
        raise VertexError(f"vertex {v} outside [0, {n})")


def _check_pair(n: int, u: int, v: int) -> None:
    _check_vertex(n, u)
    _check_vertex(n, v)
    if u == v:
        raise VertexError(f"loop at vertex {u} is not allowed")


# -- basic constructors -----------------------------------------------------

def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    return Graph(n, (0,) * n)


def add_edge(G: Graph, u: int, v: int) -> Graph:
    """Return G + uv; adding an existing edge returns an equal graph"""
    _check_pair(G.n, u, v)
    masks = list(G.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph(G.n, tuple(masks))


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    _check_pair(G.n, u, v)
    masks = list(G.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(G.n, tuple(masks))


# -- set statistics -----------------------------------------------------------

def edges_within(G: Graph, S: VertexSet) -> int:
    """e(S): edges with both endpoints in S"""
    return sum(bin(G.masks[v] & S.mask).count("1") for v in _bits(S.mask)) // 2


def edges_between(G: Graph, S: VertexSet, T: VertexSet) -> int:
    """e(S, T) for disjoint S and T"""
    if S.mask & T.mask:
        raise GraphError("edges_between needs disjoint vertex sets")
    return sum(bin(G.masks[v] & T.mask).count("1") for v in _bits(S.mask))


# -- combinators --------------------------------------------------------------

def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """G1 + G2; vertices of G2 are shifted by |G1|"""
    shift = G1.n
    return Graph(G1.n + G2.n, G1.masks + tuple(m << shift for m in G2.masks))


def join(G1: Graph, G2: Graph) -> Graph:
    """G1 ∇ G2: the disjoint union plus every edge between the two sides"""
    shift = G1.n
    left = ((1 << G2.n) - 1) << shift
    right = (1 << G1.n) - 1
    masks = tuple(m | left for m in G1.masks) + tuple((m << shift) | right for m in G2.masks)
    return Graph(G1.n + G2.n, masks)


def add_pendant(G: Graph, a: int) -> Graph:
    """Attach a new vertex (index |G|) adjacent only to a"""
    _check_vertex(G.n, a)
    masks = list(G.masks)
    masks[a] |= 1 << G.n
    masks.append(1 << a)
    return Graph(G.n + 1, tuple(masks))


def identify(G1: Graph, u: int, G2: Graph, v: int) -> Graph:
    """Glue vertex v of G2 onto vertex u of G1.

    The merged vertex keeps index u; the other vertices of G2 follow the
    vertices of G1 in their original order.
    """
    _check_vertex(G1.n, u)
    _check_vertex(G2.n, v)
    mapping = {}
    nxt = G1.n
    for w in range(G2.n):
        if w == v:
            mapping[w] = u
        else:
            mapping[w] = nxt
            nxt += 1
    edges = set(G1.edges())
    for a, b in G2.edges():
        x, y = mapping[a], mapping[b]
        edges.add((min(x, y), max(x, y)))
    return Graph.from_edges(G1.n + G2.n - 1, sorted(edges))


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """G[S] relabelled so that vertices[i] becomes i"""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in G.edges() if u in index and v in index]
    return Graph.from_edges(len(vertices), edges)


def permute(G: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex v as perm[v]"""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("perm must be a permutation of the vertex set")
    return Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(G.masks)))


def components(G: Graph) -> List[FrozenSet[int]]:
    """Connected components, ordered by least vertex"""
    seen = 0
    result = []
    for start in range(G.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= G.masks[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        result.append(frozenset(_bits(comp)))
    return result


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return len(components(G)) == 1
