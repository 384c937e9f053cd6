"""
Numeric eigensolvers for adjacency matrices: cyclic Jacobi for the full
spectrum, shifted power iteration as an independent check of the spectral
radius, and the Perron vector of connected graphs.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

import numpy as np

from graphs.core import DisconnectedGraphError, Graph, GraphError, components, is_connected

logger = logging.getLogger(__name__)

JACOBI_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 50
POWER_TOLERANCE = 1e-13
POWER_MAX_ITERATIONS = 100000
# Perron entries closer than this count as tied
ARGMAX_TIE = 1e-9
EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending with an absolute a-posteriori error bound"""
    values: Tuple[float, ...]
    accuracy: float

    @property
    def radius(self) -> float:
        return self.values[0]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]


@dataclass(frozen=True)
class PerronData:
    vector: Tuple[float, ...]
    rho: float
    argmax: int


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


@lru_cache(maxsize=None)
def _rotation_rounds(n: int) -> Tuple[Tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule: every pair p < q exactly once per sweep, in
    rounds of pairwise disjoint pairs"""
    slots = list(range(n + n % 2))
    m = len(slots)
    rounds = []
    for _ in range(m - 1):
        pairs = [(min(slots[i], slots[m - 1 - i]), max(slots[i], slots[m - 1 - i])) for i in range(m // 2)]
        pairs = [pq for pq in pairs if pq[1] < n]
        if pairs:
            rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        slots = [slots[0], slots[-1]] + slots[1:-1]
    return tuple(rounds)


def _rotate_round(a: np.ndarray, v: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
    """Annihilate a[p, q] for a round of disjoint pairs at once"""
    apq = a[p, q]
    active = np.abs(apq) > 1e-300
    if not active.any():
        return
    p, q, apq = p[active], q[active], apq[active]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = np.copysign(1.0, theta) / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c
    J = np.eye(a.shape[0])
    J[p, p] = c
    J[q, q] = c
    J[p, q] = s
    J[q, p] = -s
    a[:] = J.T @ a @ J
    a[:] = (a + a.T) / 2.0
    a[p, q] = 0.0
    a[q, p] = 0.0
    v[:] = v @ J


def jacobi_eigh(matrix: np.ndarray, tolerance: float = JACOBI_TOLERANCE,
                max_sweeps: int = JACOBI_MAX_SWEEPS) -> Tuple[np.ndarray, np.ndarray, float]:
    """Cyclic Jacobi rotations on a real symmetric matrix.

    Returns (eigenvalues, eigenvectors as columns, error bound). The bound
    is the Frobenius norm of the remaining off-diagonal part plus a rounding
    term; by Weyl's inequality it bounds every eigenvalue error.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise GraphError("jacobi_eigh needs a square symmetric matrix")
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    # below n * eps the off-diagonal part is rounding noise
    threshold = max(tolerance, n * EPS) * scale

    off = _off_norm(a)
    sweeps = 0
    while off > threshold and sweeps < max_sweeps:
        sweeps += 1
        for p, q in _rotation_rounds(n):
            _rotate_round(a, v, p, q)
        off = _off_norm(a)

    if off > threshold:
        logger.warning(f"⚠️ Jacobi stopped after {sweeps} sweeps with off-diagonal norm {off:.3e}")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    bound = off + 4 * n * EPS * scale
    return values[order], v[:, order], float(bound)


def spectrum(G: Graph, tolerance: float = JACOBI_TOLERANCE, max_sweeps: int = JACOBI_MAX_SWEEPS) -> Spectrum:
    if G.n == 0:
        raise GraphError("spectrum of the empty graph is undefined")
    values, _, bound = jacobi_eigh(G.adjacency_matrix(), tolerance, max_sweeps)
    return Spectrum(tuple(float(x) for x in values), bound)


def spectral_radius(G: Graph, tolerance: float = JACOBI_TOLERANCE, max_sweeps: int = JACOBI_MAX_SWEEPS) -> float:
    """λ1 of A(G); for disconnected G this is the largest component radius"""
    return spectrum(G, tolerance, max_sweeps).values[0]


def component_blocks(G: Graph) -> List[np.ndarray]:
    """Adjacency matrices of the connected components"""
    a = G.adjacency_matrix()
    blocks = []
    for comp in components(G):
        members = sorted(comp)
        blocks.append(a[np.ix_(members, members)])
    return blocks


def power_brackets(block: np.ndarray, max_iterations: int = POWER_MAX_ITERATIONS) -> Iterator[Tuple[float, float]]:
    """Successive (low, high) with low <= λ1 <= high for a connected block.

    Power iteration on the primitive matrix B = A + I; for positive x the
    Collatz-Wielandt ratios (Bx)_i / x_i bracket ρ(B) and close in on it.
    The unit shift keeps -λ1 of bipartite graphs from competing with λ1.
    """
    shifted = block + np.eye(len(block))
    x = np.ones(len(block))
    for _ in range(max_iterations):
        y = shifted @ x
        ratios = y / x
        yield float(ratios.min()) - 1.0, float(ratios.max()) - 1.0
        x = shifted @ y
        x /= x.max()


def power_radius(G: Graph, tolerance: float = POWER_TOLERANCE,
                 max_iterations: int = POWER_MAX_ITERATIONS) -> float:
    """λ1 by power iteration, one component at a time.

    Stops once the Collatz-Wielandt bracket is narrower than tolerance.
    """
    if G.n == 0:
        raise GraphError("spectral radius of the empty graph is undefined")
    radius = 0.0
    for block in component_blocks(G):
        low = high = 0.0
        for low, high in power_brackets(block, max_iterations):
            if high - low < tolerance:
                break
        else:
            logger.warning(f"⚠️ Power iteration did not settle within {max_iterations} steps")
        radius = max(radius, (low + high) / 2.0)
    return radius


def perron(G: Graph, tolerance: float = JACOBI_TOLERANCE, max_sweeps: int = JACOBI_MAX_SWEEPS) -> PerronData:
    """Positive unit eigenvector for λ1 of a connected graph.

    Entries within ARGMAX_TIE of the maximum count as tied; the least
    vertex index wins.
    """
    if G.n == 0 or not is_connected(G):
        raise DisconnectedGraphError("Perron vector needs a connected graph")
    values, vectors, _ = jacobi_eigh(G.adjacency_matrix(), tolerance, max_sweeps)
    x = vectors[:, 0]
    if x.sum() < 0:
        x = -x
    x = np.abs(x)
    x = x / np.linalg.norm(x)
    top = float(x.max())
    argmax = next(v for v in range(G.n) if x[v] >= top - ARGMAX_TIE)
    return PerronData(tuple(float(t) for t in x), float(values[0]), argmax)


def eigen_residual(G: Graph, tolerance: float = JACOBI_TOLERANCE, max_sweeps: int = JACOBI_MAX_SWEEPS) -> float:
    """max ||A q - λ q||_2 over the Jacobi eigenpairs"""
    a = G.adjacency_matrix()
    values, vectors, _ = jacobi_eigh(a, tolerance, max_sweeps)
    return float(max(np.linalg.norm(a @ vectors[:, i] - values[i] * vectors[:, i]) for i in range(G.n)))


def radius_disagreement(G: Graph, jacobi_tolerance: float = JACOBI_TOLERANCE,
                        jacobi_max_sweeps: int = JACOBI_MAX_SWEEPS,
                        power_tolerance: float = POWER_TOLERANCE,
                        power_max_iterations: int = POWER_MAX_ITERATIONS) -> float:
    """|Jacobi λ1 - power-iteration λ1|; logged when beyond the Jacobi bound"""
    result = spectrum(G, jacobi_tolerance, jacobi_max_sweeps)
    gap = abs(result.radius - power_radius(G, power_tolerance, power_max_iterations))
    if gap > result.accuracy + power_tolerance:
        logger.warning(f"⚠️ Jacobi and power iteration disagree on λ1 by {gap:.3e} "
                       f"(Jacobi bound {result.accuracy:.3e})")
    return gap
