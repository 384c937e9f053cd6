"""
Graph operations driven by the spectral argument: the Kelmans rotation,
the walk count gamma(u*) and the decision band around sqrt(m).
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from graphs.core import DisconnectedGraphError, Graph, VertexError, VertexSet, edges_between, edges_within, is_connected
from .exact import EXACT_MAX_ORDER, count_eigs_above
from .numeric import JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE, POWER_MAX_ITERATIONS, component_blocks, perron, power_brackets

logger = logging.getLogger(__name__)

DECISION_BAND = 1e-6


def kelmans_rotate(G: Graph, u: int, v: int) -> Graph:
    """Move the edges vw, w in N(v) minus (N(u) + u), over to u.

    Returns G itself when there is nothing to move.
    """
    for x in (u, v):
        if not 0 <= x < G.n:
            raise VertexError(f"vertex {x} outside [0, {G.n})")
    if u == v:
        raise VertexError("kelmans_rotate needs two distinct vertices")
    moved = G.masks[v] & ~G.masks[u] & ~(1 << u)
    if not moved:
        return G
    masks = list(G.masks)
    masks[v] &= ~moved
    masks[u] |= moved
    w_bits = moved
    while w_bits:
        low = w_bits & -w_bits
        w = low.bit_length() - 1
        masks[w] = (masks[w] & ~(1 << v)) | (1 << u)
        w_bits ^= low
    return Graph(G.n, tuple(masks))


def gamma_star(G: Graph, tolerance: float = JACOBI_TOLERANCE, max_sweeps: int = JACOBI_MAX_SWEEPS) -> int:
    """|A| + 2e(A) + e(A, B) for A = N(u*), B the rest beyond u*"""
    if G.n == 0 or not is_connected(G):
        raise DisconnectedGraphError("gamma_star needs a connected graph")
    u_star = perron(G, tolerance, max_sweeps).argmax
    A = VertexSet(G.n, G.masks[u_star])
    B = VertexSet(G.n, ((1 << G.n) - 1) & ~A.mask & ~(1 << u_star))
    return len(A) + 2 * edges_within(G, A) + edges_between(G, A, B)


@dataclass(frozen=True)
class ThresholdDecision:
    """Comparison of ρ(G) with sqrt(m): sign -1, 0 or +1, with the bracket
    low <= ρ(G) <= high that settled it"""
    sign: int
    low: float
    high: float
    exact: bool

    @property
    def rho(self) -> float:
        return (self.low + self.high) / 2.0


def _bracket_block(block: np.ndarray, target: float, band: float, max_iterations: int) -> Tuple[float, float]:
    low, high = 0.0, float(len(block))
    for low, high in power_brackets(block, max_iterations):
        if low > target + band or high < target - band or high - low < band:
            return low, high
    logger.warning(f"⚠️ λ1 bracket [{low:.12f}, {high:.12f}] still open after {max_iterations} steps")
    return low, high


def compare_radius_to_sqrt(G: Graph, m: int, band: float = DECISION_BAND,
                           max_order: int = EXACT_MAX_ORDER,
                           max_iterations: int = POWER_MAX_ITERATIONS) -> ThresholdDecision:
    """Trust numerics outside the band; decide exactly inside it.

    λ1 is bracketed by power iteration per component, so most graphs are
    settled after a few steps; the maximum degree screens out the rest of
    the sparse ones without any iteration.
    """
    target = math.sqrt(m)
    degrees = G.degrees()
    if G.n and max(degrees) < target - band:
        return ThresholdDecision(-1, 2.0 * G.e / G.n, float(max(degrees)), False)

    low, high = 0.0, 0.0
    for block in component_blocks(G):
        block_low, block_high = _bracket_block(block, target, band, max_iterations)
        low, high = max(low, block_low), max(high, block_high)
        if block_low > target + band:
            return ThresholdDecision(1, low, high, False)
    if high < target - band:
        return ThresholdDecision(-1, low, high, False)

    counted = count_eigs_above(G, m, max_order)
    if counted.above > 0:
        sign = 1
    elif counted.is_eigenvalue:
        sign = 0
    else:
        sign = -1
    logger.debug(f"exact threshold decision λ1 in [{low:.12f}, {high:.12f}] vs sqrt({m}): {sign}")
    return ThresholdDecision(sign, low, high, True)
