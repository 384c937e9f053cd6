"""
Vertex partitions, equitability and quotient matrices
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from graphs.core import Graph, NonEquitableError, PartitionError, is_connected
from .exact import CharPoly, matrix_char_poly, real_roots
from .numeric import JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE, spectrum

logger = logging.getLogger(__name__)

LIFT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class Partition:
    cells: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(sorted(c)) for c in cells))

    def masks(self) -> List[int]:
        return [sum(1 << v for v in c) for c in self.cells]

    def validate(self, G: Graph) -> None:
        seen = [v for c in self.cells for v in c]
        if any(not c for c in self.cells):
            raise PartitionError("partition has an empty cell")
        if sorted(seen) != list(range(G.n)):
            raise PartitionError(f"cells {self.cells} do not partition 0..{G.n - 1}")


@dataclass(frozen=True)
class QuotientMatrix:
    entries: Tuple[Tuple[Fraction, ...], ...]
    cell_sizes: Tuple[int, ...]

    def as_ints(self) -> List[List[int]]:
        """Entries as integers; only meaningful for equitable partitions"""
        return [[int(x) for x in row] for row in self.entries]

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(len(self.entries))), Fraction(0))

    def char_poly(self) -> CharPoly:
        return matrix_char_poly(self.entries)


def _cross_counts(G: Graph, P: Partition) -> List[List[List[int]]]:
    """counts[i][j] = neighbors in cell j of each vertex of cell i"""
    masks = P.masks()
    return [[[bin(G.masks[v] & mj).count("1") for v in ci] for mj in masks] for ci in P.cells]


def is_equitable(G: Graph, P: Partition) -> bool:
    P.validate(G)
    return all(len(set(row)) == 1 for block in _cross_counts(G, P) for row in block)


def quotient_matrix(G: Graph, P: Partition) -> QuotientMatrix:
    """b_ij = e(X_i, X_j) / |X_i| (twice e(X_i) on the diagonal)"""
    P.validate(G)
    counts = _cross_counts(G, P)
    entries = tuple(
        tuple(Fraction(sum(counts[i][j]), len(P.cells[i])) for j in range(len(P.cells)))
        for i in range(len(P.cells))
    )
    return QuotientMatrix(entries, tuple(len(c) for c in P.cells))


def quotient_eigenvalues(Q: QuotientMatrix) -> List[float]:
    """Eigenvalues from the exact characteristic polynomial of Q, descending"""
    return real_roots(Q.char_poly())


def verify_quotient_lift(G: Graph, P: Partition, tolerance: float = LIFT_TOLERANCE,
                         jacobi_tolerance: float = JACOBI_TOLERANCE,
                         jacobi_max_sweeps: int = JACOBI_MAX_SWEEPS) -> bool:
    """Every quotient eigenvalue is an adjacency eigenvalue; for connected G
    the largest ones coincide."""
    if not is_equitable(G, P):
        raise NonEquitableError(f"partition {P.cells} is not equitable")
    graph_values = spectrum(G, jacobi_tolerance, jacobi_max_sweeps).values
    quotient_values = quotient_eigenvalues(quotient_matrix(G, P))
    for mu in quotient_values:
        if min(abs(mu - lam) for lam in graph_values) > tolerance:
            logger.debug(f"quotient eigenvalue {mu} has no adjacency partner")
            return False
    if is_connected(G) and abs(quotient_values[0] - graph_values[0]) > tolerance:
        return False
    return True
