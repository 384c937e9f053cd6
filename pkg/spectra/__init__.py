"""
chordspec.spectra

Adjacency spectra, exact characteristic polynomials, quotient matrices
"""

from .numeric import (
    Spectrum, PerronData, jacobi_eigh, spectrum, spectral_radius, power_radius, power_brackets,
    component_blocks, perron, eigen_residual, radius_disagreement,
)
from .exact import (
    CharPoly, SqrtSign, EigenCount, char_poly, matrix_char_poly, sign_at_sqrt, split_at_sqrt,
    count_eigs_above, square_free_factors, sturm_sequence, real_roots,
)
from .partitions import Partition, QuotientMatrix, is_equitable, quotient_matrix, quotient_eigenvalues, verify_quotient_lift
from .operations import ThresholdDecision, kelmans_rotate, gamma_star, compare_radius_to_sqrt

__all__ = [
    'Spectrum', 'PerronData', 'jacobi_eigh', 'spectrum', 'spectral_radius', 'power_radius', 'power_brackets',
    'component_blocks', 'perron', 'eigen_residual', 'radius_disagreement',
    'CharPoly', 'SqrtSign', 'EigenCount', 'char_poly', 'matrix_char_poly', 'sign_at_sqrt', 'split_at_sqrt',
    'count_eigs_above', 'square_free_factors', 'sturm_sequence', 'real_roots',
    'Partition', 'QuotientMatrix', 'is_equitable', 'quotient_matrix', 'quotient_eigenvalues',
    'verify_quotient_lift',
    'ThresholdDecision', 'kelmans_rotate', 'gamma_star', 'compare_radius_to_sqrt',
]
