"""
chordspec.chorded

Chorded-cycle certificates: Menger-flow detector and cycle-enumeration oracle
"""

from .detector import ChordedWitness, find_chorded_cycle, two_disjoint_paths, posa_bound_holds
from .oracle import find_chorded_cycle_oracle, has_chorded_cycle_oracle

__all__ = [
    'ChordedWitness',
    'find_chorded_cycle',
    'two_disjoint_paths',
    'posa_bound_holds',
    'find_chorded_cycle_oracle',
    'has_chorded_cycle_oracle',
]
