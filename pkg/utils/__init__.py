"""
chordspec.utils

Configuration and parallel sweep helpers
"""

from .config_utils import load_config, DEFAULT_CONFIG, jacobi_options, power_options
from .parallel_utils import map_subtrees, all_graphs_parallel

__all__ = [
    'load_config',
    'DEFAULT_CONFIG',
    'jacobi_options',
    'power_options',
    'map_subtrees',
    'all_graphs_parallel'
]
