"""
Configuration loading: config.json merged over built-in defaults, with
optional environment overrides
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent

DEFAULT_CONFIG: Dict[str, Any] = {
    'numeric': {
        'jacobi_tolerance': 1e-14,
        'jacobi_max_sweeps': 50,
        'power_tolerance': 1e-13,
        'power_max_iterations': 100000,
        'decision_band': 1e-6,
        'lift_tolerance': 1e-8,
        'spectrum_tolerance': 1e-10,
    },
    'exact': {'max_order': 24},
    'oracle': {'max_order': 12, 'max_paths': 10_000_000},
    'enumeration': {'max_order': 10, 'split_depth': 5},
    'campaigns': {
        'jobs': 1,
        'theorem': {'n': [6, 7, 8, 9]},
        'posa': {'n': [4, 5, 6, 7, 8, 9]},
        'lemma3': {'k_max': 20},
        'lemma5': {'n_max': 40},
        'lemma6': {'n_max': 40},
        'families': {'n_max': 40},
        'gamma': {'n': [6, 7, 8]},
        'properties': {
            'seed': 20240601,
            'kelmans_samples': 500,
            'kelmans_n_max': 10,
            'kelmans_tolerance': 1e-12,
            'detector_n_max': 7,
            'detector_random': 10000,
            'hygiene_n_max': 8,
            'hygiene_tolerance': 1e-9,
        },
    },
    'export': {'dir': 'data/reports', 'formats': ['json', 'csv', 'xlsx', 'md']},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Load configuration from config.json (or CHORDSPEC_CONFIG)"""
    config_path = Path(path or os.getenv('CHORDSPEC_CONFIG') or PROJECT_ROOT / "config.json")
    config = copy.deepcopy(DEFAULT_CONFIG)
    if config_path.exists():
        with open(config_path, 'r') as f:
            config = _merge(config, json.load(f))
    else:
        logger.warning(f"⚠️ No config file at {config_path}, using defaults")

    jobs = os.getenv('CHORDSPEC_JOBS')
    if jobs:
        config['campaigns']['jobs'] = int(jobs)
    return config


def jacobi_options(config: Dict[str, Any]) -> Dict[str, Any]:
    """Keyword arguments for spectrum / perron / eigen_residual"""
    return {'tolerance': config['numeric']['jacobi_tolerance'],
            'max_sweeps': config['numeric']['jacobi_max_sweeps']}


def power_options(config: Dict[str, Any]) -> Dict[str, Any]:
    """Keyword arguments for power_radius"""
    return {'tolerance': config['numeric']['power_tolerance'],
            'max_iterations': config['numeric']['power_max_iterations']}
