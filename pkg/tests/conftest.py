import copy
import sys
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from graphs import Graph
from utils.config_utils import DEFAULT_CONFIG


@pytest.fixture
def config(tmp_path):
    """Built-in defaults with exports redirected to a temporary directory"""
    cfg = copy.deepcopy(DEFAULT_CONFIG)
    cfg['export']['dir'] = str(tmp_path / "reports")
    return cfg


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H
