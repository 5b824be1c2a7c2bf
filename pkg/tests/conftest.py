"""
Shared fixtures for the test suite.

Modules import each other through the project root, so it goes on sys.path
here exactly as the entry points do it.
"""

import sys
from pathlib import Path

import numpy as np
import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import PATTERN_CATALOG_FILE, VERIFICATION_CONFIG
from core.graph import Graph, disjoint_union
from core.patterns import default_catalog
from database.profile_cache import ProfileCache


@pytest.fixture
def catalog():
    return default_catalog(PATTERN_CATALOG_FILE)


@pytest.fixture
def named(catalog):
    """Catalog graphs by name, plus a few constructed ones."""
    graphs = {name: pattern.graph for name, pattern in catalog.patterns.items()}
    graphs["K4"] = Graph.complete(4)
    graphs["K5"] = Graph.complete(5)
    graphs["P5"] = Graph.path(5)
    graphs["K3,3"] = Graph.complete_bipartite(3, 3)
    graphs["2K2"] = disjoint_union(Graph.complete(2), Graph.complete(2))
    return graphs


@pytest.fixture
def cache():
    return ProfileCache()


@pytest.fixture
def rng():
    return np.random.default_rng(VERIFICATION_CONFIG["random_seed"])


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
