import itertools

import networkx as nx
import pytest

from linegame.enumeration import isofree_graphs
from linegame.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_clique_number(g: Graph) -> int:
    """Largest clique by trying vertex subsets from the top down."""
    for size in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                return size
    return 0


@pytest.fixture(scope="session")
def small_isofree():
    """Iso-free graphs with 1..7 edges."""
    return list(isofree_graphs(7))
