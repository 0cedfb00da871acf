from pathlib import Path

import networkx as nx
import pytest

from remoteness.graphcore import Graph

DATA = Path(__file__).parent / "data"


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


@pytest.fixture(scope="session")
def atlas():
    """Every graph on 1..7 vertices, one per isomorphism class (networkx atlas)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1]


@pytest.fixture(scope="session")
def fixture_corpus() -> Path:
    return DATA / "atlas_connected_n1_6.g6"


@pytest.fixture(scope="session")
def malformed_corpus() -> Path:
    return DATA / "malformed.g6"
