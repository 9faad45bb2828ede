import networkx as nx
import pytest

from coloring.builder import build
from coloring.models import RcResult
from graph.generators import FamilySpec, generate, standard_corpus
from graph.models import Graph


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges)

    return g


@pytest.fixture(scope="session")
def corpus() -> list[tuple[FamilySpec, Graph]]:
    return [(spec, generate(spec)) for spec in standard_corpus()]


@pytest.fixture(scope="session")
def built(corpus) -> list[tuple[FamilySpec, Graph, RcResult]]:
    return [(spec, graph, build(graph)) for spec, graph in corpus]


@pytest.fixture
def p5() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def c5() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def c6() -> Graph:
    return Graph.from_edges([(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def star5() -> Graph:
    return Graph.from_edges([(0, leaf) for leaf in range(1, 6)])


@pytest.fixture
def kite() -> Graph:
    """
    The 4-cycle 0-1-2-3 with an extra vertex 4 joined to 0 and 2. From
    the center 0 the second ear runs into the first one at vertex 2.
    """

    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)])
