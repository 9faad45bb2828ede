from typing import Iterable

from graph.core import bfs_distances, induced_subgraph, is_connected
from graph.models import Graph, LayerDecomposition
from utils.exceptions import InvalidGraphError


def _core(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    core = frozenset(vertices)

    if not core:
        raise InvalidGraphError("Core vertex set must be nonempty")

    for v in core:
        graph.check_vertex(v)

    return core


def k_step_neighborhood(graph: Graph, vertices: Iterable[int], k: int) -> frozenset[int]:
    """
    N^k(S): the vertices at distance exactly k from S.

    Parameters:
        graph (Graph): The graph.
        vertices (Iterable[int]): The nonempty set S.
        k (int): The step, k >= 0.

    Returns:
        frozenset[int]: The k-step open neighborhood; N^0(S) = S.
    """

    if k < 0:
        raise InvalidGraphError(f"Step must be nonnegative, got {k}")

    distance = bfs_distances(graph, _core(graph, vertices))

    return frozenset(v for v in graph.vertices if distance[v] == k)


def decompose(graph: Graph, vertices: Iterable[int]) -> LayerDecomposition:
    """
    Split V into the layers N^0(D), N^1(D), ..., N^k(D) with k the largest
    distance to D, keeping the per-vertex distance for constant-time
    layer lookups.

    Parameters:
        graph (Graph): A connected graph.
        vertices (Iterable[int]): The nonempty core D.

    Returns:
        LayerDecomposition: The layered partition of V.
    """

    core = _core(graph, vertices)
    distance = bfs_distances(graph, core)

    if min(distance) < 0:
        raise InvalidGraphError("Layer decomposition needs a connected graph")

    layers = [set() for _ in range(max(distance) + 1)]
    for v in graph.vertices:
        layers[distance[v]].add(v)

    return LayerDecomposition(
        core=core,
        layers=[frozenset(layer) for layer in layers],
        distance=distance,
    )


def is_k_step_dominating(
    graph: Graph, vertices: Iterable[int], k: int
) -> tuple[bool, bool]:
    """
    Whether every vertex lies within distance k of S, and whether G[S] is
    connected (together: S is a connected k-step dominating set).

    Parameters:
        graph (Graph): The graph.
        vertices (Iterable[int]): The nonempty set S.
        k (int): The step.

    Returns:
        tuple[bool, bool]: (dominating, connected).
    """

    core = _core(graph, vertices)
    distance = bfs_distances(graph, core)

    dominating = all(0 <= d <= k for d in distance)
    connected = is_connected(induced_subgraph(graph, core)[0])

    return dominating, connected
