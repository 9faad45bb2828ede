from collections import deque
from typing import Iterable, TextIO

from graph.models import Edge, Graph, Metrics, edge_key
from utils.exceptions import DisconnectedGraphError, GraphParseError, InvalidGraphError
from utils.log import get_logger

log = get_logger()


def parse_edge_list(text: str | TextIO) -> Graph:
    """
    Parse the edge-list format: one "u v" pair of non-negative decimal
    integers per line, separated by a space or a tab. Lines starting with
    '#' are comments, blank lines are skipped. Vertex ids are dense, so
    the graph has max id + 1 vertices.

    Parameters:
        text (str | TextIO): The edge-list document or an open stream.

    Returns:
        Graph: The parsed graph.

    Raises:
        GraphParseError: On self-loops, duplicate edges, bad tokens, gaps in
            the vertex ids or empty input.
    """

    if not isinstance(text, str):
        text = text.read()

    edges: list[Edge] = []
    seen: set[Edge] = set()

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")

        if not line.strip() or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) != 2 or not all(token.isascii() and token.isdigit() for token in tokens):
            raise GraphParseError(f"Line {lineno}: expected 'u v', got {line!r}")

        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise GraphParseError(f"Line {lineno}: self-loop at vertex {u}")

        key = edge_key(u, v)
        if key in seen:
            raise GraphParseError(f"Line {lineno}: duplicate edge {key}")

        seen.add(key)
        edges.append(key)

    if not edges:
        raise GraphParseError("Empty edge list")

    endpoints = {v for e in edges for v in e}
    if len(endpoints) != max(endpoints) + 1:
        missing = min(set(range(len(endpoints))) - endpoints)
        raise GraphParseError(f"Vertex ids are not dense: {missing} is missing below {max(endpoints)}")

    graph = Graph.from_edges(edges)

    log.debug(f"Parsed graph with n={graph.n}, m={graph.m}")

    return graph


def format_edge_list(graph: Graph) -> str:
    """
    Render the canonical edge list of a graph, the inverse of parse_edge_list.

    Parameters:
        graph (Graph): The graph to render.

    Returns:
        str: Sorted "u v" lines, newline terminated.
    """

    return "".join(f"{u} {v}\n" for u, v in graph.edges)


def bfs_distances(graph: Graph, source: int | Iterable[int]) -> list[int]:
    """
    Hop distances from a source vertex, or from the nearest vertex of a
    source set. Unreachable vertices get -1.

    Parameters:
        graph (Graph): The graph.
        source (int | Iterable[int]): A vertex id or a set of vertex ids.

    Returns:
        list[int]: Distance per vertex id.
    """

    sources = [source] if isinstance(source, int) else sorted(set(source))

    distance = [-1] * graph.n
    queue = deque()

    for s in sources:
        graph.check_vertex(s)
        distance[s] = 0
        queue.append(s)

    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if distance[w] < 0:
                distance[w] = distance[u] + 1
                queue.append(w)

    return distance


def is_connected(graph: Graph) -> bool:
    """
    Check whether a single search from vertex 0 reaches every vertex.

    Parameters:
        graph (Graph): The graph.

    Returns:
        bool: True if connected; the single-vertex graph is connected.
    """

    if graph.n <= 1:
        return True

    return min(bfs_distances(graph, 0)) >= 0


def require_connected(graph: Graph) -> None:
    """
    Reject disconnected input at the boundary.

    Parameters:
        graph (Graph): The graph.

    Raises:
        DisconnectedGraphError: If the graph is not connected.
    """

    if not is_connected(graph):
        raise DisconnectedGraphError(f"Graph with n={graph.n}, m={graph.m} is not connected")


def radius_center(graph: Graph) -> Metrics:
    """
    All-pairs distances, eccentricities, radius, diameter and every center.

    Parameters:
        graph (Graph): A connected graph.

    Returns:
        Metrics: The populated metrics; centers are sorted by id.
    """

    require_connected(graph)

    distances = [bfs_distances(graph, v) for v in graph.vertices]
    eccentricities = [max(row) for row in distances]
    radius = min(eccentricities)

    return Metrics(
        distances=distances,
        eccentricities=eccentricities,
        radius=radius,
        diameter=max(eccentricities),
        centers=[v for v in graph.vertices if eccentricities[v] == radius],
    )


def find_bridges(graph: Graph) -> set[Edge]:
    """
    Bridges by an iterative low-link depth-first traversal. A tree edge
    (p, v) is a bridge exactly when nothing below v reaches p or higher.

    Parameters:
        graph (Graph): The graph.

    Returns:
        set[Edge]: Every edge whose removal disconnects its component.
    """

    order = [-1] * graph.n
    low = [0] * graph.n
    bridges: set[Edge] = set()
    counter = 0

    for root in graph.vertices:
        if order[root] >= 0:
            continue

        order[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(graph.adjacency[root]))]

        while stack:
            v, parent, children = stack[-1]
            advanced = False

            for w in children:
                if w == parent:
                    continue
                if order[w] < 0:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(graph.adjacency[w])))
                    advanced = True
                    break
                low[v] = min(low[v], order[w])

            if advanced:
                continue

            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > order[parent]:
                    bridges.add(edge_key(parent, v))

    return bridges


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """
    The subgraph induced by a vertex set, relabelled densely in id order.

    Parameters:
        graph (Graph): The host graph.
        vertices (Iterable[int]): The vertex set S.

    Returns:
        tuple[Graph, list[int]]: The induced graph and the mapping from its
        ids back to the host ids.
    """

    mapping = sorted(set(vertices))
    for v in mapping:
        graph.check_vertex(v)

    local = {v: i for i, v in enumerate(mapping)}
    edges = [
        (local[u], local[v]) for u, v in graph.edges if u in local and v in local
    ]

    return Graph(n=len(mapping), edges=tuple(edges)), mapping


def cut_edges(graph: Graph, x: Iterable[int], y: Iterable[int]) -> set[Edge]:
    """
    The edge set E[X, Y]: edges with one end in X and the other in Y.

    Parameters:
        graph (Graph): The graph.
        x (Iterable[int]): Vertex set X.
        y (Iterable[int]): Vertex set Y, disjoint from X.

    Returns:
        set[Edge]: The cut edges; e(X, Y) is its size.
    """

    x, y = set(x), set(y)

    if x & y:
        raise InvalidGraphError(f"Cut sides overlap in {sorted(x & y)}")

    return {
        (u, v)
        for u, v in graph.edges
        if (u in x and v in y) or (u in y and v in x)
    }
