import time

from itertools import combinations
from typing import Optional

from coloring.models import Coloring, OracleLimits
from coloring.verifier import is_rainbow_connected
from graph.core import find_bridges, radius_center, require_connected
from graph.models import Graph
from utils.exceptions import OracleRefusal
from utils.log import get_logger
from utils.settings import get_settings

log = get_logger()
settings = get_settings()


def default_limits() -> OracleLimits:
    """
    Oracle limits from the application settings.

    Returns:
        OracleLimits: The configured caps.
    """

    return OracleLimits(
        max_edges=settings.RC_ORACLE_MAX_EDGES,
        max_colors=settings.RC_ORACLE_MAX_COLORS,
        time_budget=settings.RC_ORACLE_TIME_BUDGET,
    )


def rc_lower_bound(graph: Graph) -> int:
    """
    max(diameter, number of bridges): a rainbow path between two vertices
    at maximum distance needs diam colours, and any two bridges separate
    some vertex pair so they need distinct colours.

    Parameters:
        graph (Graph): A connected graph.

    Returns:
        int: The lower bound on rc(G); equals m on trees.
    """

    require_connected(graph)

    if graph.n <= 1:
        return 0

    return max(radius_center(graph).diameter, len(find_bridges(graph)))


def _simple_paths(graph: Graph) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    """
    Every simple path of the graph per unordered vertex pair, as tuples of
    edge indices into graph.edges.
    """

    index = {e: i for i, e in enumerate(graph.edges)}
    paths: dict[tuple[int, int], list[tuple[int, ...]]] = {
        pair: [] for pair in combinations(graph.vertices, 2)
    }

    def extend(start: int, v: int, visited: set[int], used: list[int]) -> None:
        for w in graph.adjacency[v]:
            if w in visited:
                continue

            used.append(index[(v, w) if v < w else (w, v)])
            if start < w:
                paths[(start, w)].append(tuple(used))

            visited.add(w)
            extend(start, w, visited, used)
            visited.discard(w)
            used.pop()

    for s in graph.vertices:
        extend(s, s, {s}, [])

    return paths


class _Search:
    """
    Backtracking over restricted-growth colour assignments in edge order:
    edge i takes a colour at most one above the largest used before it, so
    the first edge is colour 1 and no two assignments differ by renaming.
    """

    def __init__(self, graph: Graph, colors: int, deadline: float):
        self.graph = graph
        self.colors = colors
        self.deadline = deadline
        self.assignment = [0] * graph.m

        index = {e: i for i, e in enumerate(graph.edges)}
        bridges = sorted(index[e] for e in find_bridges(graph))

        # constraints checked once edge i is assigned
        self.bridge_peers = [[] for _ in range(graph.m)]
        for a, b in combinations(bridges, 2):
            self.bridge_peers[b].append(a)

        self.pairs_closing = [[] for _ in range(graph.m)]
        for pair, options in _simple_paths(graph).items():
            if options:
                closing = max(max(path) for path in options)
                self.pairs_closing[closing].append(options)

    def _rainbow(self, path: tuple[int, ...]) -> bool:
        colors = [self.assignment[i] for i in path]
        return len(set(colors)) == len(colors)

    def run(self) -> Optional[list[int]]:
        return self._assign(0, 0)

    def _assign(self, i: int, highest: int) -> Optional[list[int]]:
        if time.monotonic() > self.deadline:
            raise OracleRefusal("Oracle time budget exhausted")

        if i == self.graph.m:
            return list(self.assignment)

        for color in range(1, min(highest + 1, self.colors) + 1):
            self.assignment[i] = color

            if any(self.assignment[j] == color for j in self.bridge_peers[i]):
                continue

            if not all(
                any(self._rainbow(path) for path in options)
                for options in self.pairs_closing[i]
            ):
                continue

            found = self._assign(i + 1, max(highest, color))
            if found is not None:
                return found

        return None


def exact_rc(graph: Graph, limits: Optional[OracleLimits] = None) -> int:
    """
    rc(G) by exhaustive search: for t from the lower bound upward, look for
    a colouring with at most t colours that makes G rainbow connected.

    Parameters:
        graph (Graph): A connected graph within the edge cap.
        limits (Optional[OracleLimits]): Caps; the settings' defaults if omitted.

    Returns:
        int: The rainbow connection number.

    Raises:
        OracleRefusal: If m, the colour count or the time budget exceeds the caps.
    """

    limits = limits or default_limits()
    require_connected(graph)

    if graph.m > limits.max_edges:
        raise OracleRefusal(
            f"Graph has {graph.m} edges, the oracle accepts at most {limits.max_edges}"
        )

    if graph.m == 0:
        return 0

    deadline = time.monotonic() + limits.time_budget
    lower = rc_lower_bound(graph)

    for t in range(lower, graph.m + 1):
        if t > limits.max_colors:
            raise OracleRefusal(f"rc exceeds the colour cap of {limits.max_colors}")

        found = _Search(graph, t, deadline).run()
        if found is None:
            continue

        coloring = Coloring(assignment=dict(zip(graph.edges, found)))
        if is_rainbow_connected(graph, coloring).ok:
            log.debug(f"rc = {t} witnessed by {found}")
            return t

    raise OracleRefusal(f"No rainbow colouring found with up to {graph.m} colours")
