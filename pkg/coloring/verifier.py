from collections import deque
from typing import Iterable, Optional

from coloring.models import Coloring, VerificationReport
from graph.models import Graph
from utils.exceptions import CapacityError, ConstructionError, InvalidGraphError
from utils.log import get_logger
from utils.settings import get_settings

log = get_logger()
settings = get_settings()


def _color_bits(graph: Graph, coloring: Coloring) -> list[dict[int, int]]:
    """
    Per-vertex map neighbor -> colour bit, after checking the colouring is
    total and fits the state encoding.
    """

    missing = [e for e in graph.edges if e not in coloring.assignment]
    if missing:
        raise InvalidGraphError(f"Colouring misses {len(missing)} edges, e.g. {missing[0]}")

    palette = sorted({coloring.assignment[e] for e in graph.edges})
    if len(palette) > settings.RC_VERIFIER_MAX_COLORS:
        raise CapacityError(
            f"{len(palette)} colours exceed the verifier cap of "
            f"{settings.RC_VERIFIER_MAX_COLORS}"
        )

    bit = {color: 1 << i for i, color in enumerate(palette)}
    bits = [dict() for _ in graph.vertices]

    for u, v in graph.edges:
        b = bit[coloring.assignment[(u, v)]]
        bits[u][v] = b
        bits[v][u] = b

    return bits


def _search(
    graph: Graph, bits: list[dict[int, int]], source: int, targets: Iterable[int]
) -> dict[int, list[int]]:
    """
    Breadth-first search over (vertex, used colours) states from one
    source. The first time a target is reached gives a shortest rainbow
    walk, which is a path since any repeated vertex could be cut out.
    """

    pending = set(targets) - {source}
    found = {source: [source]} if source in set(targets) else {}

    start = (source, 0)
    parent = {start: None}
    queue = deque([start])

    while queue and pending:
        state = queue.popleft()
        v, used = state

        for w, b in bits[v].items():
            if used & b:
                continue

            nxt = (w, used | b)
            if nxt in parent:
                continue

            parent[nxt] = state
            queue.append(nxt)

            if w in pending:
                pending.discard(w)
                path = [w]
                back = state
                while back is not None:
                    path.append(back[0])
                    back = parent[back]
                path.reverse()
                found[w] = path

    return found


def _check_witness(graph: Graph, coloring: Coloring, path: list[int]) -> None:
    colors = []

    for a, b in zip(path, path[1:]):
        key = (a, b) if a < b else (b, a)
        if key not in graph.edge_set:
            raise ConstructionError(f"Witness {path} uses non-edge {key}")
        colors.append(coloring.assignment[key])

    if len(set(colors)) != len(colors) or len(set(path)) != len(path):
        raise ConstructionError(f"Witness {path} is not a rainbow path")


def rainbow_path_exists(
    graph: Graph, coloring: Coloring, u: int, v: int
) -> Optional[list[int]]:
    """
    Find a u-v path whose edges carry pairwise distinct colours.

    Parameters:
        graph (Graph): The graph.
        coloring (Coloring): A colouring of every edge.
        u (int): One endpoint.
        v (int): The other endpoint.

    Returns:
        Optional[list[int]]: A shortest rainbow path as a vertex list, or None.

    Raises:
        CapacityError: If the colouring has more distinct colours than the cap.
    """

    graph.check_vertex(u)
    graph.check_vertex(v)

    bits = _color_bits(graph, coloring)
    path = _search(graph, bits, u, [v]).get(v)

    if path is not None:
        _check_witness(graph, coloring, path)

    return path


def is_rainbow_connected(
    graph: Graph, coloring: Coloring, witnesses: bool = False
) -> VerificationReport:
    """
    Check every unordered vertex pair for a rainbow path.

    Parameters:
        graph (Graph): The graph.
        coloring (Coloring): A colouring of every edge.
        witnesses (bool): Keep one rainbow path per pair in the report.

    Returns:
        VerificationReport: ok, the number of pairs checked and the failing
        pairs in lexicographic order.
    """

    bits = _color_bits(graph, coloring)
    failures = []
    paths = {} if witnesses else None
    checked = 0

    for u in graph.vertices:
        targets = range(u + 1, graph.n)
        found = _search(graph, bits, u, targets)

        for v in targets:
            checked += 1
            path = found.get(v)

            if path is None:
                failures.append((u, v))
                continue

            _check_witness(graph, coloring, path)
            if paths is not None:
                paths[(u, v)] = path

    if failures:
        log.info(f"{len(failures)} of {checked} pairs have no rainbow path")

    return VerificationReport(
        ok=not failures,
        checked_pairs=checked,
        failures=failures,
        witness_paths=paths,
    )
