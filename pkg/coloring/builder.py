from coloring.ears import advance_core, expand_step
from coloring.models import Coloring, RcResult, StageReport
from graph.core import find_bridges, radius_center, require_connected
from graph.models import Graph
from utils.exceptions import ConstructionError
from utils.log import get_logger

log = get_logger()


def _seed(graph: Graph) -> tuple[int, int]:
    metrics = radius_center(graph)

    return metrics.centers[0], metrics.radius


def build(graph: Graph) -> RcResult:
    """
    Colour a connected graph by growing the core chain
    D^r = {center} < D^(r-1) < ... < D^0 = V, one expansion step per level,
    each level drawing on its own disjoint palette block.

    Parameters:
        graph (Graph): A connected graph.

    Returns:
        RcResult: The total colouring, the bound sum of max(2i+1, b_i), the
        number of colours used and every stage report (i = r down to 1).
    """

    require_connected(graph)

    if graph.n <= 1:
        return RcResult(
            coloring=Coloring(),
            bound=0,
            colors_used=0,
            stages=[],
            center=0 if graph.n else None,
            radius=0,
        )

    center, radius = _seed(graph)
    bridges = find_bridges(graph)

    log.info(f"Building colouring: n={graph.n}, m={graph.m}, radius={radius}, center={center}")

    coloring = Coloring()
    core = frozenset([center])
    palette_start = 1
    stages: list[StageReport] = []

    for k in range(radius, 0, -1):
        core, coloring, report = expand_step(
            graph, core, k, coloring, palette_start, bridges
        )
        palette_start += report.palette_size
        stages.append(report)

    missing = [e for e in graph.edges if e not in coloring.assignment]
    if missing:
        raise ConstructionError(f"Edges left uncoloured: {missing}")

    result = RcResult(
        coloring=coloring,
        bound=sum(stage.budget for stage in stages),
        colors_used=len(coloring.colors()),
        stages=stages,
        center=center,
        radius=radius,
    )

    log.info(f"Used {result.colors_used} colours, bound {result.bound}")

    return result


def theorem2_bound(graph: Graph) -> tuple[int, list[int]]:
    """
    The bound sum of max(2i+1, b_i) along the same core chain as build,
    without colouring anything.

    Parameters:
        graph (Graph): A connected graph.

    Returns:
        tuple[int, list[int]]: The bound and [b_1, ..., b_r].
    """

    require_connected(graph)

    if graph.n <= 1:
        return 0, []

    center, radius = _seed(graph)
    bridges = find_bridges(graph)

    core = frozenset([center])
    counts = {}

    for k in range(radius, 0, -1):
        core, frontier, _ = advance_core(graph, core, bridges)
        counts[k] = frontier.size

    b = [counts[i] for i in range(1, radius + 1)]
    bound = sum(max(2 * i + 1, b_i) for i, b_i in enumerate(b, start=1))

    return bound, b


def corollary1_check(graph: Graph, stages: list[StageReport]) -> bool:
    """
    Check that the frontier bridges of all stages together are exactly the
    bridges of the graph.

    Parameters:
        graph (Graph): The graph the stages were built on.
        stages (list[StageReport]): The stage reports of build.

    Returns:
        bool: True if the sum of b_i equals the number of bridges.
    """

    return sum(stage.b_k for stage in stages) == len(find_bridges(graph))


def bound_regime(stages: list[StageReport]) -> str:
    """
    Name the closing regime of the bound: every b_i <= 2i+1 gives r(r+2),
    every b_i > 2i+1 gives the bridge count.

    Parameters:
        stages (list[StageReport]): The stage reports of build.

    Returns:
        str: "bridgeless-like", "bridge-dominated" or "mixed".
    """

    if all(stage.b_k <= 2 * stage.k + 1 for stage in stages):
        return "bridgeless-like"

    if all(stage.b_k > 2 * stage.k + 1 for stage in stages):
        return "bridge-dominated"

    return "mixed"
