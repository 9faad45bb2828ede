"""
One expansion step of the layered construction: a connected k-step
dominating core D grows into a connected (k-1)-step dominating core by
absorbing its bridge frontier and a sequence of eager ears, and the new
edges get colours from a palette block of max(2k+1, b_k) fresh colours.
"""

from collections import deque
from typing import Iterable, Iterator, Optional

from coloring.models import (
    BridgeFrontier,
    Coloring,
    EarPath,
    Orientation,
    PaletteBlock,
    SegmentSide,
    Splice,
    StageReport,
)
from graph.core import find_bridges, induced_subgraph
from graph.layers import decompose, is_k_step_dominating
from graph.models import Edge, Graph, LayerDecomposition, edge_key
from utils.exceptions import ConstructionError, InvalidGraphError
from utils.log import get_logger

log = get_logger()


class EarRegistry:
    """
    The ears absorbed during one stage, and for every absorbed vertex the
    first ear that brought it in (its host for later splices).
    """

    def __init__(self):
        self.ears: list[EarPath] = []
        self.home: dict[int, int] = {}

    @property
    def absorbed(self) -> set[int]:
        return set(self.home)

    def next_id(self) -> int:
        return len(self.ears)

    def register(self, ear: EarPath) -> None:
        self.ears.append(ear)

        for v in ear.new_vertices:
            self.home.setdefault(v, ear.id)


def bridge_frontier(
    graph: Graph, core: Iterable[int], bridges: Optional[set[Edge]] = None
) -> BridgeFrontier:
    """
    Collect the bridges of G between the core D and its neighborhood N(D).
    Each frontier vertex must have degree 1 in G[N[D]], since a second
    neighbor there would close a cycle through its bridge.

    Parameters:
        graph (Graph): The graph.
        core (Iterable[int]): The connected core D.
        bridges (Optional[set[Edge]]): Precomputed bridges of the graph.

    Returns:
        BridgeFrontier: B sorted by id, with B_E as (x, y) pairs, y in D.

    Raises:
        ConstructionError: If a frontier vertex has a second neighbor in N[D].
    """

    core = frozenset(core)

    if bridges is None:
        bridges = find_bridges(graph)

    closed = set(core)
    for y in core:
        closed.update(graph.adjacency[y])

    pairs = {}
    for x in sorted(closed - core):
        for y in graph.adjacency[x]:
            if y in core and edge_key(x, y) in bridges:
                pairs[x] = y

    for x in pairs:
        inside = [w for w in graph.adjacency[x] if w in closed]
        if len(inside) != 1:
            raise ConstructionError(
                f"Bridge frontier vertex {x} has {len(inside)} neighbors in N[D]"
            )

    return BridgeFrontier(
        vertices=sorted(pairs),
        bridges=[(x, pairs[x]) for x in sorted(pairs)],
    )


def even_color_sequence(p: int, k: int, orientation: Orientation) -> list[int]:
    """
    The even colouring of a p-edge ear with the palette 1..2k+1: the low
    colours 1..ceil(p/2) followed by the top floor(p/2) colours, or the
    exact reverse.

    Parameters:
        p (int): Ear length, 1 <= p <= 2k+1.
        k (int): Stage index.
        orientation (Orientation): Ascending starts at 1, descending at 2k+1.

    Returns:
        list[int]: The p colour offsets, pairwise distinct.

    Raises:
        ConstructionError: If the ear is longer than 2k+1.
    """

    if not 1 <= p <= 2 * k + 1:
        raise ConstructionError(f"Ear of length {p} exceeds 2k+1 = {2 * k + 1}")

    low = list(range(1, (p + 1) // 2 + 1))
    high = list(range(2 * k + 2 - p // 2, 2 * k + 2))
    sequence = low + high

    if orientation == Orientation.DESCENDING:
        sequence.reverse()

    return sequence


def _shortest_ear(
    graph: Graph, layers: LayerDecomposition, x0: int, x1: int
) -> list[int]:
    parent = {x1: x0}
    queue = deque([x1])

    while queue:
        u = queue.popleft()

        for w in graph.adjacency[u]:
            if u == x1 and w == x0:
                continue

            if layers.distance[w] == 0:
                path = [w, u]
                while path[-1] != x0:
                    path.append(parent[path[-1]])
                path.reverse()
                return path

            if w not in parent:
                parent[w] = u
                queue.append(w)

    raise ConstructionError(f"No ear through seed edge ({x0}, {x1}); is it a bridge?")


def find_eager_ear(
    graph: Graph,
    core: Iterable[int],
    layers: LayerDecomposition,
    seed_edge: Edge,
    registry: EarRegistry,
) -> EarPath:
    """
    The eager ear through a seed edge x0x1 (x0 in D, x1 outside): the
    shortest path from x1 back to D with no internal vertex in D, never
    reusing the seed edge, smallest neighbor id first. The search stops
    only at D; absorbed vertices do not end it. If that shortest D-ear
    meets an absorbed vertex x_l before D, its prefix x0..x_l is joined
    with the shorter segment of x_l's host ear (ties take the tail, the
    side away from the host's seed edge). An absorbed vertex nearer to x1
    that lies off the shortest D-ear is never used as an endpoint.

    Parameters:
        graph (Graph): The graph.
        core (Iterable[int]): The core D.
        layers (LayerDecomposition): Layers of D, for core membership.
        seed_edge (Edge): (x0, x1) with x0 in D and x1 neither in D nor absorbed.
        registry (EarRegistry): Ears absorbed so far in this stage.

    Returns:
        EarPath: The ear, with splice metadata when a host segment is reused.
    """

    x0, x1 = seed_edge

    if layers.distance[x0] != 0 or layers.distance[x1] == 0:
        raise InvalidGraphError(f"Seed edge {seed_edge} does not leave the core")
    if x1 in registry.home:
        raise InvalidGraphError(f"Seed vertex {x1} is already absorbed")

    path = _shortest_ear(graph, layers, x0, x1)

    hit = next(
        (i for i, v in enumerate(path[1:-1], start=1) if v in registry.home), None
    )

    if hit is None:
        return EarPath(id=registry.next_id(), vertices=path)

    host = registry.ears[registry.home[path[hit]]]
    j = host.vertices.index(path[hit])
    head = host.vertices[j::-1]
    tail = host.vertices[j:]

    side = SegmentSide.TAIL if len(tail) <= len(head) else SegmentSide.HEAD
    segment = tail if side == SegmentSide.TAIL else head

    log.debug(
        f"Ear from ({x0}, {x1}) meets ear {host.id} at {path[hit]}, "
        f"splicing its {side.value} of length {len(segment) - 1}"
    )

    return EarPath(
        id=registry.next_id(),
        vertices=path[:hit] + segment,
        splice=Splice(prefix_length=hit, host=host.id, side=side),
    )


def _next_seed(
    graph: Graph, layers: LayerDecomposition, covered: set[int]
) -> Optional[Edge]:
    for x0 in sorted(layers.core):
        for x1 in graph.adjacency[x0]:
            if layers.distance[x1] == 1 and x1 not in covered:
                return (x0, x1)

    return None


def iter_stage_ears(
    graph: Graph,
    layers: LayerDecomposition,
    frontier: BridgeFrontier,
    registry: Optional[EarRegistry] = None,
) -> Iterator[EarPath]:
    """
    Absorb N(D) ear by ear: repeatedly take the smallest uncovered edge
    (x0, x1) of E(D, N(D)) and yield its eager ear, until every vertex of
    N(D) is in the core. The ears do not depend on any colouring.

    Parameters:
        graph (Graph): The graph.
        layers (LayerDecomposition): Layers of the current core D.
        frontier (BridgeFrontier): B and B_E of D.
        registry (Optional[EarRegistry]): Collects the ears; a fresh one by default.

    Yields:
        EarPath: Each ear in absorption order.
    """

    registry = registry if registry is not None else EarRegistry()
    covered = set(frontier.vertices)

    while (seed := _next_seed(graph, layers, covered)) is not None:
        ear = find_eager_ear(graph, layers.core, layers, seed, registry)
        registry.register(ear)
        covered.update(ear.new_vertices)

        yield ear


def advance_core(
    graph: Graph, core: Iterable[int], bridges: Optional[set[Edge]] = None
) -> tuple[frozenset[int], BridgeFrontier, list[EarPath]]:
    """
    The core chain step without any colouring: D' = D + B + every vertex
    absorbed by the stage's eager ears.

    Parameters:
        graph (Graph): The graph.
        core (Iterable[int]): The connected core D.
        bridges (Optional[set[Edge]]): Precomputed bridges of the graph.

    Returns:
        tuple: The new core, the bridge frontier and the ears.
    """

    layers = decompose(graph, core)
    frontier = bridge_frontier(graph, layers.core, bridges)
    ears = list(iter_stage_ears(graph, layers, frontier))

    new_core = set(layers.core) | set(frontier.vertices)
    for ear in ears:
        new_core.update(ear.new_vertices)

    return frozenset(new_core), frontier, ears


def _offsets(coloring: Coloring, block: PaletteBlock, edges) -> list[Optional[int]]:
    result = []

    for a, b in edges:
        color = coloring.get(edge_key(a, b))
        result.append(None if color is None else color - block.start + 1)

    return result


def _color_ear(
    ear: EarPath, k: int, coloring: Coloring, block: PaletteBlock, report: StageReport
) -> None:
    edges = ear.edges()

    if ear.splice is None:
        orientation = Orientation.ASCENDING
        prefix = len(edges)
    else:
        prefix = ear.splice.prefix_length
        segment = _offsets(coloring, block, edges[prefix:])
        if all(c is not None and c <= k + 1 for c in segment):
            orientation = Orientation.DESCENDING
        else:
            orientation = Orientation.ASCENDING

    pattern = even_color_sequence(ear.length, k, orientation)

    for (a, b), offset in zip(edges[:prefix], pattern):
        key = edge_key(a, b)
        if key in coloring.assignment:
            raise ConstructionError(f"Ear {ear.id} reuses coloured edge {key}")
        coloring.assignment[key] = block.color(offset)

    ear.orientation = orientation

    if _offsets(coloring, block, edges) != pattern:
        message = f"Ear {ear.id} {ear.vertices} is not evenly coloured"
        log.warning(message)
        report.warnings.append(message)


def _check_fresh_bridges(
    graph: Graph, core: frozenset[int], new_core: frozenset[int], report: StageReport
) -> None:
    fresh = new_core - core

    sub, mapping = induced_subgraph(graph, new_core)
    for a, b in sorted(find_bridges(sub)):
        u, v = mapping[a], mapping[b]
        if u in fresh and v in fresh:
            message = f"Edge ({u}, {v}) inside D^(k-1) minus D^k is a bridge of G[D^(k-1)]"
            log.warning(message)
            report.warnings.append(message)

    sub, mapping = induced_subgraph(graph, fresh)
    for a, b in sorted(find_bridges(sub)):
        report.induced_bridges.append((mapping[a], mapping[b]))

    if report.induced_bridges:
        log.info(
            f"Stage {report.k}: {len(report.induced_bridges)} bridges "
            f"of G[D^(k-1) minus D^k] itself"
        )


def expand_step(
    graph: Graph,
    core: Iterable[int],
    k: int,
    coloring: Coloring,
    palette_start: int,
    bridges: Optional[set[Edge]] = None,
) -> tuple[frozenset[int], Coloring, StageReport]:
    """
    Grow a connected k-step dominating core D into a connected (k-1)-step
    dominating core D' and colour G[D'] minus G[D] with the palette block
    [palette_start, palette_start + max(2k+1, b_k)).

    Order of work: bridge frontier; eager ears, each evenly coloured
    (spliced ears keep the host segment's colours and take the orientation
    those colours dictate); the bridges B_E, in frontier id order, with
    block colours 1..b_k; every remaining edge of G[D'] with block colour 1.

    Parameters:
        graph (Graph): The graph.
        core (Iterable[int]): D, connected and k-step dominating, G[D] coloured.
        k (int): Stage index, k >= 1.
        coloring (Coloring): Updated in place.
        palette_start (int): First colour of this stage's block.
        bridges (Optional[set[Edge]]): Precomputed bridges of the graph.

    Returns:
        tuple: D', the colouring and the stage report.
    """

    core = frozenset(core)

    if k < 1:
        raise InvalidGraphError(f"Stage index must be at least 1, got {k}")

    dominating, connected = is_k_step_dominating(graph, core, k)
    if not (dominating and connected):
        raise InvalidGraphError(f"Core {sorted(core)} is not a connected {k}-step dominating set")

    if bridges is None:
        bridges = find_bridges(graph)

    layers = decompose(graph, core)
    frontier = bridge_frontier(graph, core, bridges)
    block = PaletteBlock(stage=k, start=palette_start, size=max(2 * k + 1, frontier.size))
    coloring.palette_blocks.append(block)

    report = StageReport(
        k=k,
        b_k=frontier.size,
        bridges=[edge_key(x, y) for x, y in frontier.bridges],
        palette_start=block.start,
        palette_size=block.size,
        d_in=sorted(core),
        d_out=[],
    )

    new_core = set(core) | set(frontier.vertices)

    for ear in iter_stage_ears(graph, layers, frontier):
        _color_ear(ear, k, coloring, block, report)
        new_core.update(ear.new_vertices)
        report.ears.append(ear)

        log.debug(f"Stage {k}: ear {ear.id} {ear.vertices} ({ear.orientation.value})")

    new_core = frozenset(new_core)

    for offset, (x, y) in enumerate(frontier.bridges, start=1):
        coloring.assignment[edge_key(x, y)] = block.color(offset)

    for u, v in graph.edges:
        if u in new_core and v in new_core and (u, v) not in coloring.assignment:
            coloring.assignment[(u, v)] = block.color(1)

    dominating, connected = is_k_step_dominating(graph, new_core, k - 1)
    if not (dominating and connected):
        raise ConstructionError(
            f"Stage {k} core {sorted(new_core)} is not a connected {k - 1}-step dominating set"
        )

    _check_fresh_bridges(graph, core, new_core, report)

    report.d_out = sorted(new_core)
    report.colors_used = len(
        {
            color
            for color in coloring.assignment.values()
            if block.start <= color < block.start + block.size
        }
    )

    log.info(
        f"Stage {k}: b_k={report.b_k}, ears={len(report.ears)}, "
        f"colors={report.colors_used}/{report.budget}, core {len(core)} -> {len(new_core)}"
    )

    return new_core, coloring, report
