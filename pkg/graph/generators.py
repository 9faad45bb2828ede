import random

import networkx as nx

from enum import Enum
from pydantic import BaseModel, Field, model_validator
from typing import Iterator, Optional

from graph.models import Graph
from utils.exceptions import GenerationError, InvalidGraphError
from utils.log import get_logger
from utils.settings import get_settings

log = get_logger()
settings = get_settings()


class Family(str, Enum):
    """
    Graph families the generator knows.
    """

    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    THETA = "theta"
    RANDOM_CONNECTED = "random_connected"
    RANDOM_TREE = "random_tree"
    BARBELL_BRIDGE = "barbell_bridge"
    CYCLE_WITH_PENDANTS = "cycle_with_pendants"


class FamilySpec(BaseModel):
    """
    A graph family with its parameters. `n` is the cycle/path/tree/random
    vertex count and the number of star leaves.
    """

    family: Family
    n: Optional[int] = None
    p: Optional[float] = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    arms: list[int] = Field(default_factory=list)
    pendants: list[int] = Field(default_factory=list)
    clique: Optional[int] = None
    bridge_length: Optional[int] = None

    @model_validator(mode="after")
    def check_parameters(self) -> "FamilySpec":
        family = self.family

        if family in (Family.CYCLE, Family.CYCLE_WITH_PENDANTS) and (self.n or 0) < 3:
            raise InvalidGraphError(f"{family.value} needs n >= 3")

        if family in (Family.PATH, Family.RANDOM_TREE, Family.RANDOM_CONNECTED) and (self.n or 0) < 2:
            raise InvalidGraphError(f"{family.value} needs n >= 2")

        if family == Family.STAR and (self.n or 0) < 1:
            raise InvalidGraphError("star needs at least one leaf")

        if family == Family.RANDOM_CONNECTED and not (self.p is not None and 0 < self.p <= 1):
            raise InvalidGraphError("random_connected needs 0 < p <= 1")

        if family == Family.THETA:
            if len(self.arms) < 2 or min(self.arms) < 1:
                raise InvalidGraphError("theta needs at least two arms of length >= 1")
            if self.arms.count(1) > 1:
                raise InvalidGraphError("theta allows at most one arm of length 1")

        if family == Family.CYCLE_WITH_PENDANTS:
            if len(set(self.pendants)) != len(self.pendants):
                raise InvalidGraphError("pendant positions must be distinct")
            if any(not 0 <= v < self.n for v in self.pendants):
                raise InvalidGraphError(f"pendant positions must lie in 0..{self.n - 1}")

        if family == Family.BARBELL_BRIDGE:
            if (self.clique or 0) < 3 or (self.bridge_length or 0) < 1:
                raise InvalidGraphError("barbell_bridge needs clique >= 3 and bridge_length >= 1")

        return self

    @property
    def name(self) -> str:
        parts = [self.family.value]

        if self.n is not None:
            parts.append(f"n{self.n}")
        if self.p is not None:
            parts.append(f"p{self.p}")
        if self.arms:
            parts.append("arms" + "-".join(map(str, self.arms)))
        if self.pendants:
            parts.append("at" + "-".join(map(str, self.pendants)))
        if self.clique is not None:
            parts.append(f"k{self.clique}x{self.bridge_length}")
        if self.family in (Family.RANDOM_CONNECTED, Family.RANDOM_TREE):
            parts.append(f"s{self.seed}")

        return "_".join(parts)


def _from_networkx(g: nx.Graph) -> Graph:
    return Graph.from_edges(g.edges(), n=g.number_of_nodes())


def _theta(arms: list[int]) -> Graph:
    edges = []
    next_id = 2

    for length in arms:
        chain = [0] + list(range(next_id, next_id + length - 1)) + [1]
        next_id += length - 1
        edges.extend(zip(chain, chain[1:]))

    return Graph.from_edges(edges, n=next_id)


def _random_connected(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)

    for attempt in range(1, settings.RC_GENERATOR_MAX_ATTEMPTS + 1):
        g = nx.gnp_random_graph(n, p, seed=rng)

        if nx.is_connected(g):
            log.debug(f"random_connected n={n} p={p} seed={seed}: connected after {attempt} attempts")
            return _from_networkx(g)

    raise GenerationError(
        f"No connected G({n}, {p}) sample in {settings.RC_GENERATOR_MAX_ATTEMPTS} attempts"
    )


def _random_tree(n: int, seed: int) -> Graph:
    if n == 2:
        return Graph.from_edges([(0, 1)])

    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]

    return _from_networkx(nx.from_prufer_sequence(sequence))


def _cycle_with_pendants(n: int, pendants: list[int]) -> Graph:
    edges = list(nx.cycle_graph(n).edges())
    edges.extend((v, n + i) for i, v in enumerate(sorted(pendants)))

    return Graph.from_edges(edges, n=n + len(pendants))


def generate(spec: FamilySpec) -> Graph:
    """
    Build the graph a family spec names, with canonical vertex numbering.
    Randomized families are a pure function of the seed.

    Parameters:
        spec (FamilySpec): The validated family spec.

    Returns:
        Graph: The generated connected graph.
    """

    match spec.family:
        case Family.CYCLE:
            return _from_networkx(nx.cycle_graph(spec.n))
        case Family.PATH:
            return _from_networkx(nx.path_graph(spec.n))
        case Family.STAR:
            return _from_networkx(nx.star_graph(spec.n))
        case Family.THETA:
            return _theta(spec.arms)
        case Family.RANDOM_CONNECTED:
            return _random_connected(spec.n, spec.p, spec.seed)
        case Family.RANDOM_TREE:
            return _random_tree(spec.n, spec.seed)
        case Family.BARBELL_BRIDGE:
            return _from_networkx(nx.barbell_graph(spec.clique, spec.bridge_length - 1))
        case Family.CYCLE_WITH_PENDANTS:
            return _cycle_with_pendants(spec.n, spec.pendants)

    raise InvalidGraphError(f"Unknown family {spec.family}")


def standard_corpus() -> Iterator[FamilySpec]:
    """
    The fixed corpus the construction is certified on: cycles, paths,
    stars, theta graphs, cycles with pendants, barbells, random connected
    graphs and random trees, all with fixed seeds.

    Yields:
        FamilySpec: Each corpus member.
    """

    for n in range(3, 31):
        yield FamilySpec(family=Family.CYCLE, n=n)

    for n in range(2, 31):
        yield FamilySpec(family=Family.PATH, n=n)

    for q in range(1, 20):
        yield FamilySpec(family=Family.STAR, n=q)

    for a in range(1, 6):
        for b in range(max(a, 2), 6):
            for c in range(b, 6):
                yield FamilySpec(family=Family.THETA, arms=[a, b, c])

    for n in range(3, 13):
        for pendants in ([0], [0, n // 2], list(range(n))):
            yield FamilySpec(family=Family.CYCLE_WITH_PENDANTS, n=n, pendants=pendants)

    for clique in (3, 4, 5):
        for length in (1, 2, 3):
            yield FamilySpec(family=Family.BARBELL_BRIDGE, clique=clique, bridge_length=length)

    for n in (8, 12, 16, 20, 25, 30, 40):
        for p in (0.15, 0.3, 0.6):
            for seed in (1, 2):
                yield FamilySpec(family=Family.RANDOM_CONNECTED, n=n, p=p, seed=seed)

    for n in range(2, 26):
        yield FamilySpec(family=Family.RANDOM_TREE, n=n, seed=n)
