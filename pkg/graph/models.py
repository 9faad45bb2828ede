from functools import cached_property
from pydantic import BaseModel, Field, model_validator
from typing import Iterable, Optional

from utils.exceptions import InvalidGraphError

Edge = tuple[int, int]


def edge_key(a: int, b: int) -> Edge:
    """
    Normalize an unordered vertex pair to an edge tuple with u < v.

    Parameters:
        a (int): One endpoint.
        b (int): The other endpoint.

    Returns:
        Edge: The pair ordered so the smaller id comes first.
    """

    return (a, b) if a < b else (b, a)


class Graph(BaseModel):
    """
    Simple, finite, undirected graph on the dense vertex ids 0..n-1.
    Edges are stored sorted with u < v; the graph is never mutated.
    """

    n: int = Field(ge=0)
    edges: tuple[Edge, ...] = ()

    @model_validator(mode="after")
    def check_simple(self) -> "Graph":
        seen = set()

        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(f"Self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"Edge ({u}, {v}) outside 0..{self.n - 1}")

            key = edge_key(u, v)
            if key in seen:
                raise InvalidGraphError(f"Duplicate edge {key}")
            seen.add(key)

        self.edges = tuple(sorted(seen))

        return self

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], n: Optional[int] = None) -> "Graph":
        """
        Build a graph from an edge iterable. The vertex count defaults to
        one more than the largest id mentioned.

        Parameters:
            edges (Iterable[Edge]): Unordered vertex pairs.
            n (Optional[int]): Vertex count, when isolated trailing ids matter.

        Returns:
            Graph: The validated graph.
        """

        edges = tuple(edges)

        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)

        return cls(n=n, edges=edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbors = [[] for _ in range(self.n)]

        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)

        return tuple(tuple(sorted(adj)) for adj in neighbors)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return edge_key(a, b) in self.edge_set

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidGraphError(f"Unknown vertex id {v} (n={self.n})")


class Metrics(BaseModel):
    """
    Distance metrics of a connected graph.
    """

    distances: list[list[int]]
    eccentricities: list[int]
    radius: int
    diameter: int
    centers: list[int]


class LayerDecomposition(BaseModel):
    """
    Partition of V into the distance layers N^0(D), ..., N^k(D) of a core D.
    """

    core: frozenset[int]
    layers: list[frozenset[int]]
    distance: list[int]

    @property
    def step(self) -> int:
        return len(self.layers) - 1

    def layer_of(self, v: int) -> int:
        return self.distance[v]
