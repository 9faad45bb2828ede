from enum import Enum
from pydantic import BaseModel, Field
from typing import Optional

from graph.models import Edge


class Orientation(str, Enum):
    """
    Direction of an even colouring, read from the ear's first vertex.
    """

    ASCENDING = "ascending"
    DESCENDING = "descending"


class SegmentSide(str, Enum):
    """
    Which part of a host ear a splice reuses, relative to the host's seed.
    """

    HEAD = "head"
    TAIL = "tail"


class Splice(BaseModel):
    """
    Where a spliced ear P = P1 + Q1 came from.
    """

    prefix_length: int
    host: int
    side: SegmentSide


class EarPath(BaseModel):
    """
    A D-ear v0 v1 ... vp: both ends in the core, internal vertices outside.
    """

    id: int
    vertices: list[int]
    splice: Optional[Splice] = None
    orientation: Optional[Orientation] = None

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def internal(self) -> list[int]:
        return self.vertices[1:-1]

    @property
    def new_vertices(self) -> list[int]:
        """
        Internal vertices this ear absorbs into the core.
        """

        if self.splice is None:
            return self.internal

        return self.vertices[1 : self.splice.prefix_length]

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))


class BridgeFrontier(BaseModel):
    """
    B, the frontier vertices hanging off the core by a bridge, and B_E,
    those bridges as (frontier vertex, core vertex) pairs.
    """

    vertices: list[int]
    bridges: list[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.vertices)


class PaletteBlock(BaseModel):
    stage: int
    start: int
    size: int

    def color(self, offset: int) -> int:
        return self.start + offset - 1


class Coloring(BaseModel):
    """
    Partial map edge -> positive colour, plus the per-stage palette blocks.
    """

    assignment: dict[Edge, int] = Field(default_factory=dict)
    palette_blocks: list[PaletteBlock] = Field(default_factory=list)

    def colors(self) -> set[int]:
        return set(self.assignment.values())

    def get(self, edge: Edge) -> Optional[int]:
        return self.assignment.get(edge)


class StageReport(BaseModel):
    """
    What one expansion step D^k -> D^{k-1} did.
    """

    k: int
    b_k: int
    bridges: list[Edge] = Field(default_factory=list)
    ears: list[EarPath] = Field(default_factory=list)
    palette_start: int
    palette_size: int
    colors_used: int = 0
    d_in: list[int]
    d_out: list[int]
    warnings: list[str] = Field(default_factory=list)
    induced_bridges: list[Edge] = Field(default_factory=list)

    @property
    def budget(self) -> int:
        return max(2 * self.k + 1, self.b_k)


class RcResult(BaseModel):
    coloring: Coloring
    bound: int
    colors_used: int
    stages: list[StageReport]
    center: Optional[int]
    radius: int


class VerificationReport(BaseModel):
    ok: bool
    checked_pairs: int
    failures: list[tuple[int, int]] = Field(default_factory=list)
    witness_paths: Optional[dict[tuple[int, int], list[int]]] = None


class OracleLimits(BaseModel):
    max_edges: int = Field(default=9, gt=0)
    max_colors: int = Field(default=12, gt=0)
    time_budget: float = Field(default=60.0, gt=0)
