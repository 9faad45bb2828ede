import yaml

from pydantic import BaseModel, Field
from typing import Optional, TextIO

from coloring.models import Coloring, RcResult, StageReport, VerificationReport
from graph.models import Graph, Metrics
from utils.exceptions import GraphParseError


class InputSummary(BaseModel):
    source: str
    n: int
    m: int


class MetricsSummary(BaseModel):
    radius: int
    diameter: int
    centers: list[int]
    bridges: int


class StageSummary(BaseModel):
    k: int
    b_k: int
    budget: int
    palette: list[int]
    ears: int
    colors_used: int


class RunReport(BaseModel):
    """
    The document a run writes next to its colouring. Field order is the
    serialization order; optional sections are left out when unset.
    """

    input: InputSummary
    metrics: MetricsSummary
    stages: Optional[list[StageSummary]] = None
    b: Optional[list[int]] = None
    bound: Optional[int] = None
    colors_used: Optional[int] = None
    verified: Optional[bool] = None
    failures: Optional[list[list[int]]] = None
    witnesses: Optional[dict[str, list[int]]] = None
    corollary1: Optional[bool] = None
    regime: Optional[str] = None
    warnings: list[str] = Field(default_factory=list)
    timings: Optional[dict[str, float]] = None

    def to_yaml(self) -> str:
        return yaml.safe_dump(
            self.model_dump(exclude_none=True),
            sort_keys=False,
            default_flow_style=None,
        )


def summarize_stage(stage: StageReport) -> StageSummary:
    return StageSummary(
        k=stage.k,
        b_k=stage.b_k,
        budget=stage.budget,
        palette=[stage.palette_start, stage.palette_start + stage.palette_size - 1],
        ears=len(stage.ears),
        colors_used=stage.colors_used,
    )


def new_report(source: str, graph: Graph, metrics: Metrics, bridges: int) -> RunReport:
    """
    Start a report with the input and metrics sections filled in.

    Parameters:
        source (str): Where the graph came from, "-" for standard input.
        graph (Graph): The input graph.
        metrics (Metrics): Its distance metrics.
        bridges (int): Its bridge count.

    Returns:
        RunReport: The report fragment.
    """

    return RunReport(
        input=InputSummary(source=source, n=graph.n, m=graph.m),
        metrics=MetricsSummary(
            radius=metrics.radius,
            diameter=metrics.diameter,
            centers=metrics.centers,
            bridges=bridges,
        ),
    )


def add_result(report: RunReport, result: RcResult) -> None:
    report.stages = [summarize_stage(stage) for stage in result.stages]
    report.bound = result.bound
    report.colors_used = result.colors_used

    for stage in result.stages:
        report.warnings.extend(f"stage {stage.k}: {w}" for w in stage.warnings)


def add_verification(report: RunReport, verification: VerificationReport) -> None:
    report.verified = verification.ok
    report.failures = [list(pair) for pair in verification.failures]

    if verification.witness_paths is not None:
        report.witnesses = {
            f"{u}-{v}": path for (u, v), path in sorted(verification.witness_paths.items())
        }


def format_coloring(graph: Graph, coloring: Coloring) -> str:
    """
    One "u v c" line per edge, in sorted edge order.

    Parameters:
        graph (Graph): The graph.
        coloring (Coloring): A colouring of every edge.

    Returns:
        str: The colouring file text.
    """

    return "".join(f"{u} {v} {coloring.assignment[(u, v)]}\n" for u, v in graph.edges)


def read_coloring(text: str | TextIO, graph: Graph) -> Coloring:
    """
    Parse a colouring file for a graph. Blank lines and lines starting
    with '#' are skipped; endpoints may come in either order.

    Parameters:
        text (str | TextIO): The file contents or an open file.
        graph (Graph): The graph the colouring belongs to.

    Returns:
        Coloring: The parsed colouring (possibly partial).

    Raises:
        GraphParseError: On malformed lines, unknown or repeated edges, or
        non-positive colours.
    """

    if not isinstance(text, str):
        text = text.read()

    assignment = {}

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()

        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) != 3 or not all(t.isascii() and t.isdigit() for t in tokens):
            raise GraphParseError(f"Line {lineno}: expected 'u v c', got {line!r}")

        u, v, c = map(int, tokens)
        key = (u, v) if u < v else (v, u)

        if key not in graph.edge_set:
            raise GraphParseError(f"Line {lineno}: ({u}, {v}) is not an edge of the graph")
        if key in assignment:
            raise GraphParseError(f"Line {lineno}: edge ({u}, {v}) coloured twice")
        if c < 1:
            raise GraphParseError(f"Line {lineno}: colours must be positive, got {c}")

        assignment[key] = c

    return Coloring(assignment=assignment)
