import typer

from typing import Annotated, Optional

from coloring.oracle import exact_rc
from commands.common import exit_on_error, load_graph
from commands.metrics import InputOption
from utils.validators import ExactRequest


def cmd_exact(
    input: InputOption = None,
    max_edges: Annotated[Optional[int], typer.Option(help="Refuse graphs with more edges.")] = None,
    max_colors: Annotated[Optional[int], typer.Option(help="Refuse if rc exceeds this.")] = None,
    time_budget: Annotated[
        Optional[float], typer.Option(help="Seconds before the search gives up.")
    ] = None,
) -> None:
    """
    Print the exact rainbow connection number found by exhaustive search.
    """

    with exit_on_error():
        limits = ExactRequest(
            max_edges=max_edges, max_colors=max_colors, time_budget=time_budget
        ).to_limits()
        _, graph = load_graph(input)
        rc = exact_rc(graph, limits)

    typer.echo(rc)
