import typer

from pathlib import Path
from typing import Annotated, Optional

from coloring.builder import theorem2_bound
from commands.common import exit_on_error, load_graph
from graph.core import find_bridges, radius_center
from utils.report import new_report

InputOption = Annotated[
    Optional[Path],
    typer.Option(
        "--input", "-i", exists=True, dir_okay=False, help="Edge-list file, standard input if omitted."
    ),
]


def cmd_metrics(input: InputOption = None) -> None:
    """
    Print n, m, radius, diameter, centers and the bridge count.
    """

    with exit_on_error():
        source, graph = load_graph(input)
        report = new_report(source, graph, radius_center(graph), len(find_bridges(graph)))

    typer.echo(report.to_yaml(), nl=False)


def cmd_bound(input: InputOption = None) -> None:
    """
    Print the bound sum of max(2i+1, b_i) and the bridge counts b_1..b_r.
    """

    with exit_on_error():
        source, graph = load_graph(input)
        report = new_report(source, graph, radius_center(graph), len(find_bridges(graph)))
        report.bound, report.b = theorem2_bound(graph)

    typer.echo(report.to_yaml(), nl=False)
