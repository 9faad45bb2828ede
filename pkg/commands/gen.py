import typer

from typing import Annotated, Optional

from commands.common import exit_on_error
from graph.core import format_edge_list
from graph.generators import Family, generate
from utils.validators import GenRequest


def cmd_gen(
    family: Annotated[Family, typer.Argument(help="Graph family.")],
    n: Annotated[Optional[int], typer.Option(help="Vertex count, or leaves of a star.")] = None,
    p: Annotated[Optional[float], typer.Option(help="Edge probability.")] = None,
    seed: Annotated[int, typer.Option(help="Seed of the random families.")] = 0,
    arms: Annotated[Optional[str], typer.Option(help="Theta arm lengths, e.g. 2,3,4.")] = None,
    pendants: Annotated[
        Optional[str], typer.Option(help="Cycle positions carrying a pendant, e.g. 0,3.")
    ] = None,
    clique: Annotated[Optional[int], typer.Option(help="Barbell clique size.")] = None,
    bridge_length: Annotated[
        Optional[int], typer.Option(help="Bridges between the barbell cliques.")
    ] = None,
) -> None:
    """
    Print the canonical edge list of a generated graph.
    """

    with exit_on_error():
        spec = GenRequest(
            family=family,
            n=n,
            p=p,
            seed=seed,
            arms=arms,
            pendants=pendants,
            clique=clique,
            bridge_length=bridge_length,
        ).to_spec()
        graph = generate(spec)

    typer.echo(format_edge_list(graph), nl=False)
