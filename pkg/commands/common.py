import sys
import typer

from contextlib import contextmanager
from pathlib import Path
from pydantic import ValidationError
from typing import Iterator, Optional

from graph.core import parse_edge_list, require_connected
from graph.models import Graph
from utils.exceptions import ConstructionError, ExitCode, RainbowError
from utils.log import get_logger

log = get_logger()


@contextmanager
def exit_on_error() -> Iterator[None]:
    """
    Turn package errors into a logged message and the matching exit status.
    """

    try:
        yield
    except ConstructionError as e:
        log.error(f"Internal error: {e}", exc_info=True)
        raise typer.Exit(code=e.exit_code)
    except RainbowError as e:
        log.error(str(e))
        raise typer.Exit(code=e.exit_code)
    except ValidationError as e:
        log.error(f"Invalid arguments: {e}")
        raise typer.Exit(code=ExitCode.INVALID)


def load_graph(path: Optional[Path], connected: bool = True) -> tuple[str, Graph]:
    """
    Read an edge list from a file, or from standard input when no path is given.

    Parameters:
        path (Optional[Path]): The edge-list file.
        connected (bool): Require the graph to be connected.

    Returns:
        tuple[str, Graph]: The source name and the parsed graph.
    """

    if path is None:
        source, graph = "-", parse_edge_list(sys.stdin)
    else:
        with open(path, encoding="utf-8") as f:
            source, graph = str(path), parse_edge_list(f)

    if connected:
        require_connected(graph)

    return source, graph


def write_text(text: str, path: Optional[Path], err: bool = False) -> None:
    if path is None:
        typer.echo(text, nl=False, err=err)
        return

    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
