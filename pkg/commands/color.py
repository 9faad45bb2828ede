import time
import typer

from pathlib import Path
from typing import Annotated, Optional

from coloring.builder import bound_regime, build, corollary1_check
from coloring.verifier import is_rainbow_connected
from commands.common import exit_on_error, load_graph, write_text
from commands.metrics import InputOption
from graph.core import find_bridges, radius_center
from utils.exceptions import ExitCode
from utils.report import add_result, add_verification, format_coloring, new_report, read_coloring
from utils.settings import get_settings

settings = get_settings()


def cmd_color(
    input: InputOption = None,
    output: Annotated[
        Optional[Path], typer.Option(help="Colouring file, standard output if omitted.")
    ] = None,
    report: Annotated[
        Optional[Path], typer.Option(help="Run report file, standard error if omitted.")
    ] = None,
    verify: Annotated[bool, typer.Option(help="Check the colouring with the verifier.")] = False,
    witnesses: Annotated[
        bool, typer.Option(help="Include one rainbow path per pair (implies --verify).")
    ] = False,
    timings: Annotated[
        Optional[bool], typer.Option(help="Include per-phase timings in the report.")
    ] = None,
) -> None:
    """
    Build a rainbow colouring with the layered construction and write it
    as "u v c" lines, followed by the run report.
    """

    timings = settings.RC_REPORT_TIMINGS if timings is None else timings
    phases: dict[str, float] = {}

    with exit_on_error():
        started = time.perf_counter()
        source, graph = load_graph(input)
        metrics = radius_center(graph)
        bridges = find_bridges(graph)
        phases["load"] = time.perf_counter() - started

        started = time.perf_counter()
        result = build(graph)
        phases["build"] = time.perf_counter() - started

        run = new_report(source, graph, metrics, len(bridges))
        add_result(run, result)

        if verify or witnesses:
            started = time.perf_counter()
            add_verification(run, is_rainbow_connected(graph, result.coloring, witnesses))
            phases["verify"] = time.perf_counter() - started

        run.corollary1 = corollary1_check(graph, result.stages)
        run.regime = bound_regime(result.stages)

        if timings:
            run.timings = {phase: round(seconds, 6) for phase, seconds in phases.items()}

    write_text(format_coloring(graph, result.coloring), output)
    write_text(run.to_yaml(), report, err=True)

    if run.verified is False:
        raise typer.Exit(code=ExitCode.NOT_RAINBOW)


def cmd_verify(
    coloring: Annotated[
        Path, typer.Option(exists=True, dir_okay=False, help="Colouring file with 'u v c' lines.")
    ],
    input: InputOption = None,
    witnesses: Annotated[bool, typer.Option(help="Include one rainbow path per pair.")] = False,
) -> None:
    """
    Check whether a colouring makes the graph rainbow connected. Exits
    with status 6 when some pair has no rainbow path.
    """

    with exit_on_error():
        source, graph = load_graph(input)

        with open(coloring, encoding="utf-8") as f:
            assignment = read_coloring(f, graph)

        run = new_report(source, graph, radius_center(graph), len(find_bridges(graph)))
        run.colors_used = len(assignment.colors())
        add_verification(run, is_rainbow_connected(graph, assignment, witnesses))

    typer.echo(run.to_yaml(), nl=False)

    if not run.verified:
        raise typer.Exit(code=ExitCode.NOT_RAINBOW)
