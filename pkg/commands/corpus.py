import typer

from concurrent.futures import ProcessPoolExecutor
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table
from typing import Annotated, Optional

from coloring.builder import bound_regime, build, corollary1_check, theorem2_bound
from coloring.verifier import is_rainbow_connected
from commands.common import exit_on_error
from graph.generators import FamilySpec, generate, standard_corpus
from utils.exceptions import ExitCode
from utils.log import get_logger
from utils.settings import get_settings

log = get_logger()
settings = get_settings()


class CorpusRow(BaseModel):
    name: str
    n: int
    m: int
    radius: int
    bound: int
    colors_used: int
    verified: bool
    corollary1: bool
    regime: str
    warnings: int

    @property
    def ok(self) -> bool:
        return (
            self.verified
            and self.corollary1
            and self.colors_used <= self.bound
            and self.warnings == 0
        )


def certify(spec: FamilySpec) -> CorpusRow:
    """
    Build, bound and verify one corpus graph.

    Parameters:
        spec (FamilySpec): The corpus member.

    Returns:
        CorpusRow: The outcome.
    """

    graph = generate(spec)
    result = build(graph)
    bound, _ = theorem2_bound(graph)

    return CorpusRow(
        name=spec.name,
        n=graph.n,
        m=graph.m,
        radius=result.radius,
        bound=bound,
        colors_used=result.colors_used,
        verified=is_rainbow_connected(graph, result.coloring).ok,
        corollary1=corollary1_check(graph, result.stages),
        regime=bound_regime(result.stages),
        warnings=sum(len(stage.warnings) for stage in result.stages),
    )


def run_corpus(jobs: int = 1) -> list[CorpusRow]:
    specs = list(standard_corpus())

    if jobs <= 1:
        return [certify(spec) for spec in specs]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(certify, specs))


def cmd_corpus(
    jobs: Annotated[
        Optional[int], typer.Option(help="Worker processes, one graph per task.")
    ] = None,
) -> None:
    """
    Certify the construction on the standard corpus and print one row per
    graph. Exits nonzero if any graph fails.
    """

    jobs = settings.RC_JOBS if jobs is None else jobs

    with exit_on_error():
        rows = run_corpus(jobs)

    table = Table(title=f"{settings.RC_APP_NAME} corpus")
    for column in ("graph", "n", "m", "r", "bound", "colors", "verified", "cor. 1", "regime"):
        table.add_column(column)

    for row in rows:
        table.add_row(
            row.name,
            str(row.n),
            str(row.m),
            str(row.radius),
            str(row.bound),
            str(row.colors_used),
            "yes" if row.verified else "[red]no[/red]",
            "yes" if row.corollary1 else "[red]no[/red]",
            row.regime,
        )

    Console().print(table)

    failed = [row.name for row in rows if not row.ok]
    if failed:
        log.error(f"{len(failed)} of {len(rows)} corpus graphs failed: {', '.join(failed)}")
        raise typer.Exit(code=ExitCode.INTERNAL)

    log.info(f"All {len(rows)} corpus graphs certified")
