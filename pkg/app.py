import typer

from commands.color import cmd_color, cmd_verify
from commands.corpus import cmd_corpus
from commands.exact import cmd_exact
from commands.gen import cmd_gen
from commands.metrics import cmd_bound, cmd_metrics

from utils.log import get_logger
from utils.settings import get_settings

settings = get_settings()
log = get_logger()

app = typer.Typer(
    name=settings.RC_APP_NAME,
    help="Rainbow colourings of connected graphs from a layered core construction.",
    no_args_is_help=True,
    add_completion=False,
)

app.command("metrics")(cmd_metrics)
app.command("bound")(cmd_bound)
app.command("color")(cmd_color)
app.command("verify")(cmd_verify)
app.command("exact")(cmd_exact)
app.command("gen")(cmd_gen)
app.command("corpus")(cmd_corpus)


@app.callback()
def main() -> None:
    log.debug(f"Starting {settings.RC_APP_NAME} {settings.RC_VERSION}")


if __name__ == "__main__":
    app()
