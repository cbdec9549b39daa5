import logging
import sys
from typing import List, Optional

import click

from .core.config import Settings
from .commands.diagrams import diagram_to_word, render
from .commands.equivalence import equiv, normalize, trivial
from .commands.invariants import brunnian, profile
from .commands.maps import homcheck, map_word
from .commands.words import invariants, reduce_word, walk

settings = Settings()

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


@click.group(name="freebraid", help=settings.project_description)
@click.version_option(settings.version, prog_name=settings.project_name, message="%(prog)s %(version)s")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=settings.log_level.upper(),
    show_default=True,
    help="Logging level (logs go to stderr)",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str):
    logging.basicConfig(
        level=log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    ctx.obj = Settings()


# Register commands
for command in (
    reduce_word,
    walk,
    invariants,
    equiv,
    trivial,
    normalize,
    map_word,
    homcheck,
    profile,
    brunnian,
    diagram_to_word,
    render,
):
    cli.add_command(command)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit code: 0 on success (Unknown verdicts
    included), 1 on domain errors, 2 on usage errors.
    """
    try:
        result = cli.main(args=argv, prog_name="freebraid", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(run())
