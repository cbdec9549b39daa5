"""
Shared options and report handling for the CLI commands
"""

import functools
import logging
import time
from typing import Any, Callable, List, Optional

import click
from pydantic import JsonValue

from ..core.config import Settings
from ..core.errors import BraidGroupError
from ..models.word import GroupContext, GroupKind, Word
from ..schemas.report import ContextSchema, ErrorSchema, Report, jsonable
from ..services.oracle import RewritingOracle
from ..services.words import parse

logger = logging.getLogger(__name__)

KINDS = [kind.value for kind in GroupKind]


def _echo(value: Any) -> Any:
    """Parameter value as echoed in reports; open files are named, not dumped"""
    if hasattr(value, "read"):
        return getattr(value, "name", "-")
    return value


class ReportBuilder:
    """Collects one command's report and its human-readable summary"""

    def __init__(self, command: str, settings: Settings, parameters: dict):
        self.settings = settings
        self.report = Report(
            tool=settings.project_name,
            version=settings.version,
            command=command,
            parameters={key: jsonable(_echo(value)) for key, value in parameters.items()},
        )
        self.lines: List[str] = []

    def context(self, context: GroupContext) -> None:
        self.report.context = ContextSchema.from_context(context)

    def input(self, key: str, value: Any) -> None:
        self.report.inputs[key] = jsonable(value)

    def output(self, key: str, value: Any, text: Optional[str] = None) -> None:
        self.report.outputs[key] = jsonable(value)
        if text is not None:
            self.lines.append(text)

    def verdict(self, key: str, value: str, text: Optional[str] = None) -> None:
        self.report.verdicts[key] = value
        if text is not None:
            self.lines.append(text)

    def say(self, text: str) -> None:
        self.lines.append(text)

    def fail(self, error: BraidGroupError) -> None:
        details: JsonValue = jsonable(error.details())
        self.report.error = ErrorSchema(type=type(error).__name__, message=str(error), details=details)

    def oracle(self) -> RewritingOracle:
        return RewritingOracle(self.settings)

    def word(self, text: str, context: GroupContext, key: str = "word") -> Word:
        """Parse an input word and record it with the context"""
        self.context(context)
        word = parse(text, context)
        self.input(key, str(word))
        return word

    def emit(self, output_format: str) -> None:
        if output_format == "structured":
            click.echo(self.report.model_dump_json(indent=2))
            return
        if self.report.error is not None:
            click.echo(f"error ({self.report.error.type}): {self.report.error.message}", err=True)
            return
        for line in self.lines:
            click.echo(line)


def context_options(func: Callable) -> Callable:
    func = click.option(
        "--kind",
        type=click.Choice(KINDS),
        default=GroupKind.PLAIN.value,
        show_default=True,
        help="Presentation the words are read in",
    )(func)
    func = click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of strands")(func)
    return func


def bound_options(func: Callable) -> Callable:
    func = click.option(
        "--max-states", type=click.IntRange(min=1), default=None, help="Visited-word cap per search stage"
    )(func)
    func = click.option(
        "--max-len", type=click.IntRange(min=0), default=None, help="Longest intermediate word (default |u| + EXTRA_LEN)"
    )(func)
    return func


def reported(func: Callable) -> Callable:
    """
    Run a command body with a ReportBuilder, adding --format and --timing.

    Domain errors become an error report and exit code 1.
    """

    @click.option(
        "--format",
        "output_format",
        type=click.Choice(["text", "structured"]),
        default=None,
        help="Output format (default OUTPUT_FORMAT)",
    )
    @click.option("--timing", is_flag=True, help="Add elapsed milliseconds to the report")
    @click.pass_context
    @functools.wraps(func)
    def wrapper(ctx: click.Context, output_format: Optional[str], timing: bool, **kwargs):
        settings = ctx.find_object(Settings) or Settings()
        builder = ReportBuilder(ctx.info_name or func.__name__, settings, kwargs)
        started = time.perf_counter()
        exit_code = 0
        try:
            func(builder, **kwargs)
        except BraidGroupError as e:
            logger.error(f"{builder.report.command} failed: {e}")
            builder.fail(e)
            exit_code = 1
        if timing:
            builder.report.timing_ms = round((time.perf_counter() - started) * 1000, 3)
        builder.emit(output_format or settings.output_format)
        if exit_code:
            ctx.exit(exit_code)

    return wrapper
