from typing import Optional, Tuple

import click

from ..core.errors import InvalidColoring
from ..models.diagram import BraidDiagram, Coloring
from ..services.diagram import artin_moves, iota, is_pure, parse_diagram, permutation, render_diagram
from .common import ReportBuilder, reported


def _coloring(text: Optional[str], n: int) -> Coloring:
    if text is None:
        return Coloring.identity(n)
    try:
        return Coloring(tuple(int(part) for part in text.split(",")))
    except ValueError:
        raise InvalidColoring(f"'{text}' is not a comma separated list of integers")


@click.command("diagram-to-word")
@click.option("--coloring", default=None, help="Component of each starting position, e.g. 2,1,3")
@click.option("--moves", "list_moves", is_flag=True, help="Also list the applicable Artin moves")
@click.argument("source", type=click.File("r"), default="-")
@reported
def diagram_to_word(report: ReportBuilder, coloring: Optional[str], list_moves: bool, source):
    """Read a diagram ("braid n=<n>" then event positions) and write its word in G_n^2"""
    diagram = parse_diagram(source.read())
    colors = _coloring(coloring, diagram.n)
    report.input("diagram", {"n": diagram.n, "events": list(diagram.events), "coloring": list(colors.components)})
    report.output("permutation", [p + 1 for p in permutation(diagram).array_form])
    report.output("pure", is_pure(diagram))
    word = iota(diagram, colors)
    report.context(word.context)
    report.output("word", str(word), text=str(word))
    if list_moves:
        moves = [str(move) for move in artin_moves(diagram)]
        report.output("moves", moves, text=f"{len(moves)} applicable moves")


@click.command("render-diagram")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of strands")
@click.argument("events", type=int, nargs=-1)
@reported
def render(report: ReportBuilder, n: int, events: Tuple[int, ...]):
    """Write the text form of the diagram with the given event positions"""
    diagram = BraidDiagram(n, tuple(events))
    text = render_diagram(diagram)
    report.input("diagram", {"n": n, "events": list(events)})
    report.output("text", text, text=text)
    report.output("pure", is_pure(diagram))
