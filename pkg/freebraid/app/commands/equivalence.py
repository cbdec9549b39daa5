from typing import Optional

import click

from ..models.rewriting import EquivVerdict
from ..models.word import GroupContext
from ..schemas.report import verdict_payload, witness_payload
from ..services.normalform import flatten, normalization_witness, normalize_h
from .common import ReportBuilder, bound_options, context_options, reported


def _summarize(report: ReportBuilder, result: EquivVerdict) -> None:
    report.output("result", verdict_payload(result))
    if result.is_equivalent:
        text = f"equivalent ({len(result.witness)} steps)"
    elif result.is_distinct:
        text = f"distinct (separated by {result.invariant})"
    else:
        text = f"unknown ({result.reason})"
    report.verdict("equivalence", result.verdict.value, text=text)
    for step in result.witness:
        lhs = " ".join(map(str, step.lhs)) or "1"
        rhs = " ".join(map(str, step.rhs)) or "1"
        report.say(f"  @{step.position} [{step.tag} {step.direction}] {lhs} -> {rhs}")


@click.command("equiv")
@context_options
@bound_options
@click.argument("u")
@click.argument("v")
@reported
def equiv(
    report: ReportBuilder, n: int, kind: str, max_len: Optional[int], max_states: Optional[int], u: str, v: str
):
    """Decide whether U and V are equal, up to the search bounds"""
    context = GroupContext(n, kind)
    left = report.word(u, context, key="u")
    right = report.word(v, context, key="v")
    _summarize(report, report.oracle().bounded_equiv(left, right, max_len, max_states))


@click.command("trivial")
@context_options
@bound_options
@click.argument("word")
@reported
def trivial(report: ReportBuilder, n: int, kind: str, max_len: Optional[int], max_states: Optional[int], word: str):
    """Decide whether WORD is the identity, up to the search bounds"""
    parsed = report.word(word, GroupContext(n, kind))
    _summarize(report, report.oracle().bounded_trivial(parsed, max_len, max_states))


@click.command("normalize")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of strands")
@click.option("--witness", "with_witness", is_flag=True, help="Include the rewrite sequence to the block form")
@click.argument("word")
@reported
def normalize(report: ReportBuilder, n: int, with_witness: bool, word: str):
    """Block form of a dotted word with an even number of dots on every strand"""
    parsed = report.word(word, GroupContext.dotted(n))
    blocks = normalize_h(parsed)
    flat = flatten(blocks)
    report.output("blocks", [list(triple) for triple in blocks.triples()])
    report.output("word", str(flat), text=str(flat))
    if with_witness:
        steps = normalization_witness(parsed)
        report.output("witness", witness_payload(steps), text=f"witness: {len(steps)} steps")
