from typing import Optional

import click

from ..models.word import GroupContext
from ..schemas.report import chain_payload, relation_checks_payload
from ..services.maps import check_homomorphism, compose, parse_chain, resolve_map
from .common import KINDS, ReportBuilder, bound_options, reported


@click.command("map")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Strands of the input word")
@click.option("--kind", type=click.Choice(KINDS), default=None, help="Input kind (default: what the first map reads)")
@click.option("--chain", "chain_text", required=True, help="Comma separated maps, applied left to right")
@click.argument("word")
@reported
def map_word(report: ReportBuilder, n: int, kind: Optional[str], chain_text: str, word: str):
    """
    Apply maps to WORD.

    Names: i, p, phi, chi, psi, psi:m, omega, forget, pair:i-j
    """
    names = parse_chain(chain_text)
    kind = kind or resolve_map(names[0]).source.value
    parsed = report.word(word, GroupContext(n, kind))
    chain = compose(names, parsed)
    report.output("chain", chain_payload(chain))
    for name, image in chain:
        report.say(f"{name}: {image or '1'}  {image.context}")
    final = chain[-1][1]
    report.output("word", str(final))


@click.command("homcheck")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Strands the map is checked at")
@click.option("--map", "name", required=True, help="Map name, as accepted by the map command")
@bound_options
@reported
def homcheck(report: ReportBuilder, n: int, name: str, max_len: Optional[int], max_states: Optional[int]):
    """Check that the map sends both sides of every defining relation to equal words"""
    checks = check_homomorphism(name, n, report.oracle(), max_len, max_states)
    spec = resolve_map(name)
    report.context(spec.source_context(n))
    report.output("relations", relation_checks_payload(checks))

    confirmed = sum(1 for check in checks if check.verdict.is_equivalent)
    overall = "equivalent" if confirmed == len(checks) else "unknown"
    if any(check.verdict.is_distinct for check in checks):
        overall = "distinct"
    report.verdict("homomorphism", overall, text=f"{spec.name}: {confirmed}/{len(checks)} relations confirmed")
    for check in checks:
        if not check.verdict.is_equivalent:
            report.say(f"  {check.rule}: {check.verdict.verdict.value}")
