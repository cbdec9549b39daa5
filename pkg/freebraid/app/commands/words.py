import logging
from typing import Optional

import click

from ..models.word import GroupContext
from ..schemas.report import fingerprint_payload
from ..services.fingerprints import fingerprint
from ..services.rewriting import random_walk
from ..services.words import involutive_reduce
from .common import ReportBuilder, context_options, reported

logger = logging.getLogger(__name__)


@click.command("reduce")
@context_options
@click.argument("word")
@reported
def reduce_word(report: ReportBuilder, n: int, kind: str, word: str):
    """Delete adjacent equal letters until none remain"""
    parsed = report.word(word, GroupContext(n, kind))
    reduced = involutive_reduce(parsed)
    report.output("word", str(reduced), text=str(reduced))
    report.output("length", len(reduced))


@click.command("walk")
@context_options
@click.option("--steps", type=click.IntRange(min=0), default=10, show_default=True, help="Rule applications")
@click.option("--seed", type=int, default=None, help="Random seed (default SEED)")
@click.argument("word")
@reported
def walk(report: ReportBuilder, n: int, kind: str, steps: int, seed: Optional[int], word: str):
    """Apply seeded random rule applications; the result stays in the class of WORD"""
    parsed = report.word(word, GroupContext(n, kind))
    seed = report.settings.seed if seed is None else seed
    result = random_walk(parsed, steps, seed)
    report.input("seed", seed)
    report.output("word", str(result), text=str(result))
    logger.info(f"Random walk of {steps} steps from '{parsed}' (seed {seed}) ended at '{result}'")


@click.command("invariants")
@context_options
@click.argument("word")
@reported
def invariants(report: ReportBuilder, n: int, kind: str, word: str):
    """Fingerprint of WORD: class invariants used to separate words"""
    parsed = report.word(word, GroupContext(n, kind))
    result = fingerprint(parsed)
    payload = fingerprint_payload(result)
    report.output("fingerprint", payload)

    odd = [name for name, bit in result.generator_parity if bit]
    report.say(f"odd generators: {' '.join(odd) or '-'}")
    if result.h_membership is not None:
        report.say(f"in H: {'yes' if result.h_membership else 'no'}")
    for (i, j), form in result.pair_profiles or ():
        report.say(f"pair ({i},{j}): {form or '1'}")
    for m, profiles in result.deletion_profiles or ():
        forms = ", ".join(f"({i},{j}) {form or '1'}" for (i, j), form in profiles)
        report.say(f"delete {m}: {forms}")
