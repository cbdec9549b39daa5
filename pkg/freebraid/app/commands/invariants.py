from typing import Optional

import click

from ..models.invariants import Triviality
from ..models.word import GroupContext
from ..schemas.report import brunnian_payload, certificate_payload, profile_payload
from ..services.invariants import InvariantService
from .common import ReportBuilder, bound_options, reported


def _service(report: ReportBuilder) -> InvariantService:
    return InvariantService(report.settings, report.oracle())


@click.command("profile")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Number of strands")
@bound_options
@click.argument("word")
@reported
def profile(report: ReportBuilder, n: int, max_len: Optional[int], max_states: Optional[int], word: str):
    """Delete each strand in turn and decide whether chi of the image is trivial"""
    parsed = report.word(word, GroupContext.plain(n))
    service = _service(report)
    result = service.deletion_profile(parsed, max_len, max_states)
    report.output("profile", profile_payload(result))
    for entry in result.entries:
        if not entry.in_h:
            report.verdict(f"m={entry.m}", "not-in-h", text=f"m={entry.m}: psi image not in H")
            continue
        report.verdict(
            f"m={entry.m}",
            entry.verdict.value,
            text=f"m={entry.m}: chi(psi) = {entry.chi_image or '1'} -> {entry.verdict.value}",
        )

    certificate = service.certify_nontrivial(parsed, profile=result)
    report.output("certificate", certificate_payload(certificate))
    if certificate is not None:
        report.say(f"nontrivial: certified by deleting strand {certificate.m}")


@click.command("brunnian")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Number of strands")
@bound_options
@click.argument("word")
@reported
def brunnian(report: ReportBuilder, n: int, max_len: Optional[int], max_states: Optional[int], word: str):
    """Check that every single-strand deletion is trivial and look for a nontriviality certificate"""
    parsed = report.word(word, GroupContext.plain(n))
    result = _service(report).brunnian_check(parsed, max_len, max_states)
    report.output("brunnian", brunnian_payload(result))

    for deletion in result.deletions:
        report.say(f"delete {deletion.m}: {deletion.residual or '1'} -> {deletion.verdict.value}")
    candidate = {True: "candidate", False: "not-brunnian", None: "unknown"}[result.candidate]
    report.verdict("brunnian", candidate, text=f"brunnian: {candidate}")
    nontrivial = Triviality.NONTRIVIAL.value if result.certified_nontrivial else Triviality.UNKNOWN.value
    text = f"certificate: m={result.certificate.m}" if result.certificate else "certificate: none"
    report.verdict("nontrivial", nontrivial, text=text)
