"""
Structured report format: one JSON document per CLI invocation
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, JsonValue

from ..models.invariants import BrunnianReport, Certificate, DeletionProfile, Fingerprint
from ..models.rewriting import EquivVerdict, RelationCheck, WitnessStep
from ..models.word import GroupContext, Word


class ContextSchema(BaseModel):
    n: int
    kind: str

    @classmethod
    def from_context(cls, context: GroupContext) -> "ContextSchema":
        return cls(n=context.n, kind=context.kind.value)


class WitnessStepSchema(BaseModel):
    """One rewrite step; lhs and rhs are words in the report's text grammar"""

    position: int
    tag: str
    direction: str
    lhs: str
    rhs: str

    @classmethod
    def from_step(cls, step: WitnessStep) -> "WitnessStepSchema":
        return cls(
            position=step.position,
            tag=step.tag,
            direction=step.direction,
            lhs=" ".join(map(str, step.lhs)),
            rhs=" ".join(map(str, step.rhs)),
        )


class VerdictSchema(BaseModel):
    verdict: str
    witness: List[WitnessStepSchema] = Field(default_factory=list)
    invariant: Optional[str] = None
    reason: Optional[str] = None
    states: int = 0

    @classmethod
    def from_verdict(cls, result: EquivVerdict) -> "VerdictSchema":
        return cls(
            verdict=result.verdict.value,
            witness=[WitnessStepSchema.from_step(step) for step in result.witness],
            invariant=result.invariant,
            reason=result.reason,
            states=result.states,
        )


class DeletionEntrySchema(BaseModel):
    m: int
    image: str
    in_h: bool
    chi_image: Optional[str] = None
    reduced: Optional[str] = None
    verdict: str
    exact: bool
    invariant: Optional[str] = None


class CertificateSchema(BaseModel):
    m: int
    chain: List[str]
    word: str
    psi_image: str
    chi_image: str
    reduced: str
    separating_invariant: str

    @classmethod
    def from_certificate(cls, certificate: Certificate) -> "CertificateSchema":
        return cls(
            m=certificate.m,
            chain=list(certificate.chain),
            word=str(certificate.word),
            psi_image=str(certificate.psi_image),
            chi_image=str(certificate.chi_image),
            reduced=str(certificate.reduced),
            separating_invariant=certificate.separating_invariant,
        )


class ErrorSchema(BaseModel):
    type: str
    message: str
    details: Dict[str, JsonValue] = Field(default_factory=dict)


class Report(BaseModel):
    """Self-describing result of one command"""

    tool: str
    version: str
    command: str
    parameters: Dict[str, JsonValue] = Field(default_factory=dict)  # command echo
    context: Optional[ContextSchema] = None
    inputs: Dict[str, JsonValue] = Field(default_factory=dict)
    outputs: Dict[str, JsonValue] = Field(default_factory=dict)
    verdicts: Dict[str, str] = Field(default_factory=dict)
    timing_ms: Optional[float] = None
    error: Optional[ErrorSchema] = None

    model_config = {
        "json_schema_extra": {
            "example": {
                "tool": "Free Braid Groups",
                "version": "0.1.0",
                "command": "reduce",
                "parameters": {"n": 2, "kind": "plain", "word": "a(1,2) a(1,2)"},
                "context": {"n": 2, "kind": "plain"},
                "inputs": {"word": "a(1,2) a(1,2)"},
                "outputs": {"word": ""},
                "verdicts": {},
            }
        }
    }


def jsonable(value: Any) -> JsonValue:
    """Report-ready value: models dumped, words and enums rendered as text"""
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def witness_payload(steps: Sequence[WitnessStep]) -> JsonValue:
    return jsonable([WitnessStepSchema.from_step(step) for step in steps])


def verdict_payload(result: EquivVerdict) -> JsonValue:
    return jsonable(VerdictSchema.from_verdict(result))


def profile_payload(profile: DeletionProfile) -> JsonValue:
    entries = [
        DeletionEntrySchema(
            m=entry.m,
            image=str(entry.image),
            in_h=entry.in_h,
            chi_image=None if entry.chi_image is None else str(entry.chi_image),
            reduced=None if entry.reduced is None else str(entry.reduced),
            verdict=entry.verdict.value,
            exact=entry.exact,
            invariant=entry.invariant,
        )
        for entry in profile.entries
    ]
    return jsonable(entries)


def certificate_payload(certificate: Optional[Certificate]) -> JsonValue:
    if certificate is None:
        return None
    return jsonable(CertificateSchema.from_certificate(certificate))


def fingerprint_payload(fingerprint: Fingerprint) -> JsonValue:
    def profiles(pairs) -> JsonValue:
        return {f"{i},{j}": form for (i, j), form in pairs}

    payload: Dict[str, JsonValue] = {
        "generator_parity": {name: bit for name, bit in fingerprint.generator_parity},
        "h_membership": fingerprint.h_membership,
        "pair_profiles": None if fingerprint.pair_profiles is None else profiles(fingerprint.pair_profiles),
        "deletion_profiles": None,
    }
    if fingerprint.deletion_profiles is not None:
        payload["deletion_profiles"] = {str(m): profiles(pairs) for m, pairs in fingerprint.deletion_profiles}
    return payload


def brunnian_payload(report: BrunnianReport) -> JsonValue:
    return {
        "deletions": [
            {"m": d.m, "residual": str(d.residual), "verdict": d.verdict.value, "exact": d.exact}
            for d in report.deletions
        ],
        "candidate": report.candidate,
        "certified_nontrivial": report.certified_nontrivial,
        "certificate": certificate_payload(report.certificate),
    }


def relation_checks_payload(checks: Sequence[RelationCheck]) -> JsonValue:
    return [
        {
            "relation": str(check.rule),
            "lhs_image": str(check.lhs_image),
            "rhs_image": str(check.rhs_image),
            **VerdictSchema.from_verdict(check.verdict).model_dump(mode="json"),
        }
        for check in checks
    ]


def chain_payload(chain: Sequence[Tuple[str, Word]]) -> JsonValue:
    return [{"map": name, "context": str(image.context), "word": str(image)} for name, image in chain]
