"""
Rewrite rules, witness steps and equivalence verdicts
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .word import Letter, Word


@dataclass(frozen=True)
class RewriteRule:
    """
    One directed instance of a presentation relation.

    `forward` is True when lhs -> rhs reads the relation as it is written
    (for squares: deletion). `derived` marks consequences kept for shorter
    witnesses, which are not defining relations.
    """

    lhs: Tuple[Letter, ...]
    rhs: Tuple[Letter, ...]
    tag: str
    forward: bool = True
    derived: bool = False

    @property
    def direction(self) -> str:
        return "forward" if self.forward else "backward"

    def reversed(self) -> "RewriteRule":
        return RewriteRule(self.rhs, self.lhs, self.tag, not self.forward, self.derived)

    def __str__(self) -> str:
        lhs = " ".join(map(str, self.lhs)) or "1"
        rhs = " ".join(map(str, self.rhs)) or "1"
        return f"[{self.tag}] {lhs} -> {rhs}"


@dataclass(frozen=True)
class WitnessStep:
    """Replace `lhs` at `position` by `rhs`"""

    position: int
    tag: str
    direction: str
    lhs: Tuple[Letter, ...]
    rhs: Tuple[Letter, ...]


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivVerdict:
    verdict: Verdict
    witness: Tuple[WitnessStep, ...] = ()
    invariant: Optional[str] = None  # separating fingerprint component for DISTINCT
    reason: Optional[str] = None  # why the search stopped for UNKNOWN
    states: int = 0

    @classmethod
    def equivalent(cls, witness=(), states: int = 0) -> "EquivVerdict":
        return cls(Verdict.EQUIVALENT, tuple(witness), states=states)

    @classmethod
    def distinct(cls, invariant: str) -> "EquivVerdict":
        return cls(Verdict.DISTINCT, invariant=invariant)

    @classmethod
    def unknown(cls, reason: str, states: int = 0) -> "EquivVerdict":
        return cls(Verdict.UNKNOWN, reason=reason, states=states)

    @property
    def is_equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT

    @property
    def is_distinct(self) -> bool:
        return self.verdict is Verdict.DISTINCT


@dataclass(frozen=True)
class RelationCheck:
    """Images of a defining relation under a map, with the oracle's verdict on them"""

    rule: RewriteRule
    lhs_image: Word
    rhs_image: Word
    verdict: EquivVerdict
