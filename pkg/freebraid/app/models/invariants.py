"""
Fingerprints, strand-deletion profiles, certificates and Brunnian reports
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from .rewriting import Verdict
from .word import Word

PairProfiles = Tuple[Tuple[Tuple[int, int], str], ...]


@dataclass(frozen=True)
class Fingerprint:
    """
    Class invariants of a word. Pair profiles hold the two-strand parity
    normal form (rendered) of each pair projection.
    """

    generator_parity: Tuple[Tuple[str, int], ...]
    h_membership: Optional[int] = None
    pair_profiles: Optional[PairProfiles] = None
    deletion_profiles: Optional[Tuple[Tuple[int, PairProfiles], ...]] = None

    # component name -> attribute, in the order differences are reported
    COMPONENTS = (
        ("generator-parity", "generator_parity"),
        ("h-membership", "h_membership"),
        ("pair-profile", "pair_profiles"),
        ("deletion-profile", "deletion_profiles"),
    )

    def difference(self, other: "Fingerprint") -> Optional[str]:
        """Name of the first component whose values differ, None if all agree"""
        for name, attribute in self.COMPONENTS:
            if getattr(self, attribute) != getattr(other, attribute):
                return name
        return None


class Triviality(str, Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    UNKNOWN = "unknown"

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "Triviality":
        return {
            Verdict.EQUIVALENT: cls.TRIVIAL,
            Verdict.DISTINCT: cls.NONTRIVIAL,
            Verdict.UNKNOWN: cls.UNKNOWN,
        }[verdict]


@dataclass(frozen=True)
class DeletionEntry:
    m: int
    image: Word  # psi_m(w)
    in_h: bool
    chi_image: Optional[Word] = None
    reduced: Optional[Word] = None  # z2z2 normal form on two strands, free reduction above
    verdict: Triviality = Triviality.UNKNOWN
    exact: bool = False
    invariant: Optional[str] = None  # what separated the chi image from the identity


@dataclass(frozen=True)
class DeletionProfile:
    word: Word
    entries: Tuple[DeletionEntry, ...] = ()

    def entry(self, m: int) -> DeletionEntry:
        return {e.m: e for e in self.entries}[m]


@dataclass(frozen=True)
class Certificate:
    """psi_m then chi, with a nontrivial chi image: the braid is not the identity"""

    m: int
    chain: Tuple[str, ...]
    word: Word
    psi_image: Word
    chi_image: Word
    reduced: Word
    separating_invariant: str


@dataclass(frozen=True)
class StrandDeletion:
    m: int
    residual: Word  # forget_dots(psi_m(w))
    verdict: Triviality
    exact: bool


@dataclass(frozen=True)
class BrunnianReport:
    word: Word
    deletions: Tuple[StrandDeletion, ...]
    certificate: Optional[Certificate] = None
    profile: Optional[DeletionProfile] = field(default=None, compare=False)

    @property
    def candidate(self) -> Optional[bool]:
        """True if every deletion is trivial, False if one is nontrivial, None if undecided"""
        verdicts = {d.verdict for d in self.deletions}
        if Triviality.NONTRIVIAL in verdicts:
            return False
        if Triviality.UNKNOWN in verdicts:
            return None
        return True

    @property
    def certified_nontrivial(self) -> bool:
        return self.certificate is not None

    def summary(self) -> Dict[str, object]:
        return {
            "candidate": self.candidate,
            "certified_nontrivial": self.certified_nontrivial,
            "certificate_m": self.certificate.m if self.certificate else None,
        }
