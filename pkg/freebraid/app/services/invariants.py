"""
Strand-deletion invariants and the Brunnian detection pipeline
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from ..core.config import Settings
from ..core.errors import ContextMismatch
from ..models.invariants import (
    BrunnianReport,
    Certificate,
    DeletionEntry,
    DeletionProfile,
    StrandDeletion,
    Triviality,
)
from ..models.word import GroupKind, Word
from .fingerprints import generator_parity
from .homomorphisms import chi, forget_dots, in_h, psi_m
from .normalform import z2z2_reduce
from .oracle import RewritingOracle
from .words import involutive_reduce, validate

logger = logging.getLogger(__name__)


class InvariantService:
    """Deletion profiles, nontriviality certificates and Brunnian checks for plain braids"""

    def __init__(self, settings: Optional[Settings] = None, oracle: Optional[RewritingOracle] = None):
        settings = settings or Settings()
        self.oracle = oracle or RewritingOracle(settings)
        self.parallel = settings.parallel_profiles

    def _check(self, word: Word) -> None:
        if word.context.kind is not GroupKind.PLAIN or word.context.n < 2:
            raise ContextMismatch("a plain context with at least 2 strands", str(word.context))
        validate(word)

    def _trivial(self, word: Word, max_len: Optional[int], max_states: Optional[int]):
        if max_len is not None:
            max_len = max(max_len, len(word))
        return self.oracle.bounded_trivial(word, max_len, max_states)

    def _entry(self, word: Word, m: int, max_len: Optional[int], max_states: Optional[int]) -> DeletionEntry:
        image = psi_m(word, m)
        if not in_h(image):
            return DeletionEntry(m, image, in_h=False)

        chi_image = chi(image)
        n = chi_image.context.n
        if n == 1:
            return DeletionEntry(m, image, True, chi_image, chi_image, Triviality.TRIVIAL, exact=True)
        if n == 2:
            reduced = z2z2_reduce(chi_image)
            verdict = Triviality.NONTRIVIAL if len(reduced) else Triviality.TRIVIAL
            invariant = "z2z2-normal-form" if len(reduced) else None
            return DeletionEntry(m, image, True, chi_image, reduced, verdict, exact=True, invariant=invariant)

        result = self._trivial(chi_image, max_len, max_states)
        verdict = Triviality.from_verdict(result.verdict)
        return DeletionEntry(
            m,
            image,
            True,
            chi_image,
            involutive_reduce(chi_image),
            verdict,
            exact=verdict is not Triviality.UNKNOWN,
            invariant=result.invariant,
        )

    def deletion_profile(
        self, word: Word, max_len: Optional[int] = None, max_states: Optional[int] = None
    ) -> DeletionProfile:
        """
        psi_m, H membership and the triviality of chi(psi_m(w)) for every strand m.

        Exact on two remaining strands (z2z2 normal form); fingerprints plus
        bounded search otherwise, so some verdicts may stay unknown.
        """
        self._check(word)
        strands = range(1, word.context.n + 1)
        if self.parallel:
            with ThreadPoolExecutor() as pool:
                entries = list(pool.map(lambda m: self._entry(word, m, max_len, max_states), strands))
        else:
            entries = [self._entry(word, m, max_len, max_states) for m in strands]
        logger.info(f"Deletion profile of '{word}': {[(e.m, e.verdict.value) for e in entries]}")
        return DeletionProfile(word, tuple(entries))

    def certify_nontrivial(
        self,
        word: Word,
        max_len: Optional[int] = None,
        max_states: Optional[int] = None,
        profile: Optional[DeletionProfile] = None,
    ) -> Optional[Certificate]:
        """First strand m whose chi(psi_m(w)) is nontrivial, packaged as a replayable certificate"""
        profile = profile or self.deletion_profile(word, max_len, max_states)
        for entry in profile.entries:
            if entry.in_h and entry.verdict is Triviality.NONTRIVIAL:
                return Certificate(
                    m=entry.m,
                    chain=(f"psi:{entry.m}", "chi"),
                    word=word,
                    psi_image=entry.image,
                    chi_image=entry.chi_image,
                    reduced=entry.reduced,
                    separating_invariant=entry.invariant or "fingerprint",
                )
        return None

    def _deletion(self, word: Word, m: int, max_len: Optional[int], max_states: Optional[int]) -> StrandDeletion:
        residual = forget_dots(psi_m(word, m))
        if residual.context.n <= 2:
            # G_1^2 is trivial and G_2^2 is Z/2, so the generator parities decide
            odd = any(bit for _, bit in generator_parity(residual))
            verdict = Triviality.NONTRIVIAL if odd else Triviality.TRIVIAL
            return StrandDeletion(m, residual, verdict, exact=True)
        result = self._trivial(residual, max_len, max_states)
        verdict = Triviality.from_verdict(result.verdict)
        return StrandDeletion(m, residual, verdict, exact=verdict is not Triviality.UNKNOWN)

    def brunnian_check(
        self, word: Word, max_len: Optional[int] = None, max_states: Optional[int] = None
    ) -> BrunnianReport:
        """
        Brunnian candidate: every single-strand deletion (dots forgotten) is trivial.
        The report also carries a nontriviality certificate when one exists.
        """
        self._check(word)
        deletions: List[StrandDeletion] = [
            self._deletion(word, m, max_len, max_states) for m in range(1, word.context.n + 1)
        ]
        profile = self.deletion_profile(word, max_len, max_states)
        certificate = self.certify_nontrivial(word, profile=profile)
        report = BrunnianReport(word, tuple(deletions), certificate, profile)
        logger.info(f"Brunnian check of '{word}': {report.summary()}")
        return report
