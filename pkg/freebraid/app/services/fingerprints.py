"""
Fingerprints: computable functions constant on group classes.

Each component is a homomorphism into a group with solvable word problem:
generator counts mod 2 (every relation preserves them), dot parities, and
pair projections into the two-strand parity group, composed with chi and the
strand deletions where those are defined.
"""

from typing import Optional, Tuple

from ..models.invariants import Fingerprint, PairProfiles
from ..models.word import GroupKind, Word
from .homomorphisms import chi, in_h, psi_m, psi_quotient
from .normalform import pair_projection, z2z2_reduce
from .words import validate


def generator_parity(word: Word) -> Tuple[Tuple[str, int], ...]:
    counts = {str(g): 0 for g in word.context.generators()}
    for letter in word:
        counts[str(letter)] ^= 1
    return tuple(counts.items())


def pair_profiles(word: Word) -> PairProfiles:
    """Two-strand normal form of every pair projection of a parity word"""
    return tuple(
        (pair, str(z2z2_reduce(pair_projection(word, *pair)))) for pair in word.context.pairs()
    )


def _deletion_profile(word: Word, m: int) -> Optional[PairProfiles]:
    image = psi_m(word, m)
    if not in_h(image):
        return None
    return pair_profiles(chi(image))


def fingerprint(word: Word) -> Fingerprint:
    validate(word)
    kind = word.context.kind
    parity_bits = generator_parity(word)

    if kind is GroupKind.PARITY:
        return Fingerprint(parity_bits, pair_profiles=pair_profiles(word))

    if kind is GroupKind.DOTTED:
        member = in_h(word)
        return Fingerprint(
            parity_bits,
            h_membership=int(member),
            pair_profiles=pair_profiles(chi(word)) if member else None,
        )

    n = word.context.n
    if n < 2:
        return Fingerprint(parity_bits)

    if kind is GroupKind.QUOTIENT:
        image = psi_quotient(word)
        profiles = ((n, pair_profiles(chi(image))),) if in_h(image) else ()
        return Fingerprint(parity_bits, deletion_profiles=profiles)

    profiles = []
    for m in range(1, n + 1):
        profile = _deletion_profile(word, m)
        if profile is not None:
            profiles.append((m, profile))
    return Fingerprint(parity_bits, deletion_profiles=tuple(profiles))


def first_difference(u: Word, v: Word) -> Optional[str]:
    """Name of a fingerprint component separating u from v, if any"""
    return fingerprint(u).difference(fingerprint(v))
