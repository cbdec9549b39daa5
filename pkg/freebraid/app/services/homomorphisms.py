"""
Maps between the plain, parity, dotted and quotient groups.

    i (embed_parity)     G_n^2      -> G_{n,p}^2     a(i,j) -> a(i,j;0)
    p (project_parity)   G_{n,p}^2  -> G_n^2         a(i,j;0) -> a(i,j), a(i,j;1) -> 1
    phi                  G_{n,p}^2  -> G_{n,d}^2     a(i,j;1) -> t(i) a(i,j) t(i)
    chi                  H_{n,d}^2  -> G_{n,p}^2     parity = dots on i, j seen so far
    psi                  G_{n+1}^2  -> G_{n,d}^2     a(i,n+1) -> t(i)
    psi_m                G_{n+1}^2  -> G_{n,d}^2     delete strand m, shift indices down
    omega                G_{n,d}^2  -> G_{n+1}^2 / forbidden moves, t(i) -> a(i,n+1)
    forget_dots          G_{n,d}^2  -> G_n^2         erase dots
"""

import logging
from typing import Dict, List

from ..core.errors import ContextMismatch, IndexOutOfRange, NotInH
from ..models.word import GroupContext, GroupKind, Letter, Word
from .words import validate

logger = logging.getLogger(__name__)


def _require(word: Word, kind: GroupKind) -> None:
    if word.context.kind is not kind:
        raise ContextMismatch(f"a {kind.value} context", str(word.context))
    validate(word)


def embed_parity(word: Word) -> Word:
    _require(word, GroupKind.PLAIN)
    target = GroupContext.parity(word.context.n)
    return Word(target, tuple(Letter.parity(x.i, x.j, 0) for x in word))


def project_parity(word: Word) -> Word:
    _require(word, GroupKind.PARITY)
    target = GroupContext.plain(word.context.n)
    return Word(target, tuple(Letter.crossing(x.i, x.j) for x in word if x.eps == 0))


def is_even_word(word: Word) -> bool:
    """True when the word has no odd generator, i.e. it lies in the image of i"""
    _require(word, GroupKind.PARITY)
    return all(x.eps == 0 for x in word)


def phi(word: Word) -> Word:
    _require(word, GroupKind.PARITY)
    letters: List[Letter] = []
    for x in word:
        crossing = Letter.crossing(x.i, x.j)
        if x.eps:
            dot = Letter.dot(x.i)
            letters += [dot, crossing, dot]
        else:
            letters.append(crossing)
    return Word(GroupContext.dotted(word.context.n), tuple(letters))


def dot_counts(word: Word) -> Dict[int, int]:
    """N_i: the number of t(i) letters, for every strand i"""
    _require(word, GroupKind.DOTTED)
    counts = {i: 0 for i in range(1, word.context.n + 1)}
    for x in word:
        if x.is_dot:
            counts[x.i] += 1
    return counts


def in_h(word: Word) -> bool:
    return all(count % 2 == 0 for count in dot_counts(word).values())


def chi(word: Word) -> Word:
    """
    Read off parities in one pass: the parity of a crossing a(i,j) is the
    number of t(i) and t(j) strictly before it, mod 2.

    Raises:
        NotInH: some strand carries an odd number of dots
    """
    counts = dot_counts(word)
    if any(count % 2 for count in counts.values()):
        raise NotInH(counts)
    seen = [0] * (word.context.n + 1)
    letters: List[Letter] = []
    for x in word:
        if x.is_dot:
            seen[x.i] ^= 1
        else:
            letters.append(Letter.parity(x.i, x.j, seen[x.i] ^ seen[x.j]))
    logger.debug(f"chi read {sum(x.eps for x in letters)} odd crossings from '{word}'")
    return Word(GroupContext.parity(word.context.n), tuple(letters))


def _deleting(word: Word) -> int:
    _require(word, GroupKind.PLAIN)
    if word.context.n < 2:
        raise ContextMismatch("a plain context with at least 2 strands", str(word.context))
    return word.context.n


def psi_m(word: Word, m: int) -> Word:
    """
    Delete strand m: a(i,m) becomes a dot on the partner strand, every
    index above m moves down by one.
    """
    total = _deleting(word)
    if not 1 <= m <= total:
        raise IndexOutOfRange(None, m, total)

    def shift(index: int) -> int:
        return index - 1 if index > m else index

    letters: List[Letter] = []
    for x in word:
        if m in x.pair:
            partner = x.j if x.i == m else x.i
            letters.append(Letter.dot(shift(partner)))
        else:
            letters.append(Letter.crossing(shift(x.i), shift(x.j)))
    return Word(GroupContext.dotted(total - 1), tuple(letters))


def psi(word: Word) -> Word:
    """Deletion of the last strand"""
    return psi_m(word, _deleting(word))


def in_deletion_preimage(word: Word, m: int) -> bool:
    """Every strand crosses strand m an even number of times, so psi_m(word) lies in H"""
    return in_h(psi_m(word, m))


def omega(word: Word) -> Word:
    _require(word, GroupKind.DOTTED)
    top = word.context.n + 1
    letters = tuple(Letter.crossing(x.i, top) if x.is_dot else x for x in word)
    return Word(GroupContext.quotient(top), letters)


def psi_quotient(word: Word) -> Word:
    """psi read on the quotient: delete the distinguished strand"""
    _require(word, GroupKind.QUOTIENT)
    return psi(Word(GroupContext.plain(word.context.n), word.letters))


def forget_dots(word: Word) -> Word:
    _require(word, GroupKind.DOTTED)
    return Word(GroupContext.plain(word.context.n), tuple(x for x in word if not x.is_dot))
