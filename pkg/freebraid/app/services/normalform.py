"""
Normal forms: the block form of words in H_{n,d}^2 and the exact normal form
of the two-strand parity group (free product of two involutions).
"""

import logging
from typing import List, Sequence

from ..core.errors import BraidGroupError, ContextMismatch, IndexOutOfRange
from ..models.blocks import Block, BlockWord
from ..models.rewriting import WitnessStep
from ..models.word import GroupContext, GroupKind, Letter, Word
from .homomorphisms import chi
from .rewriting import make_step
from .words import validate

logger = logging.getLogger(__name__)


def normalize_h(word: Word) -> BlockWord:
    """
    Block form t(i)^e a(i,j) t(i)^e ... of a word in H; the parities are
    those read by chi, so flatten(normalize_h(w)) == phi(chi(w)).

    Raises:
        NotInH: some strand carries an odd number of dots
    """
    image = chi(word)
    return BlockWord(word.context.n, tuple(Block(x.i, x.j, x.eps) for x in image))


def flatten(blocks: BlockWord) -> Word:
    letters: List[Letter] = []
    for block in blocks:
        crossing = Letter.crossing(block.i, block.j)
        if block.eps:
            dot = Letter.dot(block.i)
            letters += [dot, crossing, dot]
        else:
            letters.append(crossing)
    return Word(GroupContext.dotted(blocks.n), tuple(letters))


class _Rewriter:
    """Mutable word that records every rule application as a witness step"""

    def __init__(self, word: Word):
        self.context = word.context
        self.letters: List[Letter] = list(word.letters)
        self.steps: List[WitnessStep] = []

    def rewrite(self, position: int, width: int, rhs: Sequence[Letter]) -> None:
        lhs = self.letters[position:position + width]
        self.steps.append(make_step(self.context, position, lhs, rhs))
        self.letters[position:position + width] = list(rhs)

    def swap(self, position: int) -> None:
        x, y = self.letters[position], self.letters[position + 1]
        self.rewrite(position, 2, (y, x))

    def insert_square(self, position: int, letter: Letter) -> None:
        self.rewrite(position, 0, (letter, letter))


def normalization_witness(word: Word) -> List[WitnessStep]:
    """
    Rewrite sequence from `word` to flatten(normalize_h(word)).

    Dots are swept left to right as a carry sitting right after the finished
    blocks; each carried dot is absorbed by the next crossing on its strand.
    Every step is a rule instance of the dotted presentation.

    Raises:
        NotInH: some strand carries an odd number of dots
    """
    normalize_h(word)  # membership check
    w = _Rewriter(word)
    done = 0
    carry: List[int] = []

    while done + len(carry) < len(w.letters):
        position = done + len(carry)
        x = w.letters[position]

        if x.is_dot:
            if x.i not in carry:
                carry.append(x.i)
                continue
            slot = carry.index(x.i)
            for q in range(position - 1, done + slot, -1):
                w.swap(q)
            w.rewrite(done + slot, 2, ())
            carry.pop(slot)
            continue

        pair = (x.i, x.j)
        moved: List[int] = []
        for index in reversed(range(len(carry))):
            strand = carry[index]
            if strand in pair:
                continue
            q = done + index
            for _ in range(sum(1 for s in carry[index + 1:] if s in pair)):
                w.swap(q)
                q += 1
            w.swap(q)  # past the crossing
            carry.pop(index)
            moved.insert(0, strand)

        crossing_at = done + len(carry)
        inside = list(carry)
        if not inside:
            done = crossing_at + 1
            carry = moved
        elif len(inside) == 1:
            strand = inside[0]
            w.insert_square(crossing_at + 1, Letter.dot(strand))
            if strand == x.j:
                w.rewrite(done, 3, (Letter.dot(x.i), x, Letter.dot(x.i)))
            done = crossing_at + 2
            carry = [strand] + moved
        else:
            if inside[0] == x.j:
                w.swap(done)
            w.rewrite(done, 3, (x, Letter.dot(x.j), Letter.dot(x.i)))
            done = done + 1
            carry = [x.j, x.i] + moved

    if carry:
        raise BraidGroupError(f"dots left over after normalization on strands {carry}")
    logger.debug(f"Normalization witness for '{word}': {len(w.steps)} steps")
    return w.steps


def z2z2_reduce(word: Word) -> Word:
    """
    Alternating normal form in G_{2,p}^2; empty exactly when the word is the identity.

    Raises:
        ContextMismatch: not a two-strand parity word
    """
    if word.context != GroupContext.parity(2):
        raise ContextMismatch("(2, parity)", str(word.context))
    validate(word)
    stack: List[Letter] = []
    for letter in word:
        if stack and stack[-1].eps == letter.eps:
            stack.pop()
        else:
            stack.append(letter)
    return word.with_letters(stack)


def pair_projection(word: Word, i: int, j: int) -> Word:
    """
    Keep the letters on the pair {i, j}, read in the two-strand parity group.

    Raises:
        IndexOutOfRange: i or j outside 1..n
    """
    if word.context.kind is not GroupKind.PARITY:
        raise ContextMismatch("a parity context", str(word.context))
    validate(word)
    n = word.context.n
    for index in (i, j):
        if not 1 <= index <= n:
            raise IndexOutOfRange(None, index, n)
    if i == j:
        raise BraidGroupError(f"pair projection needs two distinct strands, got ({i},{j})")
    pair = (min(i, j), max(i, j))
    letters = tuple(Letter.parity(1, 2, x.eps) for x in word if x.pair == pair)
    return Word(GroupContext.parity(2), letters)

