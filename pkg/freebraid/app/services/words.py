"""
Word validation, involutive reduction and the text grammar.

Grammar (whitespace separated tokens, empty text is the identity):

    a(i,j)      crossing, plain / dotted / quotient contexts
    a(i,j;e)    parity crossing, e in {0,1}
    t(i)        dot, dotted contexts
"""

import re
from typing import List

from ..core.errors import (
    ContextMismatch,
    IndexOutOfRange,
    LetterKindMismatch,
    WordSyntaxError,
)
from ..models.word import GroupContext, GroupKind, Letter, Word


_TOKEN = re.compile(
    r"a\(\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*(?:;\s*(?P<eps>\d+)\s*)?\)"
    r"|t\(\s*(?P<dot>\d+)\s*\)"
)

_EXPECTED = {
    GroupKind.PLAIN: "a(i,j)",
    GroupKind.QUOTIENT: "a(i,j)",
    GroupKind.PARITY: "a(i,j;e)",
    GroupKind.DOTTED: "a(i,j) or t(i)",
}


def validate(word: Word) -> None:
    """
    Check every letter against the context's generators and strand bounds.

    Raises:
        LetterKindMismatch: a letter that is not a generator of the context kind
        IndexOutOfRange: a strand index outside 1..n
    """
    context = word.context
    for position, letter in enumerate(word.letters):
        if not context.allows(letter):
            raise LetterKindMismatch(position, str(letter), context.kind.value)
        for strand in letter.strands:
            if not 1 <= strand <= context.n:
                raise IndexOutOfRange(position, strand, context.n)


def involutive_reduce(word: Word) -> Word:
    """Delete adjacent equal letters until no such pair remains"""
    validate(word)
    stack: List[Letter] = []
    for letter in word.letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return word.with_letters(stack)


def inverse(word: Word) -> Word:
    """Every generator is an involution, so the inverse is the reversal"""
    validate(word)
    return word.with_letters(reversed(word.letters))


def concat(u: Word, v: Word) -> Word:
    if u.context != v.context:
        raise ContextMismatch(str(u.context), str(v.context))
    validate(u)
    validate(v)
    return u + v


def parse(text: str, context: GroupContext) -> Word:
    """
    Parse a word in the given context.

    Raises:
        WordSyntaxError: malformed token (column and expected form are reported)
        LetterKindMismatch / IndexOutOfRange: well-formed but illegal letters
    """
    letters: List[Letter] = []
    position = 0
    length = len(text)
    while True:
        while position < length and text[position].isspace():
            position += 1
        if position >= length:
            break
        match = _TOKEN.match(text, position)
        if match is None:
            raise WordSyntaxError(position, _EXPECTED[context.kind])
        end = match.end()
        if end < length and not text[end].isspace():
            raise WordSyntaxError(end, "whitespace between letters")
        letters.append(_letter_from_match(match, context))
        position = end

    word = Word(context, tuple(letters))
    validate(word)
    return word


def _letter_from_match(match: "re.Match[str]", context: GroupContext) -> Letter:
    if match.group("dot") is not None:
        return Letter.dot(int(match.group("dot")))
    i, j = int(match.group("i")), int(match.group("j"))
    if i == j:
        raise WordSyntaxError(match.start("j"), "two distinct strand indices")
    eps = match.group("eps")
    if eps is None:
        return Letter.crossing(i, j)
    if eps not in ("0", "1"):
        raise WordSyntaxError(match.start("eps"), "parity bit 0 or 1")
    return Letter.parity(i, j, int(eps))


def render(word: Word) -> str:
    validate(word)
    return str(word)

