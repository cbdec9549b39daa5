"""
Letters, group contexts and words for G_n^2 and its enhancements
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence, Tuple

from ..core.errors import BraidGroupError, ContextMismatch


class GroupKind(str, Enum):
    """Which presentation a word is read in"""

    PLAIN = "plain"
    PARITY = "parity"
    DOTTED = "dotted"
    QUOTIENT = "quotient-forbidden"


class LetterKind(str, Enum):
    CROSSING = "crossing"
    PARITY_CROSSING = "parity-crossing"
    DOT = "dot"


# letter kinds legal in each group kind
LEGAL_LETTERS = {
    GroupKind.PLAIN: {LetterKind.CROSSING},
    GroupKind.QUOTIENT: {LetterKind.CROSSING},
    GroupKind.DOTTED: {LetterKind.CROSSING, LetterKind.DOT},
    GroupKind.PARITY: {LetterKind.PARITY_CROSSING},
}


@dataclass(frozen=True, order=True)
class Letter:
    """
    One generator: a crossing a(i,j), a parity crossing a(i,j;eps) or a dot t(i).

    Crossing pairs are stored with i < j; a(j,i) is normalized on construction.
    Dots keep j = 0 and eps = 0.
    """

    kind: LetterKind
    i: int
    j: int = 0
    eps: int = 0

    def __post_init__(self):
        if self.kind is LetterKind.DOT:
            if self.j or self.eps:
                raise BraidGroupError("a dot carries a single strand index")
            return
        if self.i == self.j:
            raise BraidGroupError(f"crossing needs two distinct strands, got ({self.i},{self.j})")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)
        if self.kind is LetterKind.CROSSING and self.eps:
            raise BraidGroupError("plain crossings carry no parity bit")
        if self.eps not in (0, 1):
            raise BraidGroupError(f"parity bit must be 0 or 1, got {self.eps}")

    @classmethod
    def crossing(cls, i: int, j: int) -> "Letter":
        return cls(LetterKind.CROSSING, i, j)

    @classmethod
    def parity(cls, i: int, j: int, eps: int) -> "Letter":
        return cls(LetterKind.PARITY_CROSSING, i, j, eps)

    @classmethod
    def dot(cls, i: int) -> "Letter":
        return cls(LetterKind.DOT, i)

    @property
    def is_dot(self) -> bool:
        return self.kind is LetterKind.DOT

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.i, self.j)

    @property
    def strands(self) -> Tuple[int, ...]:
        return (self.i,) if self.is_dot else (self.i, self.j)

    def __str__(self) -> str:
        if self.kind is LetterKind.DOT:
            return f"t({self.i})"
        if self.kind is LetterKind.PARITY_CROSSING:
            return f"a({self.i},{self.j};{self.eps})"
        return f"a({self.i},{self.j})"


@dataclass(frozen=True)
class GroupContext:
    """
    Strand count plus presentation kind.

    A quotient-forbidden context on n strands is G_n^2 modulo commutation of
    crossings that share the distinguished strand n.
    """

    n: int
    kind: GroupKind = GroupKind.PLAIN

    def __post_init__(self):
        if self.n < 1:
            raise BraidGroupError(f"strand count must be at least 1, got {self.n}")
        object.__setattr__(self, "kind", GroupKind(self.kind))

    @classmethod
    def plain(cls, n: int) -> "GroupContext":
        return cls(n, GroupKind.PLAIN)

    @classmethod
    def parity(cls, n: int) -> "GroupContext":
        return cls(n, GroupKind.PARITY)

    @classmethod
    def dotted(cls, n: int) -> "GroupContext":
        return cls(n, GroupKind.DOTTED)

    @classmethod
    def quotient(cls, n: int) -> "GroupContext":
        return cls(n, GroupKind.QUOTIENT)

    @property
    def distinguished(self) -> Optional[int]:
        return self.n if self.kind is GroupKind.QUOTIENT else None

    def allows(self, letter: Letter) -> bool:
        return letter.kind in LEGAL_LETTERS[self.kind]

    def pairs(self) -> Iterator[Tuple[int, int]]:
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                yield (i, j)

    def generators(self) -> Tuple[Letter, ...]:
        """Every generator letter of the presentation, in a fixed order"""
        if self.kind is GroupKind.PARITY:
            letters = [Letter.parity(i, j, eps) for i, j in self.pairs() for eps in (0, 1)]
        else:
            letters = [Letter.crossing(i, j) for i, j in self.pairs()]
        if self.kind is GroupKind.DOTTED:
            letters += [Letter.dot(i) for i in range(1, self.n + 1)]
        return tuple(letters)

    def __str__(self) -> str:
        return f"({self.n}, {self.kind.value})"


@dataclass(frozen=True)
class Word:
    """A finite product of generators; the empty word is the identity"""

    context: GroupContext
    letters: Tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def of(cls, context: GroupContext, letters: Sequence[Letter] = ()) -> "Word":
        return cls(context, tuple(letters))

    def with_letters(self, letters: Sequence[Letter]) -> "Word":
        return Word(self.context, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if other.context != self.context:
            raise ContextMismatch(str(self.context), str(other.context))
        return Word(self.context, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)
