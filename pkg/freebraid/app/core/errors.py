"""
Error hierarchy for word, map and diagram operations
"""

from typing import Any, Dict, Optional


class BraidGroupError(ValueError):
    """Base class for every domain error raised by the toolkit"""

    def details(self) -> Dict[str, Any]:
        """Structured attributes for error reports"""
        return {key: value for key, value in vars(self).items() if not key.startswith("_")}


class IndexOutOfRange(BraidGroupError):
    def __init__(self, position: Optional[int], index: int, n: int):
        self.position = position
        self.index = index
        self.n = n
        where = f"letter {position}" if position is not None else "argument"
        super().__init__(f"{where}: strand index {index} outside 1..{n}")


class LetterKindMismatch(BraidGroupError):
    def __init__(self, position: int, letter: str, kind: str):
        self.position = position
        self.letter = letter
        self.kind = kind
        super().__init__(f"letter {position}: {letter} is not a generator of a {kind} context")


class WordSyntaxError(BraidGroupError):
    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at column {position}: expected {expected}")


class ContextMismatch(BraidGroupError):
    def __init__(self, expected: str, actual: str):
        self.expected = expected
        self.actual = actual
        super().__init__(f"expected a word in {expected}, got {actual}")


class NotInH(BraidGroupError):
    def __init__(self, counts: Dict[int, int]):
        self.counts = dict(counts)
        odd = sorted(strand for strand, count in self.counts.items() if count % 2)
        super().__init__(f"word is not in H: odd dot count on strands {odd}")


class NotPure(BraidGroupError):
    def __init__(self, permutation: list):
        self.permutation = list(permutation)
        super().__init__(f"diagram is not pure: strand permutation {self.permutation}")


class InvalidColoring(BraidGroupError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"invalid coloring: {reason}")


class EventOutOfRange(BraidGroupError):
    def __init__(self, position: int, event: int, n: int):
        self.position = position
        self.event = event
        self.n = n
        super().__init__(f"event {position}: crossing position {event} outside 1..{n - 1}")


class PatternMismatch(BraidGroupError):
    def __init__(self, move: str, reason: str):
        self.move = move
        self.reason = reason
        super().__init__(f"{move}: {reason}")


class UnknownMap(BraidGroupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown map '{name}'")
