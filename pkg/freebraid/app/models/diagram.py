from dataclasses import dataclass
from enum import Enum
from typing import Tuple


@dataclass(frozen=True)
class BraidDiagram:
    """
    Position-encoded free braid diagram: event p means the strands currently
    in positions p and p+1 cross. Events are read top to bottom.
    """

    n: int
    events: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.events, tuple):
            object.__setattr__(self, "events", tuple(self.events))


@dataclass(frozen=True)
class Coloring:
    """components[q - 1] is the component number of the strand starting at position q"""

    components: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Coloring":
        return cls(tuple(range(1, n + 1)))


class MoveKind(str, Enum):
    SQUARE_INSERT = "square-insert"
    SQUARE_DELETE = "square-delete"
    FAR_COMMUTE = "far-commute"
    TRIANGLE = "triangle"


@dataclass(frozen=True)
class ArtinMove:
    """A move applied at event index `index`; `position` is only used by square insertion"""

    kind: MoveKind
    index: int
    position: int = 0

    def __str__(self) -> str:
        if self.kind is MoveKind.SQUARE_INSERT:
            return f"{self.kind.value}@{self.index}:{self.position}"
        return f"{self.kind.value}@{self.index}"
