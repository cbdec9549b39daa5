from dataclasses import dataclass
from typing import Iterator, Tuple

from ..core.errors import BraidGroupError


@dataclass(frozen=True)
class Block:
    """t(i)^eps a(i,j) t(i)^eps"""

    i: int
    j: int
    eps: int = 0

    def __post_init__(self):
        if not self.i < self.j:
            raise BraidGroupError(f"block pair must satisfy i < j, got ({self.i},{self.j})")
        if self.eps not in (0, 1):
            raise BraidGroupError(f"block parity must be 0 or 1, got {self.eps}")

    def as_triple(self) -> Tuple[int, int, int]:
        return (self.i, self.j, self.eps)


@dataclass(frozen=True)
class BlockWord:
    n: int
    blocks: Tuple[Block, ...] = ()

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def triples(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(block.as_triple() for block in self.blocks)
