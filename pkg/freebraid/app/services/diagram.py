"""
Free braid diagrams, Artin moves and the map iota to G_n^2.

Text format:

    braid n=<n>
    <event> <event> ...
"""

import logging
import re
from typing import List, Optional

from sympy.combinatorics import Permutation

from ..core.errors import (
    BraidGroupError,
    EventOutOfRange,
    InvalidColoring,
    NotPure,
    PatternMismatch,
    WordSyntaxError,
)
from ..models.diagram import ArtinMove, BraidDiagram, Coloring, MoveKind
from ..models.word import GroupContext, Letter, Word

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"\s*braid\s+n\s*=\s*(\d+)")


def validate_diagram(diagram: BraidDiagram) -> None:
    if diagram.n < 1:
        raise BraidGroupError(f"strand count must be at least 1, got {diagram.n}")
    for position, event in enumerate(diagram.events):
        if not 1 <= event <= diagram.n - 1:
            raise EventOutOfRange(position, event, diagram.n)


def permutation(diagram: BraidDiagram) -> Permutation:
    """
    End-to-start strand permutation (0-based): maps each final position to
    the starting position of the strand that ends there.
    """
    validate_diagram(diagram)
    occupancy = list(range(diagram.n))
    for event in diagram.events:
        occupancy[event - 1], occupancy[event] = occupancy[event], occupancy[event - 1]
    return Permutation(occupancy)


def is_pure(diagram: BraidDiagram) -> bool:
    return permutation(diagram).is_Identity


def compose_diagrams(top: BraidDiagram, bottom: BraidDiagram) -> BraidDiagram:
    if top.n != bottom.n:
        raise BraidGroupError(f"cannot stack diagrams on {top.n} and {bottom.n} strands")
    return BraidDiagram(top.n, top.events + bottom.events)


def _check_coloring(coloring: Coloring, n: int) -> None:
    if len(coloring.components) != n:
        raise InvalidColoring(f"{len(coloring.components)} components for {n} strands")
    if sorted(coloring.components) != list(range(1, n + 1)):
        raise InvalidColoring(f"{list(coloring.components)} is not a bijection onto 1..{n}")


def iota(diagram: BraidDiagram, coloring: Optional[Coloring] = None) -> Word:
    """
    Word of a colored pure diagram: one a(i,j) per crossing, in height order,
    where i and j are the components meeting there.

    Raises:
        NotPure: the strands do not return to their starting positions
        InvalidColoring: the coloring is not a bijection onto 1..n
    """
    coloring = coloring or Coloring.identity(diagram.n)
    perm = permutation(diagram)
    if not perm.is_Identity:
        raise NotPure([p + 1 for p in perm.array_form])
    _check_coloring(coloring, diagram.n)

    occupancy = list(coloring.components)
    letters: List[Letter] = []
    for event in diagram.events:
        left, right = occupancy[event - 1], occupancy[event]
        letters.append(Letter.crossing(left, right))
        occupancy[event - 1], occupancy[event] = right, left
    return Word(GroupContext.plain(diagram.n), tuple(letters))


def apply_artin_move(diagram: BraidDiagram, move: ArtinMove) -> BraidDiagram:
    """
    Raises:
        PatternMismatch: the move's pattern does not occur at the given index
    """
    validate_diagram(diagram)
    events = list(diagram.events)
    k = move.index
    name = str(move)

    if move.kind is MoveKind.SQUARE_INSERT:
        if not 0 <= k <= len(events):
            raise PatternMismatch(name, f"index outside 0..{len(events)}")
        if not 1 <= move.position <= diagram.n - 1:
            raise PatternMismatch(name, f"position outside 1..{diagram.n - 1}")
        events[k:k] = [move.position, move.position]
        return BraidDiagram(diagram.n, tuple(events))

    width = 3 if move.kind is MoveKind.TRIANGLE else 2
    if not 0 <= k <= len(events) - width:
        raise PatternMismatch(name, f"needs {width} events starting at index {k}")
    window = events[k:k + width]

    if move.kind is MoveKind.SQUARE_DELETE:
        if window[0] != window[1]:
            raise PatternMismatch(name, f"events {window} are not a double crossing")
        del events[k:k + 2]
    elif move.kind is MoveKind.FAR_COMMUTE:
        if abs(window[0] - window[1]) < 2:
            raise PatternMismatch(name, f"events {window} are not far apart")
        events[k], events[k + 1] = window[1], window[0]
    else:
        p, q, r = window
        if p != r or abs(p - q) != 1:
            raise PatternMismatch(name, f"events {window} are not a triangle")
        events[k:k + 3] = [q, p, q]
    return BraidDiagram(diagram.n, tuple(events))


def artin_moves(diagram: BraidDiagram) -> List[ArtinMove]:
    """Every move applicable to the diagram, insertions included"""
    validate_diagram(diagram)
    events = diagram.events
    moves: List[ArtinMove] = []
    for k in range(len(events) - 1):
        a, b = events[k], events[k + 1]
        if a == b:
            moves.append(ArtinMove(MoveKind.SQUARE_DELETE, k))
        elif abs(a - b) >= 2:
            moves.append(ArtinMove(MoveKind.FAR_COMMUTE, k))
        if k + 2 < len(events) and events[k + 2] == a and abs(a - b) == 1:
            moves.append(ArtinMove(MoveKind.TRIANGLE, k))
    for k in range(len(events) + 1):
        for position in range(1, diagram.n):
            moves.append(ArtinMove(MoveKind.SQUARE_INSERT, k, position))
    return moves


def parse_diagram(text: str) -> BraidDiagram:
    """
    Raises:
        WordSyntaxError: missing header or a non-integer event
        EventOutOfRange: an event outside 1..n-1
    """
    match = _HEADER.match(text)
    if match is None:
        raise WordSyntaxError(0, "header 'braid n=<n>'")
    n = int(match.group(1))
    events: List[int] = []
    for token in re.finditer(r"\S+", text[match.end():]):
        if not token.group().isdigit():
            raise WordSyntaxError(match.end() + token.start(), "event position (integer)")
        events.append(int(token.group()))
    diagram = BraidDiagram(n, tuple(events))
    validate_diagram(diagram)
    logger.debug(f"Parsed diagram on {n} strands with {len(events)} events")
    return diagram


def render_diagram(diagram: BraidDiagram) -> str:
    validate_diagram(diagram)
    header = f"braid n={diagram.n}"
    if not diagram.events:
        return header
    return header + "\n" + " ".join(str(event) for event in diagram.events)
