import logging
from typing import Dict, List, Optional, Tuple

from ..core.config import Settings
from ..core.errors import BraidGroupError, ContextMismatch
from ..models.rewriting import EquivVerdict, RewriteRule, WitnessStep
from ..models.word import GroupKind, Word
from .fingerprints import first_difference
from .homomorphisms import chi, in_h
from .normalform import normalization_witness
from .rewriting import Code, RuleIndex, invert_step, rule_index, step_for
from .words import validate

logger = logging.getLogger(__name__)

# word -> (previous word, position, rule applied to the previous word)
Parents = Dict[Code, Optional[Tuple[Code, int, RewriteRule]]]


class RewritingOracle:
    """
    Bounded breadth-first equivalence oracle.

    Distinct verdicts come only from fingerprints; search exhaustion under a
    length cap proves nothing and yields Unknown. Dotted words in H with equal
    chi images are joined through their block normal form instead of searched.
    """

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or Settings()
        self.settings = settings
        self.max_states = settings.max_states

    def bounded_equiv(
        self, u: Word, v: Word, max_len: Optional[int] = None, max_states: Optional[int] = None
    ) -> EquivVerdict:
        """
        Decide u = v up to the search bounds.

        Args:
            u, v: words in one context
            max_len: longest intermediate word (default |u| + extra_len, at least |v|)
            max_states: visited-word cap per search stage

        Returns:
            EquivVerdict: Equivalent with a replayable witness, Distinct with the
            separating invariant, or Unknown

        Raises:
            ContextMismatch: u and v live in different contexts
        """
        if u.context != v.context:
            raise ContextMismatch(str(u.context), str(v.context))
        validate(u)
        validate(v)
        longest = max(len(u), len(v))
        if max_len is None:
            max_len = max(self.settings.max_len_for(len(u)), longest)
        if max_len < longest:
            raise BraidGroupError(f"max_len {max_len} is shorter than the input words ({longest})")
        max_states = max_states or self.max_states

        if u.letters == v.letters:
            return EquivVerdict.equivalent()

        invariant = first_difference(u, v)
        if invariant is not None:
            logger.info(f"Separated by {invariant}: '{u}' vs '{v}'")
            return EquivVerdict.distinct(invariant)

        index = rule_index(u.context)
        start, goal = index.encode(u.letters), index.encode(v.letters)
        for successor, position, rule in index.successors(start, longest):
            if successor == goal:
                return EquivVerdict.equivalent([step_for(rule, position)], states=2)

        shortcut = self._through_normal_form(u, v)
        if shortcut is not None:
            logger.info(f"Equivalent through the block normal form ({len(shortcut)} steps)")
            return EquivVerdict.equivalent(shortcut)

        visited = 0
        cap = longest
        while True:
            path, states, truncated = self._search(index, start, goal, cap, max_states)
            visited += states
            logger.debug(f"Stage cap={cap}: {states} states, found={path is not None}")
            if path is not None:
                logger.info(f"Equivalent in {len(path)} steps ({visited} states)")
                return EquivVerdict.equivalent(path, states=visited)
            if truncated:
                logger.warning(f"State cap {max_states} reached at length cap {cap}")
                return EquivVerdict.unknown(f"state cap {max_states} reached at length {cap}", visited)
            if cap >= max_len:
                return EquivVerdict.unknown(f"no path within length {max_len}", visited)
            cap = min(cap + 2, max_len)

    def bounded_trivial(
        self, word: Word, max_len: Optional[int] = None, max_states: Optional[int] = None
    ) -> EquivVerdict:
        return self.bounded_equiv(word, Word(word.context, ()), max_len, max_states)

    @staticmethod
    def _through_normal_form(u: Word, v: Word) -> Optional[List[WitnessStep]]:
        """
        Dotted words in H with the same chi image share a block normal form:
        rewrite u to it, then walk v's normalization backwards.
        """
        if u.context.kind is not GroupKind.DOTTED or not (in_h(u) and in_h(v)):
            return None
        if chi(u).letters != chi(v).letters:
            return None
        back = [invert_step(step) for step in reversed(normalization_witness(v))]
        return normalization_witness(u) + back

    def _search(
        self, index: RuleIndex, start: Code, goal: Code, cap: int, max_states: int
    ) -> Tuple[Optional[List[WitnessStep]], int, bool]:
        """Bidirectional BFS under a length cap: (shortest path or None, states, truncated)"""
        forward: Parents = {start: None}
        backward: Parents = {goal: None}
        forward_frontier, backward_frontier = [start], [goal]

        while forward_frontier and backward_frontier:
            expand_forward = len(forward_frontier) <= len(backward_frontier)
            parents, other = (forward, backward) if expand_forward else (backward, forward)
            frontier = forward_frontier if expand_forward else backward_frontier
            next_frontier: List[Code] = []

            for word in frontier:
                for successor, position, rule in index.successors(word, cap):
                    if successor in parents:
                        continue
                    parents[successor] = (word, position, rule)
                    if successor in other:
                        path = self._witness(successor, forward, backward)
                        return path, len(forward) + len(backward), False
                    next_frontier.append(successor)
                    if len(forward) + len(backward) >= max_states:
                        return None, len(forward) + len(backward), True

            if expand_forward:
                forward_frontier = next_frontier
            else:
                backward_frontier = next_frontier

        return None, len(forward) + len(backward), False

    @staticmethod
    def _witness(meet: Code, forward: Parents, backward: Parents) -> List[WitnessStep]:
        steps: List[WitnessStep] = []
        node = meet
        while forward[node] is not None:
            previous, position, rule = forward[node]
            steps.append(step_for(rule, position))
            node = previous
        steps.reverse()

        node = meet
        while backward[node] is not None:
            previous, position, rule = backward[node]
            # backward parents were reached from `previous`; walk the rule the other way
            steps.append(step_for(rule.reversed(), position))
            node = previous
        return steps
