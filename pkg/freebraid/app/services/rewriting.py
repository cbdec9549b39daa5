"""
Presentation relations as rewrite rules, one-step neighbors and replay.

Rules are compiled per context into an index keyed by the integer-encoded
left-hand side, so neighbor enumeration only slices and looks up tuples.
"""

import itertools
import logging
import random
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ..core.errors import PatternMismatch
from ..models.rewriting import RewriteRule, WitnessStep
from ..models.word import GroupContext, GroupKind, Letter, Word
from .words import validate

logger = logging.getLogger(__name__)

Code = Tuple[int, ...]

_PREFIX = {
    GroupKind.PLAIN: "plain",
    GroupKind.QUOTIENT: "plain",
    GroupKind.PARITY: "parity",
    GroupKind.DOTTED: "dotted",
}


def _crossing_letters(context: GroupContext, pair: Tuple[int, int]) -> List[Letter]:
    if context.kind is GroupKind.PARITY:
        return [Letter.parity(*pair, 0), Letter.parity(*pair, 1)]
    return [Letter.crossing(*pair)]


def _triangle_relations(context: GroupContext, prefix: str) -> Iterator[RewriteRule]:
    """f m l = l m f for every triple, every choice of middle pair"""
    for i, j, k in itertools.combinations(range(1, context.n + 1), 3):
        pairs = [(i, j), (i, k), (j, k)]
        for middle in pairs:
            first, last = [p for p in pairs if p != middle]
            for f, m, l in itertools.product(
                _crossing_letters(context, first),
                _crossing_letters(context, middle),
                _crossing_letters(context, last),
            ):
                if (f.eps + m.eps + l.eps) % 2:
                    continue
                yield RewriteRule((f, m, l), (l, m, f), f"{prefix}-3")


def _crossing_relations(context: GroupContext) -> Iterator[RewriteRule]:
    prefix = _PREFIX[context.kind]
    pairs = list(context.pairs())

    for pair in pairs:
        for g in _crossing_letters(context, pair):
            yield RewriteRule((g, g), (), f"{prefix}-1")

    for p, q in itertools.combinations(pairs, 2):
        if set(p) & set(q):
            continue
        for x, y in itertools.product(_crossing_letters(context, p), _crossing_letters(context, q)):
            yield RewriteRule((x, y), (y, x), f"{prefix}-2")

    yield from _triangle_relations(context, prefix)


def _dot_relations(context: GroupContext) -> Iterator[RewriteRule]:
    n = context.n
    dots = {i: Letter.dot(i) for i in range(1, n + 1)}

    for t in dots.values():
        yield RewriteRule((t, t), (), "dotted-4")

    for i, j in itertools.combinations(range(1, n + 1), 2):
        yield RewriteRule((dots[i], dots[j]), (dots[j], dots[i]), "dotted-5")

    for i, j in context.pairs():
        a = Letter.crossing(i, j)
        ti, tj = dots[i], dots[j]
        yield RewriteRule((ti, tj, a, tj, ti), (a,), "dotted-6")
        yield RewriteRule((tj, ti, a, ti, tj), (a,), "dotted-6")
        # consequences of (6) together with (5)
        yield RewriteRule((ti, tj, a), (a, tj, ti), "dotted-6-slide", derived=True)
        yield RewriteRule((tj, ti, a), (a, ti, tj), "dotted-6-slide", derived=True)
        yield RewriteRule((ti, a, ti), (tj, a, tj), "dotted-6-mirror", derived=True)

        for k in range(1, n + 1):
            if k not in (i, j):
                yield RewriteRule((a, dots[k]), (dots[k], a), "dotted-7")


def _forbidden_relations(context: GroupContext) -> Iterator[RewriteRule]:
    n = context.n
    for i, j in itertools.combinations(range(1, n), 2):
        x, y = Letter.crossing(i, n), Letter.crossing(j, n)
        yield RewriteRule((x, y), (y, x), "quotient-forbidden")


@lru_cache(maxsize=None)
def defining_relations(context: GroupContext) -> Tuple[RewriteRule, ...]:
    """Forward, non-derived instances: one per relation instance of the presentation"""
    return tuple(rule for rule in _forward_rules(context) if not rule.derived)


def _forward_rules(context: GroupContext) -> List[RewriteRule]:
    rules = list(_crossing_relations(context))
    if context.kind is GroupKind.DOTTED:
        rules += list(_dot_relations(context))
    elif context.kind is GroupKind.QUOTIENT:
        rules += list(_forbidden_relations(context))
    return rules


@lru_cache(maxsize=None)
def rule_set(context: GroupContext) -> Tuple[RewriteRule, ...]:
    """Every rule instance in both directions (deletions and insertions for squares)"""
    forward = _forward_rules(context)
    rules = forward + [rule.reversed() for rule in forward]
    logger.debug(f"Compiled {len(rules)} rules for {context}")
    return tuple(rules)


@lru_cache(maxsize=None)
def rule_lookup(context: GroupContext) -> Dict[Tuple[Tuple[Letter, ...], Tuple[Letter, ...]], RewriteRule]:
    return {(rule.lhs, rule.rhs): rule for rule in rule_set(context)}


class RuleIndex:
    """Integer-coded rule table for fast neighbor enumeration"""

    def __init__(self, context: GroupContext):
        self.context = context
        self.alphabet: Tuple[Letter, ...] = context.generators()
        self.codes: Dict[Letter, int] = {letter: code for code, letter in enumerate(self.alphabet)}
        self.by_lhs: Dict[Code, List[Tuple[Code, RewriteRule]]] = {}
        for rule in rule_set(context):
            self.by_lhs.setdefault(self.encode(rule.lhs), []).append((self.encode(rule.rhs), rule))
        self.lengths = sorted({len(lhs) for lhs in self.by_lhs})

    def encode(self, letters: Iterable[Letter]) -> Code:
        return tuple(self.codes[letter] for letter in letters)

    def decode(self, code: Code) -> Tuple[Letter, ...]:
        return tuple(self.alphabet[c] for c in code)

    def successors(self, word: Code, max_len: int = -1) -> Iterator[Tuple[Code, int, RewriteRule]]:
        """(neighbor, position, rule) for every single rule application; max_len < 0 means no cap"""
        size = len(word)
        for width in self.lengths:
            if width > size:
                break
            for position in range(size - width + 1):
                entries = self.by_lhs.get(word[position:position + width])
                if not entries:
                    continue
                for rhs, rule in entries:
                    if 0 <= max_len < size - width + len(rhs):
                        continue
                    yield word[:position] + rhs + word[position + width:], position, rule


@lru_cache(maxsize=None)
def rule_index(context: GroupContext) -> RuleIndex:
    return RuleIndex(context)


def neighbors(word: Word) -> frozenset:
    """All words one rule application away, including square insertions"""
    validate(word)
    index = rule_index(word.context)
    return frozenset(
        Word(word.context, index.decode(code)) for code, _, _ in index.successors(index.encode(word.letters))
    )


def apply_step(word: Word, step: WitnessStep) -> Word:
    """Apply one witness step, checking that its lhs sits at its position"""
    width = len(step.lhs)
    if step.position > len(word) or word.letters[step.position:step.position + width] != step.lhs:
        raise PatternMismatch(step.tag, f"lhs not found at position {step.position} of '{word}'")
    letters = word.letters[:step.position] + step.rhs + word.letters[step.position + width:]
    return word.with_letters(letters)


def replay(word: Word, witness: Sequence[WitnessStep]) -> Word:
    for step in witness:
        word = apply_step(word, step)
    return word


def make_step(context: GroupContext, position: int, lhs: Sequence[Letter], rhs: Sequence[Letter]) -> WitnessStep:
    """
    Build a witness step for a rule of the context.

    Raises:
        PatternMismatch: lhs -> rhs is not a rule instance of the context
    """
    rule = rule_lookup(context).get((tuple(lhs), tuple(rhs)))
    if rule is None:
        lhs_text = " ".join(map(str, lhs)) or "1"
        rhs_text = " ".join(map(str, rhs)) or "1"
        raise PatternMismatch("rewrite", f"{lhs_text} -> {rhs_text} is not a rule of {context}")
    return step_for(rule, position)


def step_for(rule: RewriteRule, position: int) -> WitnessStep:
    return WitnessStep(position, rule.tag, rule.direction, rule.lhs, rule.rhs)


def random_walk(word: Word, steps: int, seed: int) -> Word:
    """Apply `steps` uniformly chosen rule applications with a seeded generator"""
    validate(word)
    rng = random.Random(seed)
    index = rule_index(word.context)
    code = index.encode(word.letters)
    for _ in range(steps):
        moves = list(index.successors(code))
        if not moves:
            break
        code = rng.choice(moves)[0]
    return Word(word.context, index.decode(code))


def random_word(context: GroupContext, length: int, seed: int) -> Word:
    """Uniformly random generators, deterministic per seed"""
    rng = random.Random(seed)
    alphabet = context.generators()
    if not alphabet:
        return Word(context, ())
    return Word(context, tuple(rng.choice(alphabet) for _ in range(length)))


def invert_step(step: WitnessStep) -> WitnessStep:
    """The step that undoes `step` on its result"""
    direction = "backward" if step.direction == "forward" else "forward"
    return WitnessStep(step.position, step.tag, direction, step.rhs, step.lhs)
