"""
Unit tests for the bounded equivalence oracle
"""
import random

import pytest

from app.core.errors import BraidGroupError, ContextMismatch
from app.models.rewriting import Verdict
from app.models.word import GroupContext, Word
from app.services.fingerprints import first_difference
from app.services.rewriting import random_word, replay, rule_index
from app.services.words import parse

from tests.fixtures.samples import TRIANGLE

SMALL_CONTEXTS = [
    GroupContext.plain(2),
    GroupContext.plain(3),
    GroupContext.parity(2),
    GroupContext.dotted(2),
    GroupContext.quotient(2),
    GroupContext.quotient(3),
]


def reachable(word: Word, max_len: int) -> set:
    """Codes of every word reachable from `word` without exceeding max_len letters"""
    index = rule_index(word.context)
    start = index.encode(word.letters)
    seen = {start}
    frontier = [start]
    while frontier:
        following = []
        for code in frontier:
            for successor, _, _ in index.successors(code, max_len):
                if successor not in seen:
                    seen.add(successor)
                    following.append(successor)
        frontier = following
    return seen


class TestBoundedEquiv:
    """Test cases for RewritingOracle.bounded_equiv"""

    def test_identical_words(self, oracle, contexts):
        """Equal letters need no steps"""
        word = parse("a(1,2) a(2,3)", contexts["plain"])
        result = oracle.bounded_equiv(word, word)
        assert result.is_equivalent
        assert result.witness == ()

    def test_triangle(self, oracle, contexts):
        """Both sides of a triangle relation are one step apart"""
        u, v = (parse(text, contexts["plain"]) for text in TRIANGLE)
        result = oracle.bounded_equiv(u, v)
        assert result.verdict is Verdict.EQUIVALENT
        assert len(result.witness) == 1
        assert result.witness[0].tag == "plain-3"
        assert replay(u, result.witness) == v

    def test_far_commutation(self, oracle):
        """Crossings on disjoint pairs commute"""
        context = GroupContext.plain(4)
        u = parse("a(1,2) a(3,4)", context)
        v = parse("a(3,4) a(1,2)", context)
        result = oracle.bounded_equiv(u, v)
        assert [step.tag for step in result.witness] == ["plain-2"]

    def test_dot_relation(self, oracle):
        """t(1) t(2) a(1,2) t(2) t(1) = a(1,2)"""
        context = GroupContext.dotted(2)
        u = parse("t(1) t(2) a(1,2) t(2) t(1)", context)
        v = parse("a(1,2)", context)
        result = oracle.bounded_equiv(u, v)
        assert [step.tag for step in result.witness] == ["dotted-6"]
        assert replay(u, result.witness) == v

    def test_search_beyond_one_step(self, oracle):
        """Paths through longer words are found by raising the length cap"""
        context = GroupContext.dotted(3)
        u = parse("t(2) t(1) t(3) a(1,3)", context)
        v = parse("a(1,3) t(3) t(1) t(2)", context)
        result = oracle.bounded_equiv(u, v)
        assert result.is_equivalent
        assert replay(u, result.witness) == v

    def test_trivial(self, oracle, contexts):
        """Nested squares are trivial"""
        word = parse("a(1,2) a(2,3) a(2,3) a(1,2)", contexts["plain"])
        result = oracle.bounded_trivial(word)
        assert result.is_equivalent
        assert replay(word, result.witness).letters == ()

    def test_normal_form_shortcut(self, oracle):
        """Dotted words in H with equal chi images meet at their block form"""
        context = GroupContext.dotted(2)
        u = parse("t(1) a(1,2) t(2) a(1,2) t(2) a(1,2) t(1) a(1,2)", context)
        v = parse("t(1) a(1,2) t(1) a(1,2) t(1) a(1,2) t(1) a(1,2)", context)
        result = oracle.bounded_equiv(u, v)
        assert result.is_equivalent
        assert replay(u, result.witness) == v


class TestSeparation:
    """Test cases for Distinct and Unknown verdicts"""

    def test_distinct_by_generator_parity(self, oracle):
        """An odd generator count separates a word from the identity"""
        context = GroupContext.plain(2)
        result = oracle.bounded_trivial(parse("a(1,2)", context))
        assert result.is_distinct
        assert result.invariant == "generator-parity"
        assert result.witness == ()

    def test_distinct_by_deletion_profile(self, oracle, example_braid):
        """The example braid is not the identity"""
        result = oracle.bounded_trivial(example_braid)
        assert result.is_distinct
        assert result.invariant == "deletion-profile"

    def test_unknown_when_search_space_is_exhausted(self, oracle, contexts):
        """Exhausting a length cap proves nothing"""
        context = contexts["parity"]
        u = parse("a(1,2;1) a(1,3;0) a(2,3;0)", context)
        v = parse("a(2,3;0) a(1,3;0) a(1,2;1)", context)
        result = oracle.bounded_equiv(u, v, max_len=3)
        assert result.verdict is Verdict.UNKNOWN
        assert "length 3" in result.reason

    def test_unknown_on_state_cap(self, oracle, contexts):
        """Reaching the state cap yields Unknown, not Distinct"""
        u = parse("a(1,2) a(1,3)", contexts["plain"])
        v = parse("a(1,3) a(1,2)", contexts["plain"])
        result = oracle.bounded_equiv(u, v, max_states=5)
        assert result.verdict is Verdict.UNKNOWN
        assert "state cap" in result.reason

    def test_context_mismatch(self, oracle, contexts):
        """Words from different contexts are not compared"""
        with pytest.raises(ContextMismatch):
            oracle.bounded_equiv(Word(contexts["plain"]), Word(contexts["quotient"]))

    def test_max_len_below_input(self, oracle, contexts):
        """The length cap must admit both inputs"""
        u, v = (parse(text, contexts["plain"]) for text in TRIANGLE)
        with pytest.raises(BraidGroupError):
            oracle.bounded_equiv(u, v, max_len=2)

    def test_separated_words_are_not_connected(self, oracle):
        """No path of words up to 8 letters joins a pair the fingerprints separate"""
        rng = random.Random(8)
        checked = 0
        for _ in range(5000):
            context = rng.choice(SMALL_CONTEXTS)
            u = random_word(context, rng.randint(0, 6), rng.randrange(2**16))
            v = random_word(context, rng.randint(0, 6), rng.randrange(2**16))
            if first_difference(u, v) is None:
                continue
            assert oracle.bounded_equiv(u, v).is_distinct
            index = rule_index(context)
            assert index.encode(v.letters) not in reachable(u, 8), f"{u} ~ {v} in {context}"
            checked += 1
            if checked == 100:
                break
        assert checked == 100
