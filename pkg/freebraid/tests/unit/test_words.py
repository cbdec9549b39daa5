"""
Unit tests for letters, contexts, the word grammar and involutive reduction
"""
import pytest

from app.core.errors import (
    BraidGroupError,
    ContextMismatch,
    IndexOutOfRange,
    LetterKindMismatch,
    WordSyntaxError,
)
from app.models.word import GroupContext, GroupKind, Letter, Word
from app.services.rewriting import random_word
from app.services.words import concat, involutive_reduce, inverse, parse, render, validate


class TestLetters:
    """Test cases for Letter and GroupContext"""

    def test_crossing_pair_is_normalized(self):
        """a(j,i) is stored as a(i,j)"""
        letter = Letter.crossing(3, 1)
        assert letter.pair == (1, 3)
        assert str(letter) == "a(1,3)"

    def test_rendering_of_each_kind(self):
        """Each letter kind renders in the text grammar"""
        assert str(Letter.parity(1, 2, 1)) == "a(1,2;1)"
        assert str(Letter.dot(2)) == "t(2)"

    def test_invalid_letters(self):
        """Repeated strands and parity bits outside {0,1} are rejected"""
        with pytest.raises(BraidGroupError):
            Letter.crossing(2, 2)
        with pytest.raises(BraidGroupError):
            Letter.parity(1, 2, 2)

    def test_generator_counts(self, contexts):
        """Generator alphabets per context kind"""
        assert len(contexts["plain"].generators()) == 3
        assert len(contexts["parity"].generators()) == 6
        assert len(contexts["dotted"].generators()) == 6
        assert len(contexts["quotient"].generators()) == 3

    def test_context_rendering(self):
        """Contexts render as (n, kind)"""
        assert str(GroupContext.quotient(3)) == "(3, quotient-forbidden)"
        assert GroupContext.quotient(3).distinguished == 3
        assert GroupContext.plain(3).distinguished is None

    def test_context_needs_a_strand(self):
        """Strand counts start at 1"""
        with pytest.raises(BraidGroupError):
            GroupContext(0, GroupKind.PLAIN)


class TestParse:
    """Test cases for the word grammar"""

    def test_parse_and_render(self, contexts):
        """Parsed words render back to the same text"""
        text = "a(1,2) a(2,3) a(1,3)"
        word = parse(text, contexts["plain"])
        assert len(word) == 3
        assert render(word) == text

    def test_empty_text_is_identity(self, contexts):
        """Empty input is the empty word"""
        assert parse("", contexts["plain"]).letters == ()
        assert parse("   ", contexts["dotted"]).letters == ()

    def test_spaces_inside_letters(self, contexts):
        """Whitespace is allowed inside the parentheses"""
        word = parse("a( 2 , 1 ) t( 3 )", contexts["dotted"])
        assert str(word) == "a(1,2) t(3)"

    def test_parity_letters(self, contexts):
        """Parity bits are parsed"""
        word = parse("a(1,2;1) a(2,3;0)", contexts["parity"])
        assert [letter.eps for letter in word] == [1, 0]

    def test_missing_whitespace(self, contexts):
        """Letters must be whitespace separated"""
        with pytest.raises(WordSyntaxError) as error:
            parse("a(1,2)a(2,3)", contexts["plain"])
        assert error.value.position == 6

    def test_unknown_token(self, contexts):
        """Unknown tokens report column and expected form"""
        with pytest.raises(WordSyntaxError) as error:
            parse("a(1,2) b(1,2)", contexts["plain"])
        assert error.value.position == 7
        assert error.value.expected == "a(i,j)"

    def test_bad_parity_bit(self, contexts):
        """Parity bits other than 0 and 1 are syntax errors"""
        with pytest.raises(WordSyntaxError):
            parse("a(1,2;2)", contexts["parity"])

    def test_repeated_strand(self, contexts):
        """a(i,i) is a syntax error"""
        with pytest.raises(WordSyntaxError):
            parse("a(1,1)", contexts["plain"])

    def test_letter_kind_mismatch(self, contexts):
        """Letters must belong to the context's alphabet"""
        with pytest.raises(LetterKindMismatch) as error:
            parse("a(1,2) t(1)", contexts["plain"])
        assert error.value.position == 1
        with pytest.raises(LetterKindMismatch):
            parse("a(1,2)", contexts["parity"])
        with pytest.raises(LetterKindMismatch):
            parse("a(1,2;0)", contexts["dotted"])

    def test_index_out_of_range(self, contexts):
        """Strand indices must lie in 1..n"""
        with pytest.raises(IndexOutOfRange) as error:
            parse("a(1,4)", contexts["plain"])
        assert error.value.index == 4
        assert error.value.n == 3

    def test_errors_are_value_errors(self, contexts):
        """Callers catching ValueError see every domain error"""
        with pytest.raises(ValueError):
            parse("t(9)", contexts["dotted"])


class TestWordOperations:
    """Test cases for reduction, inversion and products"""

    def test_involutive_reduce(self, contexts):
        """Nested squares cancel completely"""
        word = parse("a(1,2) a(2,3) a(2,3) a(1,2) a(1,3)", contexts["plain"])
        assert str(involutive_reduce(word)) == "a(1,3)"

    def test_reduce_keeps_distinct_parities(self, contexts):
        """a(1,2;0) and a(1,2;1) are different generators"""
        word = parse("a(1,2;0) a(1,2;1)", contexts["parity"])
        assert involutive_reduce(word) == word

    def test_inverse_is_reversal(self, contexts):
        """Every generator is an involution"""
        word = parse("a(1,2) t(1) a(1,3)", contexts["dotted"])
        assert str(inverse(word)) == "a(1,3) t(1) a(1,2)"
        assert involutive_reduce(concat(word, inverse(word))).letters == ()

    def test_concat_context_mismatch(self, contexts):
        """Products need one context"""
        u = parse("a(1,2)", contexts["plain"])
        v = parse("a(1,2)", contexts["quotient"])
        with pytest.raises(ContextMismatch):
            concat(u, v)
        with pytest.raises(ContextMismatch):
            u + v

    def test_validate_rejects_foreign_letters(self, contexts):
        """Words built by hand are checked too"""
        word = Word(contexts["plain"], (Letter.dot(1),))
        with pytest.raises(LetterKindMismatch):
            validate(word)

    def test_random_word_is_seeded(self, contexts):
        """Same seed, same word"""
        first = random_word(contexts["dotted"], 12, seed=3)
        second = random_word(contexts["dotted"], 12, seed=3)
        assert first == second
        assert len(first) == 12
        validate(first)
