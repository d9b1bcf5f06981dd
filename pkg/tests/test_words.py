import pytest
from hypothesis import given, strategies as st

from ckgeo.errors import ParseError
from ckgeo.words import (
    EXPONENT_CAP,
    LETTERS,
    LetterMapKind,
    apply_letter_map,
    cyclic_shifts,
    format_word,
    free_reduce,
    from_syllables,
    is_reduced,
    parse_word,
    syllables,
    word_inverse,
    word_sort_key,
)

words_st = st.text(alphabet=LETTERS, max_size=60)


class TestParse:
    def test_plain_letters(self):
        assert parse_word("abAB") == "abAB"

    def test_exponents_expand(self):
        assert parse_word("a^3 b^-2") == "aaaBB"
        assert parse_word("b^-1") == "B"

    def test_uppercase_is_inverse(self):
        assert parse_word("A^2") == "AA"
        # An exponent on an uppercase letter composes: (a^-1)^-2 = a^2.
        assert parse_word("A^-2") == "aa"

    def test_empty_forms(self):
        assert parse_word("") == ""
        assert parse_word("e") == ""
        assert parse_word("  e  ") == ""

    def test_whitespace_ignored(self):
        assert parse_word(" a  b\tA\nB ") == "abAB"

    def test_bad_character_position(self):
        with pytest.raises(ParseError) as exc:
            parse_word("ab x ba")
        assert exc.value.position == 3
        assert "position 3" in str(exc.value)

    def test_zero_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_word("a^0")

    def test_exponent_cap(self):
        with pytest.raises(ParseError):
            parse_word(f"a^{EXPONENT_CAP + 1}")
        # At the cap itself the word is accepted.
        assert len(parse_word(f"a^{EXPONENT_CAP}")) == EXPONENT_CAP


class TestFormat:
    def test_syllable_grouping(self):
        assert format_word("BBaBBBBaaa") == "b^-2 a b^-4 a^3"
        assert format_word("abAb") == "a b a^-1 b"

    def test_empty_is_e(self):
        assert format_word("") == "e"

    def test_round_trip(self):
        for text in ("abAb", "BBaBBBBaaa", "aaaa", ""):
            assert parse_word(format_word(text)) == text

    @given(words_st)
    def test_round_trip_random(self, w):
        assert parse_word(format_word(w)) == w


class TestReduce:
    def test_simple_cancellation(self):
        assert free_reduce("aA") == ""
        assert free_reduce("abBA") == ""
        assert free_reduce("abBa") == "aa"

    def test_cascading_cancellation(self):
        assert free_reduce("abbBBA") == ""

    def test_is_reduced(self):
        assert is_reduced("abab")
        assert not is_reduced("abBa")
        assert is_reduced("")

    @given(words_st)
    def test_reduce_is_idempotent(self, w):
        r = free_reduce(w)
        assert free_reduce(r) == r
        assert is_reduced(r)

    @given(words_st)
    def test_inverse_cancels(self, w):
        assert free_reduce(w + word_inverse(w)) == ""
        assert free_reduce(word_inverse(w) + w) == ""

    def test_word_inverse(self):
        assert word_inverse("abAB") == "baBA"
        assert word_inverse("") == ""


class TestSyllables:
    def test_split_and_join(self):
        assert syllables("aaBBB") == [("a", 2), ("b", -3)]
        assert from_syllables([("a", 2), ("b", -3)]) == "aaBBB"

    def test_empty(self):
        assert syllables("") == []
        assert from_syllables([]) == ""


class TestLetterMaps:
    def test_flip_a(self):
        assert apply_letter_map(LetterMapKind.FLIP_A, "abAB") == "AbaB"

    def test_flip_both_is_swapcase(self):
        w = "aabBAB"
        assert apply_letter_map(LetterMapKind.FLIP_BOTH, w) == w.swapcase()

    @given(words_st)
    def test_involutions(self, w):
        for kind in LetterMapKind:
            assert apply_letter_map(kind, apply_letter_map(kind, w)) == w

    @given(words_st)
    def test_flips_commute(self, w):
        ab = apply_letter_map(LetterMapKind.FLIP_A, apply_letter_map(LetterMapKind.FLIP_BOTH, w))
        ba = apply_letter_map(LetterMapKind.FLIP_BOTH, apply_letter_map(LetterMapKind.FLIP_A, w))
        assert ab == ba


class TestCyclicShifts:
    def test_all_rotations(self):
        assert cyclic_shifts("abA") == ["abA", "bAa", "Aab"]

    def test_empty_word(self):
        assert cyclic_shifts("") == [""]

    def test_count(self):
        assert len(cyclic_shifts("abAb")) == 4


class TestSortKey:
    def test_letter_precedence(self):
        assert sorted(["B", "b", "A", "a"], key=word_sort_key) == ["a", "A", "b", "B"]

    def test_length_first(self):
        assert sorted(["bb", "a", "B"], key=word_sort_key) == ["a", "B", "bb"]
