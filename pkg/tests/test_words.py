import pytest
from hypothesis import given, strategies as st

from wordlab.errors import AlphabetError, DomainError, ParseError
from wordlab.words import contains_factor, factors, parse_word


def words(alphabet="012", max_size=30):
    return st.text(alphabet=alphabet, max_size=max_size)


def test_parse_word_accepts_digits():
    assert parse_word("0123456789") == "0123456789"
    assert parse_word("") == ""
    assert parse_word("012", alphabet_size=3) == "012"


def test_parse_word_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_word("01a")
    with pytest.raises(AlphabetError):
        parse_word("012", alphabet_size=2)
    with pytest.raises(AlphabetError):
        parse_word("0", alphabet_size=0)


def test_factors_examples():
    assert factors("012021", 2) == ["01", "02", "12", "20", "21"]
    assert factors("0000", 2) == ["00"]
    assert factors("012021", 0) == [""]
    assert factors("01", 5) == []
    assert factors("", 0) == [""]
    with pytest.raises(DomainError):
        factors("01", -1)


def test_contains_factor_examples():
    assert contains_factor("012021", "202")
    assert not contains_factor("012021", "010")
    assert contains_factor("anything" * 0 + "01", "")
    assert contains_factor("", "")


@given(words(), st.integers(0, 8))
def test_factors_match_brute_force(w, length):
    brute = sorted({w[i : i + length] for i in range(len(w) - length + 1)})
    assert factors(w, length) == brute


@given(words(max_size=15), words(max_size=5))
def test_contains_factor_matches_scan(w, u):
    brute = any(w[i : i + len(u)] == u for i in range(len(w) - len(u) + 1))
    assert contains_factor(w, u) == brute
