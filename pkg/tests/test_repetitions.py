from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import (
    naive_distinct_min_overlaps,
    naive_distinct_squares,
    naive_find_sq_t,
    naive_max_exponent,
)
from wordlab.errors import DomainError
from wordlab.repetitions import (
    Repetition,
    distinct_min_overlaps,
    distinct_squares,
    find_sq_t,
    format_exponent,
    is_exponent_free,
    max_exponent,
)

binary = st.text(alphabet="01", min_size=2, max_size=120)
ternary = st.text(alphabet="012", min_size=2, max_size=80)


def test_distinct_squares_examples():
    assert distinct_squares("0100010101") == {"00", "0101", "1010"}
    assert distinct_squares("010") == set()
    assert distinct_squares("") == set()


def test_distinct_min_overlaps_examples():
    assert distinct_min_overlaps("0100010101") == {"000", "01010", "10101"}
    assert distinct_min_overlaps("0110") == set()


def test_find_sq_t_examples():
    r = find_sq_t("012012", 3)
    assert (r.start, r.period, r.length) == (0, 3, 6)
    assert find_sq_t("0100010101", 3) is None
    r = find_sq_t("0100010101", 1)
    assert (r.start, r.period) == (2, 1)
    with pytest.raises(DomainError):
        find_sq_t("01", 0)


def test_max_exponent_examples():
    e, wit = max_exponent("010")
    assert e == Fraction(3, 2) and (wit.start, wit.period, wit.length) == (0, 2, 3)
    e, _ = max_exponent("00")
    assert e == Fraction(2)
    e, wit = max_exponent("01010")
    assert e == Fraction(5, 2) and wit.factor_of("01010") == "01010"
    e, _ = max_exponent("01")
    assert e == Fraction(1)
    with pytest.raises(DomainError):
        max_exponent("0")


def test_is_exponent_free_examples():
    assert is_exponent_free("010", Fraction(7, 4), strict=True) is None
    wit = is_exponent_free("0101", Fraction(2), strict=False)
    assert wit.factor_of("0101") == "0101"
    assert is_exponent_free("0101", Fraction(2), strict=True) is None
    wit = is_exponent_free("01010", Fraction(2), strict=True)
    assert wit.exponent > 2
    with pytest.raises(DomainError):
        is_exponent_free("01", Fraction(1), strict=True)


def test_exponent_scaling_invariance():
    for w in ("0100010101", "0110100110010110"):
        assert is_exponent_free(w, Fraction(10, 6), True) == is_exponent_free(
            w, Fraction(5, 3), True
        )


def test_format_exponent():
    assert format_exponent(Fraction(5, 3)) == "5/3"
    assert format_exponent(Fraction(2)) == "2/1"


@given(binary)
def test_squares_match_oracle_binary(w):
    assert distinct_squares(w) == naive_distinct_squares(w)


@given(ternary)
def test_overlaps_match_oracle_ternary(w):
    assert distinct_min_overlaps(w) == naive_distinct_min_overlaps(w)


@given(binary, st.integers(1, 5))
def test_find_sq_t_matches_oracle(w, t):
    got = find_sq_t(w, t)
    want = naive_find_sq_t(w, t)
    if want is None:
        assert got is None
    else:
        assert (got.start, got.period) == want


@given(ternary)
def test_max_exponent_matches_oracle(w):
    exp, wit = max_exponent(w)
    n_exp, n_start, n_period = naive_max_exponent(w)
    assert exp == n_exp
    assert (wit.start, wit.period) == (n_start, n_period)
    # the witness really is a repetition with that period
    u = wit.factor_of(w)
    assert all(u[i] == u[i + wit.period] for i in range(len(u) - wit.period))


@given(binary)
def test_cross_operation_invariants(w):
    squares = distinct_squares(w)
    overlaps = distinct_min_overlaps(w)
    assert (find_sq_t(w, 1) is None) == (not squares)
    exp, _ = max_exponent(w)
    assert (exp >= 2) == bool(squares)
    assert (exp > 2) == bool(overlaps)


@given(binary, st.fractions(min_value=Fraction(11, 10), max_value=Fraction(4)))
def test_is_exponent_free_matches_max_exponent(w, e):
    exp, _ = max_exponent(w)
    for strict in (True, False):
        wit = is_exponent_free(w, e, strict)
        violated = exp > e if strict else exp >= e
        assert (wit is not None) == violated
        if wit is not None:
            u = wit.factor_of(w)
            assert len(u) == wit.length
            assert all(u[i] == u[i + wit.period] for i in range(len(u) - wit.period))
            assert (wit.exponent > e) if strict else (wit.exponent >= e)
