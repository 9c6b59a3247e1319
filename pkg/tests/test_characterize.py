import os

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_code_membership
from wordlab.characterize import (
    code_factor_membership,
    every_window_contains,
    load_manifest,
    morphisms_equal,
    verify_characterization,
)
from wordlab.errors import DomainError, ParseError
from wordlab.morphisms import compose, fixed_point_prefix, parse_morphism
from wordlab.words import factors

B3 = parse_morphism("012/02/1")


def test_code_factor_membership_examples():
    assert code_factor_membership("0010", {"01", "0"})
    assert not code_factor_membership("11", {"01", "0"})
    assert code_factor_membership("", {"01", "0"})
    assert code_factor_membership("10", {"01"})  # spans a piece boundary
    assert code_factor_membership("0110", {"011", "00"})
    with pytest.raises(DomainError):
        code_factor_membership("01", set())
    with pytest.raises(DomainError):
        code_factor_membership("01", {""})


@given(
    st.text(alphabet="01", min_size=0, max_size=10),
    st.sets(st.text(alphabet="01", min_size=2, max_size=4), min_size=1, max_size=3),
)
@settings(max_examples=80)
def test_code_membership_matches_enumeration(v, pieces):
    assert code_factor_membership(v, pieces) == naive_code_membership(v, pieces)


@given(st.integers(1, 6))
def test_fixed_point_factors_live_in_their_code(length):
    for text in ("012/02/1", "01/0", "01/00", "01/23/4/21/0"):
        m = parse_morphism(text)
        w = fixed_point_prefix(m, 2000)
        pieces = {img for img in m.images if img}
        assert all(code_factor_membership(v, pieces) for v in factors(w, length))


def test_morphisms_equal_identities():
    k5 = parse_morphism("013431/0131/02")
    coloring = parse_morphism("0/1/2/2/0")
    assert morphisms_equal(compose(coloring, k5), compose(B3, B3))
    g12 = parse_morphism("001/01/1")
    m2 = parse_morphism("02/1/0/12/")
    h12 = parse_morphism("0011/01/001/011/")
    assert morphisms_equal(compose(g12, m2), h12)
    assert morphisms_equal(B3, B3)
    assert not morphisms_equal(B3, parse_morphism("012/02/2"))
    with pytest.raises(DomainError):
        morphisms_equal(B3, parse_morphism("01/0"))


def test_every_window_contains():
    assert every_window_contains("00100010", 4, "1")
    assert not every_window_contains("0101", 2, "00")
    assert every_window_contains("0101", 2, "")
    assert not every_window_contains("10001", 3, "1")
    with pytest.raises(DomainError):
        every_window_contains("01", 3, "0")
    with pytest.raises(DomainError):
        every_window_contains("01", 1, "01")


@given(st.text(alphabet="01", min_size=1, max_size=25), st.integers(1, 8))
def test_every_window_matches_brute_force(w, k):
    if k > len(w):
        return
    u = w[:2]
    if len(u) > k:
        return
    brute = all(u in w[i : i + k] for i in range(len(w) - k + 1))
    assert every_window_contains(w, k, u) == brute


def test_manifest_round_trip(manifest_dir):
    m = load_manifest(os.path.join(manifest_dir, "b3"))
    assert m.name == "b3"
    assert m.inner == B3 and m.outer is None
    assert m.check_length == 20 and m.resolved_horizon() == 20
    assert m.constraints.alphabet_size == 3


def test_manifest_parse_errors(tmp_path):
    bad = tmp_path / "bad"
    bad.write_text("name x\nweird directive\n")
    with pytest.raises(ParseError):
        load_manifest(bad)
    incomplete = tmp_path / "incomplete"
    incomplete.write_text("name x\n")
    with pytest.raises(ParseError):
        load_manifest(incomplete)


def test_verify_characterization_passes_on_b3(manifest_dir):
    report = verify_characterization(load_manifest(os.path.join(manifest_dir, "b3")))
    assert report.passed
    assert report.verdict_line() == "VERDICT b3 PASS"
    names = [r.name for r in report.results]
    assert "target-prefix-satisfies-constraints" in names
    assert "extendable-set-equals-prefix-factors" in names
    assert report.assumptions  # the bounded-scale gap is recorded


def test_verify_characterization_fails_on_wrong_target(tmp_path, manifest_dir):
    cons = tmp_path / "empty.cons"
    cons.write_text("alphabet 2\n")
    man = tmp_path / "wrong"
    man.write_text(
        "name wrong\nconstraints empty.cons\ntarget-inner 01/00\n"
        "check-length 2\nhorizon 2\nprefix 400\n"
    )
    report = verify_characterization(load_manifest(man))
    assert not report.passed
    assert report.verdict_line() == "VERDICT wrong FAIL"
    failing = {r.name: r for r in report.results if not r.passed}
    # the unconstrained language has the factor 11, the period-doubling word does not
    assert "extendable-set-equals-prefix-factors" in failing
    assert "11" in failing["extendable-set-equals-prefix-factors"].detail


def test_reports_disjoint_differences(tmp_path):
    cons = tmp_path / "c.cons"
    cons.write_text("alphabet 2\n")
    man = tmp_path / "m"
    man.write_text(
        "name m\nconstraints c.cons\ntarget-inner 01/00\ncheck-length 2\nhorizon 2\nprefix 200\n"
    )
    manifest = load_manifest(man)
    from wordlab.search import extendable_set

    ext = extendable_set(manifest.constraints, 2, 2)
    fact = set(factors(fixed_point_prefix(manifest.inner, 200), 2))
    assert (ext - fact).isdisjoint(fact - ext)
    assert (ext - fact) | (fact - ext) == ext ^ fact
