import random

import pytest
from hypothesis import given, strategies as st

from ecgcode.edit_model import build_profile
from ecgcode.oracle import brute_force_fecs, hamming, levenshtein

P111 = build_profile("sub,ins,del", "1,1,1")


def test_golden_fec():
    assert brute_force_fecs("AGC", "AGG", P111) == {(1, 0, 0), (0, 1, 1)}
    # the unreduced enumeration also reaches a dominated count
    assert brute_force_fecs("AGC", "AGG", P111, reduced=False) == {(1, 0, 0), (0, 1, 1), (1, 1, 1)}


def test_size_guard():
    with pytest.raises(ValueError):
        brute_force_fecs("A" * 9, "A" * 9, P111)


def test_levenshtein_examples():
    assert levenshtein("TCTTCTTCCG", "TCCGCAGAAT") == 7
    assert levenshtein("ACGT", "ACGT") == 0
    assert levenshtein("AGC", "AGG") == 1
    assert levenshtein("", "ACG") == 3


short = st.text("ACGT", max_size=6)


@given(short, st.data())
def test_zero_tuple_iff_equal(s1, data):
    s2 = data.draw(st.text("ACGT", min_size=len(s1), max_size=len(s1)))
    assert ((0, 0, 0) in brute_force_fecs(s1, s2, P111)) == (s1 == s2)


@given(short, st.data())
def test_symmetry(s1, data):
    s2 = data.draw(st.text("ACGT", min_size=len(s1), max_size=len(s1)))
    fwd = brute_force_fecs(s1, s2, build_profile("sub,ins,del", "2,1,2"))
    bwd = brute_force_fecs(s2, s1, build_profile("sub,ins,del", "2,2,1"))
    assert fwd == {(a, c, b) for a, b, c in bwd}


@given(st.text("ACGT", max_size=8), st.text("ACGT", max_size=8), st.text("ACGT", max_size=8))
def test_triangle(a, b, c):
    assert levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c)


def test_hamming():
    assert hamming("ACGT", "ACCA") == 2
    with pytest.raises(ValueError):
        hamming("A", "AC")
