import random

import pytest
from hypothesis import given, settings, strategies as st

from ecgcode.ecg import (AlphabetError, EcgPairState, IncrementalError, expected_visits, full_table,
                         init_state, pair_loss, run_pair, terminal_fecs)
from ecgcode.edit_model import build_profile, index_decode
from ecgcode.fec import minimal_bits, to_tuples, FecSet

P111 = build_profile("sub,ins,del", "1,1,1")
P422 = build_profile("sub,ins,del", "4,2,2")
PROFILES = [build_profile("sub,ins,del", eq) for eq in ("1,0,0", "1,1,1", "2,1,1", "4,2,2")]

dna = st.text("ACGT", max_size=9)


def test_init_state():
    assert init_state(P111).shape == (2, 3)
    assert init_state(build_profile("sub", "2")).shape == (2, 1)
    assert init_state(P422).loss() == P422.L


def test_golden_pairs():
    assert terminal_fecs("AGC", "AGG", P111) == {(1, 0, 0), (0, 1, 1)}
    assert pair_loss("AGC", "AGG", P111) == P111.L - min(index_decode(P111, (1, 0, 0)),
                                                       index_decode(P111, (0, 1, 1)))
    assert pair_loss("AGC", "AGG", P111) == 7
    assert terminal_fecs("TCTTCTTCCG", "TCCGCAGAAT", P422) == set()
    assert pair_loss("TCTTCTTCCG", "TCCGCAGAAT", P422) == 0


@given(dna)
def test_identical_pair_has_full_loss(s):
    state = run_pair(s, s, P422)
    assert (0, 0, 0) in state.terminal_fecs()
    assert state.loss() == P422.L


def test_contract_errors():
    state = init_state(P111)
    with pytest.raises(IncrementalError):
        state.extend("AAA", "AAA", 1, 2)
    with pytest.raises(IncrementalError):
        state.extend("AA", "AA", 0, 3)
    with pytest.raises(AlphabetError):
        state.extend("AXA", "AAA", 0, 3)
    with pytest.raises(ValueError):
        terminal_fecs("AA", "A", P111)


def _pairs(count, seed, max_len=8):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_len)
        yield ("".join(rng.choice("ACGT") for _ in range(n)),
               "".join(rng.choice("ACGT") for _ in range(n)))


@pytest.mark.parametrize("profile", PROFILES, ids=lambda p: str(p.eq))
def test_incremental_matches_batch(profile):
    for s1, s2 in _pairs(150, 1):
        if len(s1) < 2:
            continue
        whole = run_pair(s1, s2, profile)
        for k in range(1, len(s1)):
            split = init_state(profile).extend(s1, s2, 0, k).extend(s1, s2, k, len(s1))
            assert split.rows[split.cursor] == whole.rows[whole.cursor]
            assert split.visits == whole.visits


@pytest.mark.parametrize("profile", PROFILES, ids=lambda p: str(p.eq))
def test_band_matches_full_table(profile):
    for s1, s2 in _pairs(150, 2):
        n = len(s1)
        reference = full_table(s1, s2, profile)[n][n]
        assert run_pair(s1, s2, profile).terminal_bits() == reference
        assert run_pair(s1, s2, profile, band=n).terminal_bits() == reference


def test_full_table_unequal_lengths():
    table = full_table("ACGT", "ACT", P111)
    assert to_tuples(FecSet(minimal_bits(table[4][3], P111), P111.L), P111) == {(0, 0, 1)}


@settings(max_examples=200, deadline=None)
@given(dna, st.data())
def test_ins_del_symmetry(s1, data):
    s2 = data.draw(st.text("ACGT", min_size=len(s1), max_size=len(s1)))
    forward = build_profile("sub,ins,del", "2,1,2")
    backward = build_profile("sub,ins,del", "2,2,1")
    swapped = {(a, c, b) for a, b, c in terminal_fecs(s2, s1, backward)}
    assert terminal_fecs(s1, s2, forward) == swapped


@pytest.mark.parametrize("n", [1, 5, 10, 20])
@pytest.mark.parametrize("q", [0, 1, 2])
def test_visit_count(n, q):
    profile = build_profile("sub,ins,del", (1, q, q))
    rng = random.Random(n * 10 + q)
    s1 = "".join(rng.choice("ACGT") for _ in range(n))
    s2 = "".join(rng.choice("ACGT") for _ in range(n))
    assert run_pair(s1, s2, profile).visits == expected_visits(n, q)
    if n > q:
        assert expected_visits(n, q) == n * (2 * q + 1) - q * (q + 1)


def test_copy_is_independent():
    state = init_state(P111).extend("ACG", "ACT", 0, 3)
    clone = state.copy()
    clone.extend("ACGA", "ACTA", 3, 4)
    assert state.consumed == 3 and clone.consumed == 4
    assert state.rows != clone.rows or state.cursor != clone.cursor


def test_character_specific_ops():
    profile = build_profile("del:A,ins:A", "1,1")
    assert pair_loss("CAG", "CGA", profile) > 0
    assert pair_loss("CTG", "CGT", profile) == 0
