import math
import random
from itertools import groupby, product

import pytest
from hypothesis import given, settings, strategies as st

from ecgcode.candidates import ConstraintSpec, generate_candidates, homopolymer_blocks


def brute_force(context, spec):
    tail = context[max(0, len(context) - spec.ctx_len):]
    cap = math.floor(spec.bal * (spec.ctx_len + spec.aug_len) + 1e-9)
    keep = []
    for letters in product("ACGT", repeat=spec.aug_len):
        window = tail + "".join(letters)
        gc = sum(c in "GC" for c in window)
        longest = max(len(list(g)) for _, g in groupby(window))
        if longest <= spec.run and gc <= cap and len(window) - gc <= cap:
            keep.append("".join(letters))
    return keep


def test_blocks():
    assert set(homopolymer_blocks(2)) == {"A", "AA", "C", "CC", "G", "GG", "T", "TT"}
    assert set(homopolymer_blocks(1)) == set("ACGT")
    assert len(homopolymer_blocks(5)) == 20


def test_balanced_pairs():
    got = generate_candidates("", ConstraintSpec(run=2, bal=0.5, ctx_len=0, aug_len=2))
    assert set(got) == {"AG", "AC", "GA", "CA", "TG", "TC", "GT", "CT"}
    assert got == sorted(got)


def test_unconstrained_single_base():
    assert generate_candidates("", ConstraintSpec(run=1, bal=1.0, ctx_len=0, aug_len=1)) == list("ACGT")


def test_run_continues_from_context():
    spec = ConstraintSpec(run=2, bal=1.0, ctx_len=2, aug_len=1)
    got = generate_candidates("GG", spec)
    assert got and not any(c.startswith("G") for c in got)
    assert got == brute_force("GG", spec)


def test_infeasible_spec_gives_empty(caplog):
    spec = ConstraintSpec(run=3, bal=0.5, ctx_len=0, aug_len=1)  # cap = 0 for both classes
    assert generate_candidates("", spec) == []
    assert "no candidates" in caplog.text


def test_bad_spec():
    with pytest.raises(ValueError):
        ConstraintSpec(bal=0.4)
    with pytest.raises(ValueError):
        ConstraintSpec(run=0)


@pytest.mark.parametrize("run", [1, 2, 3])
@pytest.mark.parametrize("bal", [0.5, 0.6, 1.0])
def test_complete_on_short_windows(run, bal):
    rng = random.Random(run * 7 + int(bal * 10))
    for l1 in range(0, 4):
        for l2 in range(1, 5 - l1 if l1 else 5):
            spec = ConstraintSpec(run, bal, l1, l2)
            for _ in range(4):
                ctx = "".join(rng.choice("ACGT") for _ in range(rng.randint(0, l1 + 2)))
                assert generate_candidates(ctx, spec) == brute_force(ctx, spec), (ctx, spec)


@settings(max_examples=80, deadline=None)
@given(st.text("ACGT", max_size=6), st.integers(1, 3), st.sampled_from([0.5, 0.6, 0.75, 1.0]),
       st.integers(0, 4), st.integers(1, 4))
def test_sound(ctx, run, bal, l1, l2):
    spec = ConstraintSpec(run, bal, l1, l2)
    cap = math.floor(bal * (l1 + l2) + 1e-9)
    tail = ctx[max(0, len(ctx) - l1):]
    for suffix in generate_candidates(ctx, spec):
        window = tail + suffix
        assert len(suffix) == l2
        assert max(len(list(g)) for _, g in groupby(window)) <= run
        gc = sum(c in "GC" for c in window)
        assert gc <= cap and len(window) - gc <= cap
