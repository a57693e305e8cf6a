"""Monte-Carlo growth of a codebook whose words are pairwise unreachable.

All words grow in lockstep by one constrained suffix per round.  Within a
round words are extended in index order; each word samples a handful of
suffixes and keeps the one with the smallest summed pair loss against the
words already extended this round.  Growth stops after the first complete
round in which every pair has loss 0.
"""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .candidates import ConstraintSpec, generate_candidates
from .ecg import EcgPairState, check_alphabet, run_pair
from .edit_model import EditOp, EditProfile, build_profile, parse_eoi, quota_for_pair_check


class GenerationError(RuntimeError):
    pass


class InfeasibleConstraintsError(GenerationError):
    pass


class NonConvergenceError(GenerationError):
    def __init__(self, message: str, partial: "Codebook", total_loss: int):
        super().__init__(message)
        self.partial = partial
        self.total_loss = total_loss


@dataclass(frozen=True)
class GenerationConfig:
    """``targets`` are the errors each word must survive, one per op in ``eoi``.

    With ``raw_check`` they are used unchanged as the pair-check quotas.
    """

    m: int
    eoi: tuple[EditOp, ...]
    targets: tuple[int, ...]
    raw_check: bool = False
    constraint: ConstraintSpec = field(default_factory=ConstraintSpec)
    candidates_per_step: int = 32
    seed: int = 0
    max_steps: int = 64
    min_extra_steps: int = 0

    def __post_init__(self):
        if isinstance(self.eoi, str):
            object.__setattr__(self, "eoi", parse_eoi(self.eoi))
        object.__setattr__(self, "eoi", tuple(self.eoi))
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if self.m < 1:
            raise ValueError(f"codebook size must be >= 1, got {self.m}")
        if self.candidates_per_step < 1:
            raise ValueError("candidates_per_step must be >= 1")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.min_extra_steps < 0:
            raise ValueError("min_extra_steps must be >= 0")
        self.check_profile()

    def check_profile(self) -> EditProfile:
        if self.raw_check:
            return build_profile(self.eoi, self.targets)
        return build_profile(*quota_for_pair_check(self.eoi, self.targets))


@dataclass
class Codebook:
    sequences: list[str]
    profile: EditProfile
    eoi: tuple[EditOp, ...] = ()
    targets: tuple[int, ...] = ()
    raw_check: bool = False
    constraint: Optional[ConstraintSpec] = None
    seed: Optional[int] = None
    steps: int = 0
    elapsed: float = 0.0

    @property
    def m(self) -> int:
        return len(self.sequences)

    @property
    def n(self) -> int:
        return len(self.sequences[0]) if self.sequences else 0

    def redundancy(self) -> float:
        return redundancy(self.n, self.m)

    def baseline(self) -> float:
        return baseline_redundancy(self.n) if self.n else float("nan")


def redundancy(n: int, size: int, alphabet_size: int = 4) -> float:
    """Bits spent above the raw capacity of ``n`` symbols."""
    if size < 1:
        raise ValueError("codebook must hold at least one word")
    return n * math.log2(alphabet_size) - math.log2(size)


def baseline_redundancy(n: int) -> float:
    """Closed-form single-substitution single-deletion reference: 10 log n + 3 log 4 + 11."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return 10 * math.log2(n) + 3 * math.log2(4) + 11


def is_symmetric(profile: EditProfile) -> bool:
    """True when reachability does not depend on pair order."""
    quota = dict(zip(profile.eoi, profile.eq))
    return all(quota.get(op.inverse()) == v for op, v in quota.items())


def _directions(i: int, j: int, symmetric: bool):
    return ((i, j),) if symmetric else ((i, j), (j, i))


def total_loss(states: dict) -> int:
    return sum(state.loss() for state in states.values())


def _pair_loss_job(args):
    a, b, profile = args
    return run_pair(a, b, profile).loss()


def thread_budget() -> int:
    try:
        return max(1, int(os.environ.get("ECG_THREADS", "1")))
    except ValueError:
        return 1


def pair_losses(sequences: Sequence[str], profile: EditProfile,
                workers: Optional[int] = None) -> dict[tuple[int, int], int]:
    """Loss of every ordered pair, computed from scratch."""
    jobs = [(i, j) for i in range(len(sequences)) for j in range(len(sequences)) if i != j]
    workers = thread_budget() if workers is None else workers
    args = [(sequences[i], sequences[j], profile) for i, j in jobs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_pair_loss_job, args, chunksize=16))
    else:
        values = [_pair_loss_job(a) for a in args]
    return dict(zip(jobs, values))


def find_violation(sequences: Sequence[str], profile: EditProfile,
                   workers: Optional[int] = None) -> Optional[tuple[int, int, int]]:
    """First ordered pair ``(i, j, loss)`` with nonzero loss, else None."""
    if len({len(s) for s in sequences}) > 1:
        raise ValueError("codebook words differ in length")
    for s in sequences:
        check_alphabet(s, "codeword")
    for (i, j), value in sorted(pair_losses(sequences, profile, workers).items()):
        if value:
            return i, j, value
    return None


def grow_codebook(config: GenerationConfig,
                  progress: Optional[Callable[[int, int, float], None]] = None) -> Codebook:
    profile = config.check_profile()
    spec = config.constraint
    m = config.m
    rng = np.random.default_rng(config.seed)
    symmetric = is_symmetric(profile)
    seqs = [""] * m
    states: dict[tuple[int, int], EcgPairState] = {}
    for i in range(m):
        for j in range(i + 1, m):
            for key in _directions(i, j, symmetric):
                states[key] = EcgPairState(profile)
    start = time.perf_counter()
    steps = 0
    first_zero = None

    def snapshot():
        return Codebook(list(seqs), profile, config.eoi, config.targets, config.raw_check,
                        spec, config.seed, steps, time.perf_counter() - start)

    while True:
        total = total_loss(states)
        if total == 0:
            if first_zero is None:
                first_zero = steps
            if steps >= first_zero + config.min_extra_steps:
                break
        if steps >= config.max_steps:
            raise NonConvergenceError(
                f"total loss {total} after {steps} steps", snapshot(), total)
        for i in range(m):
            cands = generate_candidates(seqs[i], spec)
            if not cands:
                raise InfeasibleConstraintsError(
                    f"no admissible suffix after {seqs[i][-spec.ctx_len:] if spec.ctx_len else ''!r} under {spec}")
            if len(cands) > config.candidates_per_step:
                picks = rng.choice(len(cands), size=config.candidates_per_step, replace=False)
                cands = [cands[k] for k in sorted(picks)]
            best = None
            for cand in cands:
                grown = seqs[i] + cand
                score = 0
                advanced = {}
                for j in range(i):
                    for a, b in _directions(j, i, symmetric):
                        state = states[a, b].copy()
                        s1 = grown if a == i else seqs[a]
                        s2 = grown if b == i else seqs[b]
                        state.feed(s1, s2)
                        advanced[a, b] = state
                        score += state.loss()
                if best is None or score < best[0]:
                    best = (score, cand, advanced)
            seqs[i] += best[1]
            states.update(best[2])
        steps += 1
        if progress is not None:
            progress(steps, total_loss(states), time.perf_counter() - start)

    book = snapshot()
    hit = find_violation(book.sequences, profile, workers=1)
    if hit is not None:
        raise GenerationError(f"internal error: pair {hit[:2]} reachable after growth")
    return book
