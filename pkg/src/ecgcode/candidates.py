"""Suffix candidates that keep GC balance and homopolymer runs in check."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from .edit_model import ALPHABET

log = logging.getLogger(__name__)

GC = frozenset("GC")


@dataclass(frozen=True)
class ConstraintSpec:
    """``run``: longest allowed homopolymer.  ``bal``: max fraction of G/C and
    of A/T inside the window of ``ctx_len`` context plus ``aug_len`` new bases.
    """

    run: int = 3
    bal: float = 1.0
    ctx_len: int = 0
    aug_len: int = 1

    def __post_init__(self):
        if self.run < 1:
            raise ValueError(f"run must be >= 1, got {self.run}")
        if not 0.5 <= self.bal <= 1.0:
            raise ValueError(f"bal must lie in [0.5, 1.0], got {self.bal}")
        if self.ctx_len < 0:
            raise ValueError(f"ctx_len must be >= 0, got {self.ctx_len}")
        if self.aug_len < 1:
            raise ValueError(f"aug_len must be >= 1, got {self.aug_len}")

    @property
    def cap(self) -> int:
        """Max G/C (and A/T) count in a full window."""
        # tolerate float noise such as 0.6 * 5 = 2.9999999999999996
        return math.floor(self.bal * (self.ctx_len + self.aug_len) + 1e-9)


def homopolymer_blocks(run: int) -> list[str]:
    return [c * k for c in ALPHABET for k in range(1, run + 1)]


def max_run(seq: str) -> int:
    best = cur = 0
    last = None
    for c in seq:
        cur = cur + 1 if c == last else 1
        last = c
        best = max(best, cur)
    return best


def gc_count(seq: str) -> int:
    return sum(c in GC for c in seq)


def _last_run(seq: str) -> int:
    if not seq:
        return 0
    last = seq[-1]
    n = len(seq) - len(seq.rstrip(last))
    return n


def window_ok(window: str, spec: ConstraintSpec) -> bool:
    """Predicate every emitted window satisfies."""
    cap = spec.cap
    gc = gc_count(window)
    return max_run(window) <= spec.run and gc <= cap and len(window) - gc <= cap


def generate_candidates(context: str, spec: ConstraintSpec) -> list[str]:
    """All ``aug_len`` suffixes that may follow ``context``, sorted.

    Only the last ``ctx_len`` characters of ``context`` matter.  Suffixes are
    grown breadth-first from homopolymer blocks; a block is refused when it
    would push the window's G/C (or A/T) count over the cap or merge into a
    run longer than ``spec.run``.
    """
    tail = context[max(0, len(context) - spec.ctx_len):]
    out = list(_candidates(tail, spec))
    if not out:
        log.warning("no candidates for context %r under %s", tail, spec)
    return out


@lru_cache(maxsize=4096)
def _candidates(tail: str, spec: ConstraintSpec) -> tuple[str, ...]:
    window = len(tail) + spec.aug_len
    cap = spec.cap
    tail_gc = gc_count(tail)
    if max_run(tail) > spec.run or tail_gc > cap or len(tail) - tail_gc > cap:
        return ()
    blocks = homopolymer_blocks(spec.run)
    found = set()
    # (item, gc count, at count)
    frontier = [(tail, tail_gc, len(tail) - tail_gc)]
    while frontier:
        nxt = []
        for item, gc, at in frontier:
            if len(item) == window:
                found.add(item[len(tail):])
                continue
            last = item[-1] if item else None
            last_run = _last_run(item)
            for block in blocks:
                k = len(block)
                if len(item) + k > window:
                    continue
                nuc = block[0]
                if nuc in GC:
                    if gc + k > cap:
                        continue
                elif at + k > cap:
                    continue
                if nuc == last and last_run + k > spec.run:
                    continue
                if nuc in GC:
                    nxt.append((item + block, gc + k, at))
                else:
                    nxt.append((item + block, gc, at + k))
        # identical strings reached through different block splits
        frontier = list(dict.fromkeys(nxt))
    return tuple(sorted(found))
