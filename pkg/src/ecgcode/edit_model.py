"""Edit operations, quotas and the bit layout of feasible-edit-count tuples.

A feasible edit count (FEC) is a tuple with one counter per budgeted edit
operation.  All tuples inside the quota box are numbered with a mixed-radix
scheme (radix ``eq[i] + 1``, coordinate 0 least significant) so that a set of
tuples fits in a single integer used as a bit array of width ``L``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

ALPHABET = "ACGT"
WILDCARD = "*"

# Largest bit-array width a profile may request.
MAX_WIDTH = 1 << 16


class ProfileError(ValueError):
    """Raised for malformed edit-of-interest / quota specifications."""


class CapacityError(ProfileError):
    def __init__(self, required: int, limit: int = MAX_WIDTH):
        super().__init__(f"profile needs L={required} bits, limit is {limit}")
        self.required = required
        self.limit = limit


class Kind(enum.Enum):
    SUB = "sub"
    INS = "ins"
    DEL = "del"
    EPS = "eps"  # match edge, never part of an edit list


@dataclass(frozen=True)
class EditOp:
    """One budgeted edit.  ``src``/``dst`` are a nucleotide or ``*``.

    INS only carries ``dst``, DEL only ``src``; SUB carries both.
    """

    kind: Kind
    src: Optional[str] = None
    dst: Optional[str] = None

    def __post_init__(self):
        if self.kind is Kind.EPS:
            raise ProfileError("the match edge is not an edit operation")
        need_src = self.kind in (Kind.SUB, Kind.DEL)
        need_dst = self.kind in (Kind.SUB, Kind.INS)
        for name, value, needed in (("src", self.src, need_src), ("dst", self.dst, need_dst)):
            if needed:
                if value is None:
                    object.__setattr__(self, name, WILDCARD)
                elif value != WILDCARD and value not in ALPHABET:
                    raise ProfileError(f"bad character {value!r} in {self.kind.value} op")
            elif value is not None:
                raise ProfileError(f"{self.kind.value} op takes no {name} character")

    @classmethod
    def parse(cls, text: str) -> "EditOp":
        """Parse ``sub``, ``sub:A>G``, ``ins:C``, ``del:T`` (case-insensitive op name)."""
        head, _, chars = text.strip().partition(":")
        try:
            kind = Kind(head.strip().lower())
        except ValueError:
            raise ProfileError(f"unknown edit op {text!r}") from None
        if kind is Kind.EPS:
            raise ProfileError(f"unknown edit op {text!r}")
        chars = chars.strip().upper()
        if kind is Kind.SUB:
            if not chars:
                return cls(kind)
            src, sep, dst = chars.partition(">")
            if not sep:
                raise ProfileError(f"substitution needs 'X>Y', got {text!r}")
            return cls(kind, src or WILDCARD, dst or WILDCARD)
        if kind is Kind.INS:
            return cls(kind, dst=chars or WILDCARD)
        return cls(kind, src=chars or WILDCARD)

    def inverse(self) -> "EditOp":
        """The edit that undoes this one (ins <-> del, sub reversed)."""
        if self.kind is Kind.SUB:
            return EditOp(Kind.SUB, self.dst, self.src)
        if self.kind is Kind.INS:
            return EditOp(Kind.DEL, src=self.dst)
        return EditOp(Kind.INS, dst=self.src)

    def matches(self, kind: Kind, c_from: Optional[str], c_to: Optional[str]) -> bool:
        if kind is not self.kind:
            return False
        if self.src is not None and self.src != WILDCARD and self.src != c_from:
            return False
        if self.dst is not None and self.dst != WILDCARD and self.dst != c_to:
            return False
        return True

    def __str__(self):
        if self.kind is Kind.SUB:
            if self.src == WILDCARD and self.dst == WILDCARD:
                return "sub"
            return f"sub:{self.src}>{self.dst}"
        char = self.dst if self.kind is Kind.INS else self.src
        return self.kind.value if char == WILDCARD else f"{self.kind.value}:{char}"


def parse_eoi(text: str) -> tuple[EditOp, ...]:
    return tuple(EditOp.parse(part) for part in text.split(",") if part.strip())


def parse_quotas(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ProfileError(f"quotas must be comma-separated integers, got {text!r}") from None
    return values


def format_eoi(eoi: Iterable[EditOp]) -> str:
    return ",".join(str(op) for op in eoi)


def format_quotas(eq: Iterable[int]) -> str:
    return ",".join(str(v) for v in eq)


@dataclass(frozen=True)
class EditProfile:
    """Edits of interest, their quotas and every table derived from them.

    ``sa[i]`` is the index distance between tuples that differ by one in
    coordinate ``i``; ``em[i]`` keeps the tuples whose coordinate ``i`` can
    still be incremented.  ``q`` is the band half-width used by the engine.
    """

    eoi: tuple[EditOp, ...]
    eq: tuple[int, ...]
    L: int = field(init=False)
    sa: tuple[int, ...] = field(init=False)
    em: tuple[int, ...] = field(init=False)
    q: int = field(init=False)
    # (kind, c_from, c_to) -> ((mask, shift), ...); filled lazily
    _moves: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        eoi, eq = tuple(self.eoi), tuple(int(v) for v in self.eq)
        if len(eoi) != len(eq):
            raise ProfileError(f"{len(eoi)} edit ops but {len(eq)} quotas")
        if not eoi:
            raise ProfileError("at least one edit op is required")
        if any(v < 0 for v in eq):
            raise ProfileError(f"quotas must be non-negative, got {eq}")
        for op in eoi:
            if not isinstance(op, EditOp):
                raise ProfileError(f"not an EditOp: {op!r}")
        width = math.prod(v + 1 for v in eq)
        if width > MAX_WIDTH:
            raise CapacityError(width)
        sa = [1]
        for v in eq[:-1]:
            sa.append(sa[-1] * (v + 1))
        em = []
        for i, v in enumerate(eq):
            # bit k is set iff digit i of k is below its quota
            block = ((1 << (sa[i] * v)) - 1)
            period = sa[i] * (v + 1)
            mask = 0
            for start in range(0, width, period):
                mask |= block << start
            em.append(mask)
        # offsets i - j are bounded by the total ins (resp. del) budget
        ins_total = sum(v for op, v in zip(eoi, eq) if op.kind is Kind.INS)
        del_total = sum(v for op, v in zip(eoi, eq) if op.kind is Kind.DEL)
        object.__setattr__(self, "eoi", eoi)
        object.__setattr__(self, "eq", eq)
        object.__setattr__(self, "L", width)
        object.__setattr__(self, "sa", tuple(sa))
        object.__setattr__(self, "em", tuple(em))
        object.__setattr__(self, "q", max(ins_total, del_total))
        object.__setattr__(self, "_moves", {})

    @property
    def K(self) -> int:
        return len(self.eoi)

    @property
    def full(self) -> int:
        return (1 << self.L) - 1

    def moves(self, kind: Kind, c_from: Optional[str] = None, c_to: Optional[str] = None):
        """(mask, shift) pairs for every edit op charged by this edge."""
        key = (kind, c_from, c_to)
        cached = self._moves.get(key)
        if cached is None:
            cached = tuple((self.em[i], self.sa[i])
                           for i in matching_edits(self, kind, c_from, c_to))
            self._moves[key] = cached
        return cached

    def describe(self) -> str:
        return f"eoi={format_eoi(self.eoi)} eq={format_quotas(self.eq)} L={self.L} q={self.q}"


def build_profile(eoi: Sequence[EditOp] | str, eq: Sequence[int] | str) -> EditProfile:
    if isinstance(eoi, str):
        eoi = parse_eoi(eoi)
    if isinstance(eq, str):
        eq = parse_quotas(eq)
    return EditProfile(tuple(eoi), tuple(eq))


def index_encode(profile: EditProfile, k: int) -> tuple[int, ...]:
    if not 0 <= k < profile.L:
        raise IndexError(f"index {k} outside [0, {profile.L})")
    digits = []
    for v in profile.eq:
        k, d = divmod(k, v + 1)
        digits.append(d)
    return tuple(digits)


def index_decode(profile: EditProfile, counts: Sequence[int]) -> int:
    if len(counts) != profile.K:
        raise IndexError(f"tuple of length {len(counts)} for {profile.K} edit ops")
    k = 0
    for c, v, s in zip(counts, profile.eq, profile.sa):
        if not 0 <= c <= v:
            raise IndexError(f"tuple {tuple(counts)} exceeds quotas {profile.eq}")
        k += c * s
    return k


def matching_edits(profile: EditProfile, kind: Kind,
                   c_from: Optional[str] = None, c_to: Optional[str] = None) -> frozenset[int]:
    """Indices of the edit ops an edge of type ``kind`` may be charged to."""
    if kind is Kind.EPS:
        return frozenset()
    return frozenset(i for i, op in enumerate(profile.eoi) if op.matches(kind, c_from, c_to))


def quota_for_pair_check(eoi: Sequence[EditOp],
                         targets: Sequence[int]) -> tuple[tuple[EditOp, ...], tuple[int, ...]]:
    """Quotas under which two codewords must be mutually unreachable.

    Two corrupted copies meet iff one codeword can be edited into the other
    with its own errors followed by the inverse of the partner's errors, so
    every op gets its own target plus the target of its inverse op.  Inverse
    ops missing from ``eoi`` are appended (e.g. ``del`` alone gains ``ins``).
    """
    eoi = tuple(eoi)
    targets = tuple(int(t) for t in targets)
    if len(eoi) != len(targets):
        raise ProfileError(f"{len(eoi)} edit ops but {len(targets)} targets")
    if len(set(eoi)) != len(eoi):
        raise ProfileError(f"duplicate edit ops in {format_eoi(eoi)}")
    if any(t < 0 for t in targets):
        raise ProfileError(f"correction targets must be non-negative, got {targets}")
    budget = dict(zip(eoi, targets))
    out_ops = list(eoi)
    for op in eoi:
        inv = op.inverse()
        if inv not in out_ops:
            out_ops.append(inv)
    out_eq = []
    for op in out_ops:
        inv = op.inverse()
        own = budget.get(op, 0)
        out_eq.append(2 * own if inv == op else own + budget.get(inv, 0))
    return tuple(out_ops), tuple(out_eq)
