"""Bit-array sets of feasible edit counts and the edge transition kernel."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .edit_model import EditProfile, Kind, index_decode, index_encode


@dataclass(frozen=True)
class FecSet:
    """Set of FEC tuples stored as an ``L``-bit integer (bit k <-> tuple k)."""

    bits: int
    L: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.L:
            raise ValueError(f"bits do not fit in width {self.L}")

    @classmethod
    def empty(cls, profile: EditProfile) -> "FecSet":
        return cls(0, profile.L)

    @classmethod
    def origin(cls, profile: EditProfile) -> "FecSet":
        return cls(1, profile.L)

    def _check(self, other: "FecSet"):
        if other.L != self.L:
            raise ValueError(f"width mismatch: {self.L} vs {other.L}")

    def __or__(self, other: "FecSet") -> "FecSet":
        self._check(other)
        return FecSet(self.bits | other.bits, self.L)

    def __and__(self, other: "FecSet") -> "FecSet":
        self._check(other)
        return FecSet(self.bits & other.bits, self.L)

    def __bool__(self):
        return self.bits != 0

    def __len__(self):
        return self.bits.bit_count()

    def bitstring(self, group: int = 8) -> str:
        """Low index first, grouped like ``01010000 01000000 ...``."""
        raw = format(self.bits, f"0{self.L}b")[::-1] if self.L else ""
        return " ".join(raw[i:i + group] for i in range(0, len(raw), group))


def shift_in(bits: int, moves) -> int:
    """OR of every ``(bits & mask) << shift`` over the given (mask, shift) pairs."""
    out = 0
    for mask, shift in moves:
        out |= (bits & mask) << shift
    return out


def transition(source: FecSet, kind: Kind, profile: EditProfile,
               target: Optional[FecSet] = None,
               c_from: Optional[str] = None, c_to: Optional[str] = None) -> FecSet:
    """Push ``source`` across one edge and OR the result into ``target``.

    A match edge (``Kind.EPS``) copies the source.  Other edges increment, in
    turn, each matching edit coordinate; tuples already at quota in that
    coordinate are masked out first, so nothing overflows.
    """
    if target is None:
        target = FecSet.empty(profile)
    if source.L != profile.L or target.L != profile.L:
        raise ValueError(f"FEC width does not match profile L={profile.L}")
    if kind is Kind.EPS:
        return FecSet(target.bits | source.bits, profile.L)
    moved = shift_in(source.bits, profile.moves(kind, c_from, c_to))
    return FecSet(target.bits | moved, profile.L)


def upward_closure(bits: int, profile: EditProfile) -> int:
    """Every in-quota tuple that dominates some tuple of ``bits``."""
    every = tuple(zip(profile.em, profile.sa))
    closed = bits
    frontier = bits
    while frontier:
        grown = shift_in(frontier, every) & ~closed
        closed |= grown
        frontier = grown
    return closed


def minimal_bits(bits: int, profile: EditProfile) -> int:
    """Drop tuples that are coordinate-wise >= another tuple in the set."""
    above = upward_closure(shift_in(bits, tuple(zip(profile.em, profile.sa))), profile)
    return bits & ~above


def minimal(b: FecSet, profile: EditProfile) -> FecSet:
    return FecSet(minimal_bits(b.bits, profile), b.L)


def lowest_bit(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def loss_bits(bits: int, L: int) -> int:
    if not bits:
        return 0
    return L - lowest_bit(bits)


def loss(b: FecSet) -> int:
    """``L`` minus the lowest feasible index; 0 when nothing is reachable."""
    return loss_bits(b.bits, b.L)


def to_tuples(b: FecSet, profile: EditProfile) -> set[tuple[int, ...]]:
    out = set()
    bits = b.bits
    while bits:
        low = bits & -bits
        out.add(index_encode(profile, low.bit_length() - 1))
        bits ^= low
    return out


def from_tuples(tuples: Iterable[Iterable[int]], profile: EditProfile) -> FecSet:
    bits = 0
    for t in tuples:
        bits |= 1 << index_decode(profile, tuple(t))
    return FecSet(bits, profile.L)


def format_tuples(tuples: Iterable[tuple[int, ...]]) -> str:
    """``{(a,b,c),...}`` in sorted order."""
    return "{" + ",".join("(" + ",".join(map(str, t)) + ")" for t in sorted(tuples)) + "}"
