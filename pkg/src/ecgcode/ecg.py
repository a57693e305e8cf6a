"""Banded, incremental dynamic program over the edit computational graph.

Node ``(i, j)`` holds the FEC set for editing ``s1[:i]`` into ``s2[:j]``.
The band keeps nodes with ``|j - i| <= q`` and is swept in layers: layer
``k`` holds the nodes with ``max(i, j) == k``, stored at column
``q + (j - i)``.  Only layers ``k - 1`` and ``k`` are kept (two rolling rows
of ``2q + 1`` cells).

Edges into ``(i, j)`` depend on the characters at the target node: when
``s1[i] == s2[j]`` the only edge is the free diagonal one; otherwise the node
collects SUB from ``(i-1, j-1)``, DEL (of ``s1[i]``) from ``(i-1, j)`` and
INS (of ``s2[j]``) from ``(i, j-1)``.
"""
from __future__ import annotations

from typing import Optional

from .edit_model import ALPHABET, EditProfile, Kind
from .fec import FecSet, loss_bits, minimal_bits, shift_in, to_tuples


class AlphabetError(ValueError):
    pass


class IncrementalError(ValueError):
    """An ``extend`` call that does not continue where the state stopped."""


def check_alphabet(seq: str, where: str = "sequence"):
    bad = set(seq) - set(ALPHABET)
    if bad:
        raise AlphabetError(f"{where} contains characters outside {ALPHABET}: {''.join(sorted(bad))}")


class _Moves:
    """Per-character (mask, shift) tables pulled out of the profile once."""

    __slots__ = ("sub", "dele", "ins")

    def __init__(self, profile: EditProfile):
        self.sub = {(a, b): profile.moves(Kind.SUB, a, b) for a in ALPHABET for b in ALPHABET if a != b}
        self.dele = {a: profile.moves(Kind.DEL, a, None) for a in ALPHABET}
        self.ins = {b: profile.moves(Kind.INS, None, b) for b in ALPHABET}


_MOVES_CACHE: dict[EditProfile, _Moves] = {}


def _moves_for(profile: EditProfile) -> _Moves:
    moves = _MOVES_CACHE.get(profile)
    if moves is None:
        moves = _MOVES_CACHE[profile] = _Moves(profile)
    return moves


class EcgPairState:
    """Rolling two-row band for one ordered pair ``(s1, s2)``.

    ``consumed`` is the last finished layer; ``visits`` counts interior nodes
    (both prefixes non-empty) evaluated so far.
    """

    __slots__ = ("profile", "q", "rows", "cursor", "consumed", "visits", "_moves")

    def __init__(self, profile: EditProfile, band: Optional[int] = None):
        self.profile = profile
        self.q = profile.q if band is None else band
        if self.q < 0:
            raise ValueError("band half-width must be non-negative")
        width = 2 * self.q + 1
        self.rows = [[0] * width, [0] * width]
        self.cursor = 0
        self.rows[0][self.q] = 1
        self.consumed = 0
        self.visits = 0
        self._moves = _moves_for(profile)

    @property
    def shape(self) -> tuple[int, int]:
        return (2, 2 * self.q + 1)

    @property
    def band(self) -> list[list[int]]:
        return self.rows

    def copy(self) -> "EcgPairState":
        new = EcgPairState.__new__(EcgPairState)
        new.profile = self.profile
        new.q = self.q
        new.rows = [self.rows[0][:], self.rows[1][:]]
        new.cursor = self.cursor
        new.consumed = self.consumed
        new.visits = self.visits
        new._moves = self._moves
        return new

    def current(self) -> list[int]:
        return self.rows[self.cursor]

    def extend(self, s1: str, s2: str, i0: int, i1: int) -> "EcgPairState":
        """Advance through layers ``i0 + 1 .. i1`` (sequence positions ``i0 .. i1-1``)."""
        if i0 != self.consumed:
            raise IncrementalError(f"state has consumed {self.consumed} positions, extend starts at {i0}")
        if i1 <= i0:
            raise IncrementalError(f"empty extension [{i0}, {i1})")
        if len(s1) < i1 or len(s2) < i1:
            raise IncrementalError(f"sequences shorter than end index {i1}")
        check_alphabet(s1[i0:i1], "s1")
        check_alphabet(s2[i0:i1], "s2")
        q = self.q
        sub_t, del_t, ins_t = self._moves.sub, self._moves.dele, self._moves.ins
        rows, cursor = self.rows, self.cursor
        visits = 0
        for k in range(i0 + 1, i1 + 1):
            prev = rows[cursor]
            cursor ^= 1
            cur = rows[cursor]
            reach = k if k < q else q
            for c in range(reach + 1, q + 1):
                cur[q + c] = 0
                cur[q - c] = 0
            b = s2[k - 1]
            # upper arm: i = k - d, j = k, outermost first (DEL reads d + 1)
            for d in range(reach, 0, -1):
                c = q + d
                i = k - d
                if i == 0:
                    # (0, k): reachable only by inserting s2[:k]
                    cur[c] = shift_in(prev[c - 1], ins_t[b])
                    continue
                visits += 1
                a = s1[i - 1]
                if a == b:
                    cur[c] = prev[c]
                    continue
                acc = 0
                src = prev[c]
                if src:
                    acc = shift_in(src, sub_t[a, b])
                if d < q:
                    src = cur[c + 1]
                    if src:
                        acc |= shift_in(src, del_t[a])
                src = prev[c - 1]
                if src:
                    acc |= shift_in(src, ins_t[b])
                cur[c] = acc
            a = s1[k - 1]
            # lower arm: i = k, j = k + d, outermost first (INS reads d - 1)
            for d in range(-reach, 0):
                c = q + d
                j = k + d
                if j == 0:
                    cur[c] = shift_in(prev[c + 1], del_t[a])
                    continue
                visits += 1
                bb = s2[j - 1]
                if a == bb:
                    cur[c] = prev[c]
                    continue
                acc = 0
                src = prev[c]
                if src:
                    acc = shift_in(src, sub_t[a, bb])
                src = prev[c + 1]
                if src:
                    acc |= shift_in(src, del_t[a])
                if d > -q:
                    src = cur[c - 1]
                    if src:
                        acc |= shift_in(src, ins_t[bb])
                cur[c] = acc
            # diagonal node (k, k)
            visits += 1
            if a == b:
                cur[q] = prev[q]
            else:
                acc = shift_in(prev[q], sub_t[a, b]) if prev[q] else 0
                if q:
                    if cur[q + 1]:
                        acc |= shift_in(cur[q + 1], del_t[a])
                    if cur[q - 1]:
                        acc |= shift_in(cur[q - 1], ins_t[b])
                cur[q] = acc
        self.cursor = cursor
        self.consumed = i1
        self.visits += visits
        return self

    def feed(self, s1: str, s2: str) -> "EcgPairState":
        """Extend through every position both sequences now have."""
        end = min(len(s1), len(s2))
        if end > self.consumed:
            self.extend(s1, s2, self.consumed, end)
        return self

    def terminal_bits(self) -> int:
        return self.rows[self.cursor][self.q]

    def terminal(self) -> FecSet:
        return FecSet(self.terminal_bits(), self.profile.L)

    def terminal_fecs(self, reduced: bool = True) -> set[tuple[int, ...]]:
        """Count tuples at ``(n, n)``; only the minimal ones unless ``reduced=False``.

        A tuple dominated by another feasible tuple never changes whether a
        quota is met (nor the loss), so the reduced set is the useful answer.
        """
        bits = self.terminal_bits()
        if reduced:
            bits = minimal_bits(bits, self.profile)
        return to_tuples(FecSet(bits, self.profile.L), self.profile)

    def loss(self) -> int:
        return loss_bits(self.rows[self.cursor][self.q], self.profile.L)


def init_state(profile: EditProfile, band: Optional[int] = None) -> EcgPairState:
    return EcgPairState(profile, band)


def extend(state: EcgPairState, s1: str, s2: str, i0: int, i1: int) -> EcgPairState:
    return state.extend(s1, s2, i0, i1)


def _require_equal(s1: str, s2: str):
    if len(s1) != len(s2):
        raise ValueError(f"terminal queries need equal lengths, got {len(s1)} and {len(s2)}")


def run_pair(s1: str, s2: str, profile: EditProfile, band: Optional[int] = None) -> EcgPairState:
    _require_equal(s1, s2)
    state = EcgPairState(profile, band)
    if s1:
        state.extend(s1, s2, 0, len(s1))
    return state


def terminal_fecs(s1: str, s2: str, profile: EditProfile, band: Optional[int] = None,
                  reduced: bool = True) -> set[tuple[int, ...]]:
    return run_pair(s1, s2, profile, band).terminal_fecs(reduced)


def pair_loss(s1: str, s2: str, profile: EditProfile) -> int:
    return run_pair(s1, s2, profile).loss()


def expected_visits(n: int, q: int) -> int:
    """Interior nodes inside a half-width ``q`` band over ``n`` layers."""
    return sum(2 * min(q, k) + 1 for k in range(n))


def full_table(s1: str, s2: str, profile: EditProfile) -> list[list[int]]:
    """Unbanded ``(len(s1)+1) x (len(s2)+1)`` table under the same edge rules.

    Reference path for the banded engine; also handles unequal lengths.
    """
    check_alphabet(s1, "s1")
    check_alphabet(s2, "s2")
    mv = _moves_for(profile)
    n1, n2 = len(s1), len(s2)
    table = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    table[0][0] = 1
    for i in range(n1 + 1):
        for j in range(n2 + 1):
            if i == 0 and j == 0:
                continue
            a = s1[i - 1] if i else None
            b = s2[j - 1] if j else None
            if a is not None and a == b:
                table[i][j] = table[i - 1][j - 1]
                continue
            acc = 0
            if i and j:
                acc |= shift_in(table[i - 1][j - 1], mv.sub[a, b])
            if i:
                acc |= shift_in(table[i - 1][j], mv.dele[a])
            if j:
                acc |= shift_in(table[i][j - 1], mv.ins[b])
            table[i][j] = acc
    return table
