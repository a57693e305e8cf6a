"""Slow reference implementations used only to check the engine."""
from __future__ import annotations

from .edit_model import EditProfile, Kind, matching_edits

MAX_ORACLE_LEN = 8


def pareto_minimal(tuples) -> set[tuple[int, ...]]:
    """Tuples not dominated coordinate-wise by a different tuple of the set."""
    tuples = set(tuples)
    return {t for t in tuples
            if not any(u != t and all(x <= y for x, y in zip(u, t)) for u in tuples)}


def brute_force_fecs(s1: str, s2: str, profile: EditProfile,
                     reduced: bool = True) -> set[tuple[int, ...]]:
    """Enumerate every edit path from ``s1`` to ``s2`` and collect its counts.

    Works backwards from ``(len(s1), len(s2))``: a position pair whose last
    characters agree is only entered by the free match step; otherwise the
    path arrived by deleting ``s1[i]``, inserting ``s2[j]`` or substituting
    one for the other, and each choice of edit op charged is its own branch.
    Paths whose counts exceed a quota are dropped.  With ``reduced`` only
    the minimal tuples are returned.
    """
    if len(s1) > MAX_ORACLE_LEN or len(s2) > MAX_ORACLE_LEN:
        raise ValueError(f"oracle refuses inputs longer than {MAX_ORACLE_LEN}")
    eq = profile.eq
    found: set[tuple[int, ...]] = set()

    def charge(counts, indices):
        for idx in sorted(indices):
            if counts[idx] < eq[idx]:
                yield counts[:idx] + (counts[idx] + 1,) + counts[idx + 1:]

    def walk(i, j, counts):
        if i == 0 and j == 0:
            found.add(counts)
            return
        a = s1[i - 1] if i else None
        b = s2[j - 1] if j else None
        if a is not None and a == b:
            walk(i - 1, j - 1, counts)
            return
        if i:
            for nxt in charge(counts, matching_edits(profile, Kind.DEL, a, None)):
                walk(i - 1, j, nxt)
        if j:
            for nxt in charge(counts, matching_edits(profile, Kind.INS, None, b)):
                walk(i, j - 1, nxt)
        if i and j:
            for nxt in charge(counts, matching_edits(profile, Kind.SUB, a, b)):
                walk(i - 1, j - 1, nxt)

    walk(len(s1), len(s2), (0,) * profile.K)
    return pareto_minimal(found) if reduced else found


def levenshtein(s1: str, s2: str) -> int:
    prev = list(range(len(s2) + 1))
    for i, a in enumerate(s1, 1):
        cur = [i]
        for j, b in enumerate(s2, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a != b)))
        prev = cur
    return prev[-1]


def hamming(s1: str, s2: str) -> int:
    if len(s1) != len(s2):
        raise ValueError("hamming distance needs equal lengths")
    return sum(a != b for a, b in zip(s1, s2))
