"""Brute-force error balls, independent of the engine."""
from itertools import product

ALPHABET = "ACGT"


def _subs(x):
    for i, c in enumerate(x):
        for d in ALPHABET:
            if d != c:
                yield x[:i] + d + x[i + 1:]


def _dels(x):
    for i in range(len(x)):
        yield x[:i] + x[i + 1:]


def _inss(x):
    for i in range(len(x) + 1):
        for d in ALPHABET:
            yield x[:i] + d + x[i:]


def error_ball(x, n_sub=0, n_ins=0, n_del=0):
    """Every word reachable with at most the given numbers of each error, in any order."""
    seen = {(x, 0, 0, 0)}
    frontier = [(x, 0, 0, 0)]
    while frontier:
        nxt = []
        for w, s, i, d in frontier:
            moves = []
            if s < n_sub:
                moves += [(v, s + 1, i, d) for v in _subs(w)]
            if i < n_ins:
                moves += [(v, s, i + 1, d) for v in _inss(w)]
            if d < n_del:
                moves += [(v, s, i, d + 1) for v in _dels(w)]
            for m in moves:
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    return {w for w, *_ in seen}


def words(alphabet, n):
    return ["".join(p) for p in product(alphabet, repeat=n)]
