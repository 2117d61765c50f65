"""Brute-force reference implementations used only by the tests.

Everything here works on frozensets of players and only asks the game
whether a coalition wins, so it shares no code path with the package's
bit-table tricks or its counting engine.
"""

import itertools
import math
from fractions import Fraction


def subsets(players):
    players = list(players)
    for r in range(len(players) + 1):
        for combo in itertools.combinations(players, r):
            yield frozenset(combo)


def mask(S):
    return sum(1 << (p - 1) for p in S)


def wins(v, S):
    return v.wins(mask(S))


def winning_sets(v):
    return [S for S in subsets(range(1, v.n + 1)) if wins(v, S)]


def mwc_sets(v):
    return [S for S in winning_sets(v) if all(not wins(v, S - {i}) for i in S)]


def mlc_sets(v):
    N = frozenset(range(1, v.n + 1))
    return [S for S in subsets(N) if not wins(v, S) and all(wins(v, S | {i}) for i in N - S)]


def swing_counts(v):
    counts = [0] * v.n
    for S in winning_sets(v):
        for i in S:
            if not wins(v, S - {i}):
                counts[i - 1] += 1
    return counts


def normalize(xs):
    total = sum(xs)
    return tuple(Fraction(x) / total for x in xs)


def pgi(v):
    counts = [0] * v.n
    for S in mwc_sets(v):
        for i in S:
            counts[i - 1] += 1
    return normalize(counts)


def deegan_packel(v):
    mwc = mwc_sets(v)
    return tuple(sum((Fraction(1, len(S)) for S in mwc if i in S), Fraction(0)) / len(mwc) for i in range(1, v.n + 1))


def banzhaf(v):
    return normalize(swing_counts(v))


def banzhaf_raw(v):
    return tuple(Fraction(c, 2 ** (v.n - 1)) for c in swing_counts(v))


def johnston(v):
    shares = [Fraction(0)] * v.n
    for S in winning_sets(v):
        crit = [i for i in S if not wins(v, S - {i})]
        for i in crit:
            shares[i - 1] += Fraction(1, len(crit))
    return normalize(shares)


def koenig_braeuninger(v):
    counts = [0] * v.n
    for S in winning_sets(v):
        for i in S:
            counts[i - 1] += 1
    return normalize(counts)


def kb_equal_division(v):
    shares = [Fraction(0)] * v.n
    for S in winning_sets(v):
        for i in S:
            shares[i - 1] += Fraction(1, len(S))
    return normalize(shares)


def pivot_ssi(v):
    """Credit the pivotal player of each of the n! orderings."""
    credit = [0] * v.n
    for order in itertools.permutations(range(1, v.n + 1)):
        S = set()
        for p in order:
            S.add(p)
            if wins(v, S):
                credit[p - 1] += 1
                break
    total = math.factorial(v.n)
    return tuple(Fraction(c, total) for c in credit)


def weakly_desirable(v, i, j):
    rest = [p for p in range(1, v.n + 1) if p not in (i, j)]
    return all(wins(v, S | {i}) >= wins(v, S | {j}) for S in subsets(rest))


def is_null(v, i):
    return all(wins(v, S) == wins(v, S | {i}) for S in subsets(range(1, v.n + 1)))


def shift_minimal(v):
    N = frozenset(range(1, v.n + 1))
    out = []
    for S in mwc_sets(v):
        ok = True
        for i in S:
            for j in N - S:
                strict = weakly_desirable(v, i, j) and not weakly_desirable(v, j, i)
                if strict and wins(v, (S - {i}) | {j}):
                    ok = False
        if ok:
            out.append(S)
    return out


def shift_index(v):
    counts = [0] * v.n
    for S in shift_minimal(v):
        for i in S:
            counts[i - 1] += 1
    return normalize(counts)


def shift_deegan_packel(v):
    shares = [Fraction(0)] * v.n
    for S in shift_minimal(v):
        for i in S:
            shares[i - 1] += Fraction(1, len(S))
    return normalize(shares)


def monotone_function_count(n):
    """Count all monotone Boolean functions on n variables by scanning every table."""
    size = 1 << n
    total = 0
    for table in range(1 << size):
        ok = True
        for S in range(size):
            if (table >> S) & 1:
                for i in range(n):
                    if not (table >> (S | (1 << i))) & 1:
                        ok = False
                        break
            if not ok:
                break
        total += ok
    return total


def sorted_excesses(v, x):
    """Non-increasing excess vector over proper nonempty coalitions."""
    n = v.n
    out = []
    for S in range(1, (1 << n) - 1):
        xs = sum((x[k] for k in range(n) if (S >> k) & 1), Fraction(0))
        out.append(int(v.wins(S)) - xs)
    out.sort(reverse=True)
    return tuple(out)


def has_two_trade(v):
    """Two winning coalitions whose members can be swapped into two losing ones.

    The existence of such a trade certifies that no weights exist.
    """
    win = winning_sets(v)
    lose = [S for S in subsets(range(1, v.n + 1)) if not wins(v, S)]
    for a, b in itertools.combinations_with_replacement(win, 2):
        multiset = sorted(list(a) + list(b))
        for c, d in itertools.combinations_with_replacement(lose, 2):
            if sorted(list(c) + list(d)) == multiset:
                return True
    return False
