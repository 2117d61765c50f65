"""Nucleolus of a simple game by the sequential LP scheme.

Excesses ``e(S, x) = v(S) - x(S)`` run over every proper nonempty coalition
and ``x`` over the nonnegative allocations summing to 1. Each stage
minimises the largest free excess ``t``; a coalition is then frozen at
level ``t*`` iff no optimal allocation gives it a smaller excess, which is
decided by re-solving with ``x(S)`` maximised. Coalitions whose indicator
lies in the span of the frozen ones have constant excess from then on and
are dropped. The allocation is unique once that span has full rank.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import CapExceededError
from .games import SimpleGame
from .lp import linprog

NUCLEOLUS_MAX_PLAYERS = 12


class _Span:
    """Incrementally row-reduced set of rational vectors."""

    def __init__(self):
        self.rows: list[tuple[int, list[Fraction]]] = []

    def _reduce(self, vec):
        vec = [Fraction(a) for a in vec]
        for piv, row in self.rows:
            f = vec[piv]
            if f:
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> None:
        vec = self._reduce(vec)
        piv = next((k for k, a in enumerate(vec) if a), None)
        if piv is None:
            return
        p = vec[piv]
        vec = [a / p for a in vec]
        new_rows = []
        for q, row in self.rows:
            f = row[piv]
            if f:
                row = [a - f * b for a, b in zip(row, vec)]
            new_rows.append((q, row))
        new_rows.append((piv, vec))
        self.rows = new_rows

    @property
    def rank(self) -> int:
        return len(self.rows)


def _indicator(S: int, n: int) -> list[int]:
    return [(S >> k) & 1 for k in range(n)]


@lru_cache(maxsize=65536)
def nucleolus(v: SimpleGame) -> tuple[Fraction, ...]:
    n = v.n
    if n > NUCLEOLUS_MAX_PLAYERS:
        raise CapExceededError(f"nucleolus is capped at n <= {NUCLEOLUS_MAX_PLAYERS}, got n={n}")
    if n == 1:
        return (Fraction(1),)

    value = {S: int(v.wins(S)) for S in range(1, v.grand)}
    free = list(value)
    fixed: list[tuple[int, Fraction]] = []
    span = _Span()
    span.add([1] * n)

    while True:
        eq_rows = [[1] * n]
        eq_rhs = [Fraction(1)]
        for S, level in fixed:
            eq_rows.append(_indicator(S, n))
            eq_rhs.append(value[S] - level)

        stage = linprog(
            [0] * n + [1],
            [[-a for a in _indicator(S, n)] + [-1] for S in free],
            [-value[S] for S in free],
            [row + [0] for row in eq_rows],
            eq_rhs,
            free=[n],
        )
        if not stage.ok:
            raise RuntimeError(f"nucleolus stage LP ended {stage.status}")
        t = stage.x[n]
        x = stage.x[:n]

        def coalition_sum(S, x=x):
            return sum((x[k] for k in range(n) if (S >> k) & 1), Fraction(0))

        tight = [S for S in free if value[S] - coalition_sum(S) == t]
        ub_rows = [[-a for a in _indicator(S, n)] for S in free]
        ub_rhs = [t - value[S] for S in free]
        settled = []
        for S in tight:
            probe = linprog([-a for a in _indicator(S, n)], ub_rows, ub_rhs, eq_rows, eq_rhs)
            if -probe.objective == value[S] - t:
                settled.append(S)
        if not settled:
            raise RuntimeError("nucleolus stage fixed no coalition")

        for S in settled:
            fixed.append((S, t))
            span.add(_indicator(S, n))
        settled_set = set(settled)
        free = [S for S in free if S not in settled_set and not span.contains(_indicator(S, n))]
        if span.rank == n or not free:
            return tuple(x)
