"""Exhaustive corpora of simple, complete and weighted games.

Simple games on n players correspond one-to-one with nonempty antichains of
nonempty coalitions (their minimal winning coalitions). The generator walks
those antichains depth-first over coalitions sorted by (size, mask); a
candidate is admissible iff it is not already winning, because every
earlier coalition has size at most its own and so cannot be a superset.
Pre-order emission makes the stream lexicographic in the sorted
minimal-winning list, which is the canonical corpus order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, InvalidInputError
from .games import (
    SimpleGame,
    _relabel_table,
    _upset,
    _weakly_prefers,
    coalition_key,
    is_complete,
    is_weighted,
    minimal_winning,
)


class GameClass(str, enum.Enum):
    SIMPLE = "simple"
    COMPLETE = "complete"
    WEIGHTED = "weighted"


# simple/complete enumeration walks every monotone function; weighted n=6
# goes through ordered complete games instead (see _ordered_complete_tables)
MAX_N = {GameClass.SIMPLE: 5, GameClass.COMPLETE: 5, GameClass.WEIGHTED: 6}


@dataclass(frozen=True)
class CorpusSpec:
    game_class: GameClass
    n: int
    dedup: bool = False  # True: one representative per player-relabelling orbit

    def __post_init__(self):
        try:
            cls = GameClass(self.game_class)
        except ValueError:
            raise InvalidInputError(f"unknown game class {self.game_class!r}") from None
        object.__setattr__(self, "game_class", cls)
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidInputError(f"corpus player count must be a positive integer, got {self.n!r}")
        if self.n > MAX_N[cls]:
            raise CapExceededError(f"{cls.value} corpus capped at n <= {MAX_N[cls]}, got n={self.n}")

    @property
    def label(self) -> str:
        return f"{self.game_class.value}:{self.n}" + ("/dedup" if self.dedup else "")


def _ordered_coalitions(n: int) -> list[int]:
    return sorted(range(1, 1 << n), key=coalition_key)


def _antichain_tables(order: Sequence[int], ups: Sequence[int]) -> Iterator[int]:
    """Winning tables of all nonempty antichains, depth-first in ``order``."""
    m = len(order)
    # explicit stack of (next candidate index, table); pre-order emission
    stack = [(0, 0)]
    while stack:
        k, table = stack.pop()
        while k < m:
            S = order[k]
            k += 1
            if (table >> S) & 1:
                continue
            new = table | ups[k - 1]
            yield new
            stack.append((k, table))
            stack.append((k, new))
            break


def simple_tables(n: int) -> Iterator[int]:
    order = _ordered_coalitions(n)
    return _antichain_tables(order, [_upset(n, S) for S in order])


def _orbit(table: int, n: int) -> set[int]:
    return {_relabel_table(table, n, p) for p in itertools.permutations(range(n))}


def _is_orbit_min(table: int, n: int) -> bool:
    return all(_relabel_table(table, n, p) >= table for p in itertools.permutations(range(n)))


def _game_key(g: SimpleGame) -> tuple:
    return tuple(coalition_key(S) for S in minimal_winning(g))


def enumerate_games(spec: CorpusSpec) -> Iterator[SimpleGame]:
    """Stream every game of the class exactly once, in canonical order.

    With ``dedup`` the representative of each relabelling orbit is the
    member with the smallest winning table.
    """
    n = spec.n
    if spec.game_class is GameClass.WEIGHTED and n > MAX_N[GameClass.COMPLETE]:
        yield from _weighted_via_ordered(n, spec.dedup)
        return
    for table in simple_tables(n):
        if spec.dedup and not _is_orbit_min(table, n):
            continue
        g = SimpleGame(n, table)
        if spec.game_class is GameClass.SIMPLE:
            yield g
        elif is_complete(g) and (spec.game_class is GameClass.COMPLETE or is_weighted(g) is not None):
            yield g


def count(spec: CorpusSpec) -> int:
    if spec.game_class is GameClass.SIMPLE and not spec.dedup:
        return sum(1 for _ in simple_tables(spec.n))
    return sum(1 for _ in enumerate_games(spec))


def corpus(specs: CorpusSpec | Iterable[CorpusSpec]) -> Iterator[tuple[str, SimpleGame]]:
    """Yield ``(game_id, game)`` over one or several corpora, ids like ``simple:4#17``."""
    if isinstance(specs, CorpusSpec):
        specs = [specs]
    for spec in specs:
        for k, g in enumerate(enumerate_games(spec)):
            yield f"{spec.label}#{k}", g


def parse_corpus(text: str, dedup: bool = False) -> list[CorpusSpec]:
    """``"complete:3"`` -> one spec; ``"complete:1-3"`` -> n = 1, 2, 3."""
    try:
        cls, _, sizes = text.partition(":")
        lo, _, hi = sizes.partition("-")
        lo_n = int(lo)
        hi_n = int(hi) if hi else lo_n
    except ValueError:
        raise InvalidInputError(f"corpus must look like class:n or class:a-b, got {text!r}") from None
    if hi_n < lo_n:
        raise InvalidInputError(f"empty player range in corpus {text!r}")
    return [CorpusSpec(cls, k, dedup) for k in range(lo_n, hi_n + 1)]


# -- ordered complete games (route for weighted n = 6) ---------------------------

def _shift_order(n: int) -> list[int]:
    # adding a player raises the size; swapping a member for a lower-numbered
    # (more desirable) outsider lowers the index sum, so this is a linear extension
    def key(S):
        return (S.bit_count(), -sum(i for i in range(n) if (S >> i) & 1), S)
    return sorted(range(1, 1 << n), key=key)


def _shift_upsets(n: int, order: Sequence[int]) -> list[int]:
    up: dict[int, int] = {}
    for S in reversed(order):
        t = 1 << S
        for i in range(n):
            if not (S >> i) & 1:
                t |= up[S | (1 << i)]
                continue
            for k in range(i):
                if not (S >> k) & 1:
                    t |= up[(S & ~(1 << i)) | (1 << k)]
        up[S] = t
    return [up[S] for S in order]


def ordered_complete_tables(n: int) -> Iterator[int]:
    """Complete games in which player 1 ⪰ 2 ⪰ ... ⪰ n, one per isomorphism class."""
    order = _shift_order(n)
    return _antichain_tables(order, _shift_upsets(n, order))


def _weighted_via_ordered(n: int, dedup: bool) -> Iterator[SimpleGame]:
    found: set[int] = set()
    for table in ordered_complete_tables(n):
        g = SimpleGame(n, table)
        if is_weighted(g) is None:
            continue
        orbit = _orbit(table, n)
        if dedup:
            found.add(min(orbit))
        else:
            found.update(orbit)
    games = [SimpleGame(n, t) for t in found]
    games.sort(key=_game_key)
    yield from games


def is_ordered(g: SimpleGame) -> bool:
    """True iff player i ⪰ player i+1 for every i."""
    return all(_weakly_prefers(g, a, a + 1) for a in range(g.n - 1))


__all__ = [
    "GameClass",
    "CorpusSpec",
    "enumerate_games",
    "count",
    "corpus",
    "parse_corpus",
    "simple_tables",
    "ordered_complete_tables",
    "is_ordered",
]
