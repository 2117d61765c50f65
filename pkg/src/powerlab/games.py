"""Simple games stored as winning bit-tables.

A coalition is an ``int`` bitmask with player 1 at bit 0. A game on ``n``
players keeps its characteristic function in a single ``int`` of ``2**n``
bits: bit ``S`` is set iff coalition ``S`` wins. Most structural queries
reduce to a few shifts and masks over that table.

Players are 1-indexed in every public function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import CapExceededError, InvalidGameError
from .lp import linprog

MAX_PLAYERS = 24

Coalition = int
CoalitionLike = Union[int, Iterable[int]]


def coalition(*players: int) -> Coalition:
    mask = 0
    for p in players:
        if p < 1:
            raise InvalidGameError(f"player {p} out of range (players are 1-indexed)")
        mask |= 1 << (p - 1)
    return mask


def members(mask: Coalition) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def coalition_key(mask: Coalition) -> tuple[int, int]:
    """Canonical sort key: cardinality first, then mask value."""
    return (mask.bit_count(), mask)


def canonical_order(coalitions: Iterable[Coalition]) -> list[Coalition]:
    return sorted(coalitions, key=coalition_key)


def format_coalition(mask: Coalition) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def as_coalition(c: CoalitionLike, n: int) -> Coalition:
    """Accept a bitmask or an iterable of 1-indexed players."""
    if isinstance(c, bool):
        raise InvalidGameError(f"not a coalition: {c!r}")
    if isinstance(c, int):
        mask = c
    else:
        mask = 0
        for p in c:
            if isinstance(p, bool) or not isinstance(p, int) or not 1 <= p <= n:
                raise InvalidGameError(f"player {p!r} out of range 1..{n}")
            mask |= 1 << (p - 1)
    if mask < 0 or mask >> n:
        raise InvalidGameError(f"coalition mask {mask} out of range for n={n}")
    return mask


# -- bit-table helpers -------------------------------------------------------

def _full(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def _without(n: int, i: int) -> int:
    """Table positions of the coalitions not containing 0-based player ``i``."""
    half = 1 << i
    period = half << 1
    reps = (1 << n) // period
    block = (1 << half) - 1
    return block * ((1 << (period * reps)) - 1) // ((1 << period) - 1)


def _upset(n: int, mask: Coalition) -> int:
    t = 1 << mask
    for i in range(n):
        if not (mask >> i) & 1:
            t |= t << (1 << i)
    return t


def _positions(table: int) -> list[int]:
    s = bin(table)[:1:-1]
    return [i for i, ch in enumerate(s) if ch == "1"]


def _table_from_positions(positions: Iterable[int], n: int) -> int:
    buf = bytearray(max(1, (1 << n) // 8))
    for p in positions:
        buf[p >> 3] |= 1 << (p & 7)
    return int.from_bytes(buf, "little")


def _swap_players(table: int, n: int, a: int, b: int) -> int:
    """Exchange the roles of 0-based players a < b in a table (delta swap)."""
    sel = (_full(n) & ~_without(n, a)) & _without(n, b)
    d = (1 << b) - (1 << a)
    y = ((table >> d) ^ table) & sel
    return table ^ y ^ (y << d)


def _check_table(n: int, table: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidGameError(f"player count must be a positive integer, got {n!r}")
    if n > MAX_PLAYERS:
        raise CapExceededError(f"n={n} exceeds the {MAX_PLAYERS}-player table cap")
    if table < 0 or table > _full(n):
        raise InvalidGameError("winning table has bits outside 2**n coalitions")
    if table & 1:
        raise InvalidGameError("the empty coalition must lose")
    if not (table >> ((1 << n) - 1)) & 1:
        raise InvalidGameError("the grand coalition must win")
    for i in range(n):
        lifted = (table & _without(n, i)) << (1 << i)
        if lifted & ~table:
            raise InvalidGameError(f"winning table is not monotone in player {i + 1}")


@dataclass(frozen=True)
class SimpleGame:
    """A monotone yes/no game, validated on construction and immutable after."""

    n: int
    table: int

    def __post_init__(self):
        _check_table(self.n, self.table)

    @property
    def grand(self) -> Coalition:
        return (1 << self.n) - 1

    @property
    def players(self) -> range:
        return range(1, self.n + 1)

    def wins(self, S: Coalition) -> bool:
        return bool((self.table >> S) & 1)

    def __call__(self, S: CoalitionLike) -> int:
        return int(self.wins(as_coalition(S, self.n)))

    def winning(self) -> list[Coalition]:
        return canonical_order(_positions(self.table))

    def losing(self) -> list[Coalition]:
        return canonical_order(_positions(_full(self.n) & ~self.table))

    def __repr__(self) -> str:
        mwc = ", ".join(format_coalition(S) for S in minimal_winning(self))
        return f"SimpleGame(n={self.n}, mwc=[{mwc}])"


@dataclass(frozen=True)
class WeightedRepresentation:
    """Quota and nonnegative weights, stored as exact rationals."""

    quota: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        try:
            quota = Fraction(self.quota)
            weights = tuple(Fraction(w) for w in self.weights)
        except (TypeError, ValueError) as exc:
            raise InvalidGameError(f"weights and quota must be rational: {exc}") from None
        if not weights:
            raise InvalidGameError("a weighted game needs at least one player")
        if any(w < 0 for w in weights):
            raise InvalidGameError("weights must be nonnegative")
        if quota <= 0:
            raise InvalidGameError("quota must be positive")
        if quota > sum(weights):
            raise InvalidGameError("quota exceeds the total weight; the grand coalition would lose")
        object.__setattr__(self, "quota", quota)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return f"[{self.quota}; " + ", ".join(map(str, self.weights)) + "]"


# -- construction -------------------------------------------------------------

def from_weighted(rep: WeightedRepresentation) -> SimpleGame:
    n = rep.n
    if n > MAX_PLAYERS:
        raise CapExceededError(f"n={n} exceeds the {MAX_PLAYERS}-player table cap")
    sums = [Fraction(0)] * (1 << n)
    win = []
    for S in range(1, 1 << n):
        low = S & -S
        sums[S] = sums[S ^ low] + rep.weights[low.bit_length() - 1]
        if sums[S] >= rep.quota:
            win.append(S)
    return SimpleGame(n, _table_from_positions(win, n))


def weighted_game(quota, *weights) -> SimpleGame:
    """Shorthand: ``weighted_game(51, 47, 36, 17)`` is [51; 47,36,17]."""
    return from_weighted(WeightedRepresentation(quota, weights))


def from_minimal_winning(n: int, mwc: Sequence[CoalitionLike]) -> SimpleGame:
    """Build the game whose winning coalitions are the supersets of ``mwc``.

    The list must be a nonempty antichain of nonempty coalitions; anything
    else is rejected rather than silently simplified.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidGameError(f"player count must be a positive integer, got {n!r}")
    if n > MAX_PLAYERS:
        raise CapExceededError(f"n={n} exceeds the {MAX_PLAYERS}-player table cap")
    masks = [as_coalition(c, n) for c in mwc]
    if not masks:
        raise InvalidGameError("minimal winning list is empty")
    if 0 in masks:
        raise InvalidGameError("the empty coalition cannot be minimal winning")
    table = 0
    for m in masks:
        table |= _upset(n, m)
    game = SimpleGame(n, table)
    if sorted(masks) != sorted(minimal_winning(game)):
        raise InvalidGameError("minimal winning list is not an antichain")
    return game


# -- coalition families ----------------------------------------------------------

@lru_cache(maxsize=65536)
def _mwc(v: SimpleGame) -> tuple[Coalition, ...]:
    n, t = v.n, v.table
    non_minimal = 0
    for i in range(n):
        non_minimal |= (t & _without(n, i)) << (1 << i)
    return tuple(canonical_order(_positions(t & ~non_minimal)))


def minimal_winning(v: SimpleGame) -> list[Coalition]:
    return list(_mwc(v))


def maximal_losing(v: SimpleGame) -> list[Coalition]:
    n = v.n
    losing = _full(n) & ~v.table
    non_maximal = 0
    for i in range(n):
        non_maximal |= (losing >> (1 << i)) & _without(n, i)
    return canonical_order(_positions(losing & ~non_maximal))


def veto_players(v: SimpleGame) -> tuple[int, ...]:
    """Players contained in every winning coalition."""
    common = v.grand
    for S in _mwc(v):
        common &= S
    return members(common)


def critical_players(v: SimpleGame, U: CoalitionLike) -> list[int]:
    U = as_coalition(U, v.n)
    if not v.wins(U):
        raise InvalidGameError(f"coalition {format_coalition(U)} is losing")
    return [i for i in members(U) if not v.wins(U & ~(1 << (i - 1)))]


def _check_player(v: SimpleGame, i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= v.n:
        raise InvalidGameError(f"player {i!r} out of range 1..{v.n}")
    return i - 1


def is_null_player(v: SimpleGame, i: int) -> bool:
    a = _check_player(v, i)
    lacking = v.table & _without(v.n, a)
    return (lacking << (1 << a)) == v.table & ~_without(v.n, a)


def _weakly_prefers(v: SimpleGame, a: int, b: int) -> bool:
    if a == b:
        return True
    n, t = v.n, v.table
    rest = _without(n, a) & _without(n, b)
    with_a = (t >> (1 << a)) & rest
    with_b = (t >> (1 << b)) & rest
    return not (with_b & ~with_a)


def are_equivalent(v: SimpleGame, i: int, j: int) -> bool:
    a, b = _check_player(v, i), _check_player(v, j)
    return _weakly_prefers(v, a, b) and _weakly_prefers(v, b, a)


# -- desirability --------------------------------------------------------------------

class Relation(enum.Enum):
    EQUIVALENT = "~"
    STRONGER = ">"
    WEAKER = "<"
    INCOMPARABLE = "|"


@dataclass(frozen=True)
class DesirabilityRelation:
    """The desirability preorder; ``geq[i-1]`` has bit ``j-1`` set iff i ⪰ j."""

    n: int
    geq: tuple[int, ...]

    def weakly(self, i: int, j: int) -> bool:
        return bool((self.geq[i - 1] >> (j - 1)) & 1)

    def strictly(self, i: int, j: int) -> bool:
        return self.weakly(i, j) and not self.weakly(j, i)

    def equivalent(self, i: int, j: int) -> bool:
        return self.weakly(i, j) and self.weakly(j, i)

    def comparable(self, i: int, j: int) -> bool:
        return self.weakly(i, j) or self.weakly(j, i)

    def relation(self, i: int, j: int) -> Relation:
        ij, ji = self.weakly(i, j), self.weakly(j, i)
        if ij and ji:
            return Relation.EQUIVALENT
        if ij:
            return Relation.STRONGER
        if ji:
            return Relation.WEAKER
        return Relation.INCOMPARABLE

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Ordered pairs (i, j), i != j, with i ⪰ j, in lexicographic order."""
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i != j and self.weakly(i, j):
                    yield i, j

    def is_total(self) -> bool:
        return all(self.comparable(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1))

    def matrix(self) -> list[list[str]]:
        return [[self.relation(i, j).value for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


@lru_cache(maxsize=65536)
def desirability(v: SimpleGame) -> DesirabilityRelation:
    geq = []
    for a in range(v.n):
        row = 0
        for b in range(v.n):
            if _weakly_prefers(v, a, b):
                row |= 1 << b
        geq.append(row)
    return DesirabilityRelation(v.n, tuple(geq))


def is_complete(v: SimpleGame) -> bool:
    return desirability(v).is_total()


def shift_minimal_winning(v: SimpleGame) -> list[Coalition]:
    """Minimal winning coalitions that no one-step shift can keep winning.

    A shift replaces a member i by an outsider j with i ≻ j (strictly more
    desirable). Only defined for complete games.
    """
    rel = desirability(v)
    if not rel.is_total():
        raise InvalidGameError("shift-minimal winning coalitions require a complete game")
    out = []
    for S in _mwc(v):
        inside = members(S)
        outside = [j for j in v.players if not (S >> (j - 1)) & 1]
        if all(
            not v.wins((S & ~(1 << (i - 1))) | (1 << (j - 1)))
            for i in inside
            for j in outside
            if rel.strictly(i, j)
        ):
            out.append(S)
    return out


# -- weightedness ------------------------------------------------------------------

@lru_cache(maxsize=65536)
def is_weighted(v: SimpleGame) -> Optional[WeightedRepresentation]:
    """Return an integer representation of ``v``, or None if none exists.

    Solves w(S) >= q on minimal winning, w(T) <= q - 1 on maximal losing,
    w >= 0, q >= 1 exactly; the unit gap is harmless because representations
    scale. Minimising the total weight gives small witnesses.
    """
    n = v.n
    rows, rhs = [], []
    for S in _mwc(v):
        rows.append([-((S >> k) & 1) for k in range(n)] + [1])
        rhs.append(0)
    for T in maximal_losing(v):
        rows.append([(T >> k) & 1 for k in range(n)] + [-1])
        rhs.append(-1)
    rows.append([0] * n + [-1])
    rhs.append(-1)
    res = linprog([1] * n + [0], rows, rhs)
    if not res.ok:
        return None
    scale = lcm(*(x.denominator for x in res.x))
    ints = [x * scale for x in res.x]
    rep = WeightedRepresentation(ints[-1], ints[:-1])
    if from_weighted(rep) != v:
        raise AssertionError(f"LP witness {rep} does not reproduce the game")
    return rep


# -- relabelling and subgames ----------------------------------------------------------

def relabel(v: SimpleGame, perm: Sequence[int]) -> SimpleGame:
    """The game in which old player i is called ``perm[i-1]``.

    Coalition S of ``v`` wins iff its image under the relabelling wins in
    the result, so every index that treats players alike satisfies
    ``g(relabel(v, perm))[perm[i-1]-1] == g(v)[i-1]``.
    """
    n = v.n
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidGameError(f"{list(perm)!r} is not a permutation of 1..{n}")
    return SimpleGame(n, _relabel_table(v.table, n, tuple(p - 1 for p in perm)))


def _relabel_table(table: int, n: int, target: Sequence[int]) -> int:
    # target[i] = new 0-based position of old player i
    pos = list(range(n))  # pos[old player] = current position
    at = list(range(n))  # at[position] = old player sitting there
    want = [0] * n
    for old, new in enumerate(target):
        want[new] = old
    for p in range(n):
        x = want[p]
        q = pos[x]
        if q != p:
            a, b = min(p, q), max(p, q)
            table = _swap_players(table, n, a, b)
            y = at[p]
            at[p], at[q] = x, y
            pos[x], pos[y] = p, q
    return table


def subgame(v: SimpleGame, players: Iterable[int]) -> SimpleGame:
    """Restriction of ``v`` to ``players``, renumbered 1..k in increasing order."""
    keep = sorted(set(players))
    for p in keep:
        _check_player(v, p)
    k = len(keep)
    win = []
    for S in range(1 << k):
        full_mask = 0
        for bit, p in enumerate(keep):
            if (S >> bit) & 1:
                full_mask |= 1 << (p - 1)
        if v.wins(full_mask):
            win.append(S)
    return SimpleGame(k, _table_from_positions(win, k))
