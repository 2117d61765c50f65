"""Index design experiments.

* ``minimal_lm_lambda``: least weight on index B such that the convex
  combination (1 - lam) A + lam B is locally monotonic on a corpus.
* ``largest_player_spectrum``: the values the largest player's power takes
  over a corpus, to contrast indices with a gap between 1/2 and 1 against
  those that fill it.
* ``alon_edelman_search``: drop players outside a kept set I and find the
  simple game on I whose power vector is closest in L1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Iterable, Optional, Sequence, Union

from .enumeration import CorpusSpec, GameClass, corpus, enumerate_games
from .errors import CapExceededError, InvalidInputError
from .formats import decimal, fraction_str, game_to_dict
from .games import SimpleGame, desirability, _check_player
from .indices import PowerIndex, PowerVector, get_index
from .parallel import ordered_map

IndexLike = Union[str, PowerIndex]
GamesLike = Union[CorpusSpec, Iterable[CorpusSpec], Iterable[SimpleGame], Iterable[tuple[str, SimpleGame]]]

MAX_KEPT = 4
MAX_SPECTRUM_N = 5


def _games(source: GamesLike) -> list[tuple[str, SimpleGame]]:
    """Normalise the accepted corpus shapes to a list of (game_id, game)."""
    if isinstance(source, CorpusSpec):
        return list(corpus(source))
    out = []
    specs = []
    for k, item in enumerate(source):
        if isinstance(item, CorpusSpec):
            specs.append(item)
        elif isinstance(item, SimpleGame):
            out.append((f"game#{k}", item))
        else:
            out.append(item)
    return list(corpus(specs)) + out


# -- convex combinations -------------------------------------------------------------

@dataclass(frozen=True)
class ConvexCombinationSpec:
    base_a: str
    base_b: str
    lam: Fraction  # weight on base_b

    def __post_init__(self):
        lam = Fraction(self.lam)
        if not 0 <= lam <= 1:
            raise InvalidInputError(f"lambda must lie in [0, 1], got {lam}")
        object.__setattr__(self, "lam", lam)
        for base in (self.base_a, self.base_b):
            if not get_index(base).efficient:
                raise InvalidInputError(f"base index {base!r} is not efficient")


def combined_index(v: SimpleGame, spec: ConvexCombinationSpec) -> PowerVector:
    a = get_index(spec.base_a)(v)
    b = get_index(spec.base_b)(v)
    lam = spec.lam
    return tuple((1 - lam) * x + lam * y for x, y in zip(a, b))


def combination(base_a: str, base_b: str, lam) -> PowerIndex:
    """The convex combination as a PowerIndex, usable with the axiom checkers."""
    spec = ConvexCombinationSpec(base_a, base_b, lam)
    a, b = get_index(base_a), get_index(base_b)
    label = f"{a.id}+{b.id}@{fraction_str(spec.lam)}"
    return PowerIndex(
        label,
        f"(1-{spec.lam})*{a.name} + {spec.lam}*{b.name}",
        partial(combined_index, spec=spec),
        complete_only=a.complete_only or b.complete_only,
    )


@dataclass(frozen=True)
class PairConstraint:
    game_id: str
    game: SimpleGame
    i: int
    j: int
    bound: Optional[Fraction]  # None when no lambda in [0,1] can repair the pair

    def to_dict(self) -> dict:
        return {
            "game_id": self.game_id,
            "game": game_to_dict(self.game),
            "pair": [self.i, self.j],
            "bound": None if self.bound is None else fraction_str(self.bound),
        }


@dataclass
class LambdaResult:
    feasible: bool
    lambda_star: Optional[Fraction]
    witnesses: list[PairConstraint] = field(default_factory=list)
    games: int = 0
    violated_pairs: int = 0

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "lambda_star": None if self.lambda_star is None else fraction_str(self.lambda_star),
            "lambda_star_decimal": None if self.lambda_star is None else decimal(self.lambda_star),
            "games": self.games,
            "violated_pairs": self.violated_pairs,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def _pair_bounds(a: PowerIndex, b: PowerIndex, item: tuple[str, SimpleGame]) -> list[PairConstraint]:
    game_id, v = item
    if not (a.applicable(v) and b.applicable(v)):
        return []
    ga, gb = a(v), b(v)
    out = []
    for i, j in desirability(v).pairs():
        gap_a = ga[j - 1] - ga[i - 1]
        if gap_a <= 0:
            continue
        gap_b = gb[i - 1] - gb[j - 1]
        bound = gap_a / (gap_a + gap_b) if gap_b > 0 else None
        out.append(PairConstraint(game_id, v, i, j, bound))
    return out


def minimal_lm_lambda(source: GamesLike, base_a: IndexLike, base_b: IndexLike, workers: Optional[int] = None) -> LambdaResult:
    """Least lambda making (1 - lambda) A + lambda B locally monotonic on every game.

    Each pair i ⪰ j with A_i < A_j needs lambda >= dA / (dA + dB) where
    dA = A_j - A_i and dB = B_i - B_j; if dB <= 0 no lambda works. The
    answer is the maximum of these bounds (0 when nothing is violated), and
    the witnesses are the pairs attaining it.
    """
    a, b = get_index(base_a), get_index(base_b)
    items = _games(source)
    if not items:
        raise InvalidInputError("corpus is empty")
    constraints: list[PairConstraint] = []
    for chunk in ordered_map(partial(_pair_bounds, a, b), items, workers):
        constraints.extend(chunk)
    result = LambdaResult(True, Fraction(0), games=len(items), violated_pairs=len(constraints))
    blocked = [c for c in constraints if c.bound is None]
    if blocked:
        result.feasible = False
        result.lambda_star = None
        result.witnesses = blocked
        return result
    if constraints:
        best = max(c.bound for c in constraints)
        result.lambda_star = best
        result.witnesses = [c for c in constraints if c.bound == best]
    return result


# -- largest player spectrum ---------------------------------------------------------

@dataclass
class SpectrumReport:
    index_id: str
    games: int
    attained: list[Fraction]
    max_below_one: Optional[Fraction]
    in_gap: list[Fraction]  # attained maxima strictly between 1/2 and 1
    histogram: list[int]  # counts of games per tenth of (1/2, 1)
    examples: dict = field(default_factory=dict)  # value -> first game id attaining it

    def to_dict(self) -> dict:
        return {
            "index": self.index_id,
            "games": self.games,
            "spectrum": [fraction_str(x) for x in self.attained],
            "max_below_one": None if self.max_below_one is None else fraction_str(self.max_below_one),
            "in_open_interval_half_one": [fraction_str(x) for x in self.in_gap],
            "histogram_half_one": self.histogram,
            "first_game": {fraction_str(k): g for k, g in self.examples.items()},
        }


HISTOGRAM_BINS = 10


def _largest(idx: PowerIndex, item: tuple[str, SimpleGame]):
    game_id, v = item
    if not idx.applicable(v):
        return game_id, None
    return game_id, max(idx(v))


def largest_player_spectrum(index: IndexLike, source: GamesLike, workers: Optional[int] = None) -> SpectrumReport:
    """Collect max_i g_i(v) over a corpus of weighted or complete games.

    The largest player is whoever has the largest value, not the largest
    weight, so the report does not depend on a representation.
    """
    idx = get_index(index)
    if isinstance(source, CorpusSpec):
        source = [source]
    source = list(source)
    for s in source:
        if isinstance(s, CorpusSpec):
            if s.n > MAX_SPECTRUM_N:
                raise CapExceededError(f"spectrum corpora are capped at n <= {MAX_SPECTRUM_N}")
            if s.game_class is GameClass.SIMPLE:
                raise InvalidInputError("spectrum needs a weighted or complete corpus")
    items = _games(source)
    seen: dict[Fraction, str] = {}
    histogram = [0] * HISTOGRAM_BINS
    games = 0
    half = Fraction(1, 2)
    for game_id, m in ordered_map(partial(_largest, idx), items, workers):
        if m is None:
            continue
        games += 1
        seen.setdefault(m, game_id)
        if half < m < 1:
            histogram[min(HISTOGRAM_BINS - 1, int((m - half) * 2 * HISTOGRAM_BINS))] += 1
    attained = sorted(seen)
    below = [x for x in attained if x < 1]
    return SpectrumReport(
        idx.id,
        games,
        attained,
        max(below) if below else None,
        [x for x in attained if half < x < 1],
        histogram,
        {k: seen[k] for k in attained},
    )


# -- player dropping ------------------------------------------------------------------

@dataclass
class ApproximationResult:
    index_id: str
    kept: tuple[int, ...]
    best_game: SimpleGame  # on players 1..|I|, player k standing for kept[k-1]
    distance: Fraction
    epsilon: Fraction
    ratio: Optional[Fraction]
    status: str  # ratio | exact | undefined-ratio
    candidates: int

    def to_dict(self) -> dict:
        return {
            "index": self.index_id,
            "kept": list(self.kept),
            "best_game": game_to_dict(self.best_game),
            "distance": fraction_str(self.distance),
            "epsilon": fraction_str(self.epsilon),
            "ratio": None if self.ratio is None else fraction_str(self.ratio),
            "status": self.status,
            "candidates": self.candidates,
        }


def alon_edelman_search(v: SimpleGame, index: IndexLike, kept: Iterable[int]) -> ApproximationResult:
    """Closest simple game on the kept players, in L1 distance of power vectors.

    The distance is sum over kept i of |g_i(v) - g_i(w)| plus the power
    mass outside the kept set (epsilon). Every simple game on the kept set
    is tried; ties go to the first in canonical order.
    """
    idx = get_index(index)
    kept = tuple(sorted(set(kept)))
    if not kept:
        raise InvalidInputError("kept set must be nonempty")
    for p in kept:
        _check_player(v, p)
    if len(kept) > MAX_KEPT:
        raise CapExceededError(f"kept set is capped at {MAX_KEPT} players")
    g = idx(v)
    dropped = [p for p in v.players if p not in kept]
    epsilon = sum((abs(g[p - 1]) for p in dropped), Fraction(0))
    best = None
    candidates = 0
    for w in enumerate_games(CorpusSpec(GameClass.SIMPLE, len(kept))):
        if not idx.applicable(w):
            continue
        candidates += 1
        h = idx(w)
        d = epsilon + sum((abs(g[p - 1] - h[k]) for k, p in enumerate(kept)), Fraction(0))
        if best is None or d < best[0]:
            best = (d, w)
    distance, w = best
    if epsilon:
        ratio, status = distance / epsilon, "ratio"
    else:
        ratio, status = None, "exact" if distance == 0 else "undefined-ratio"
    return ApproximationResult(idx.id, kept, w, distance, epsilon, ratio, status, candidates)
