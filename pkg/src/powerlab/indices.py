"""Power indices built from one coalition-counting engine.

Every index here except the nucleolus is ``count_index`` with a choice of

* coalition type: winning, critical (a winning coalition credits only its
  critical members), minimal winning, shift-minimal winning;
* transform: each coalition credits one unit to every credited member
  (raw), splits one unit among them (equal division), or credits a weight
  depending only on the coalition's size (cardinality weighted);
* optional normalization to sum 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Optional

from .errors import InvalidGameError, InvalidInputError
from .games import SimpleGame, _mwc, _positions, _without, is_complete, shift_minimal_winning
from .nucleolus import nucleolus

PowerVector = tuple[Fraction, ...]


class Selector(str, enum.Enum):
    WINNING = "winning"
    CRITICAL = "critical-per-player"
    MINIMAL_WINNING = "minimal-winning"
    SHIFT_MINIMAL_WINNING = "shift-minimal-winning"


class Transform(str, enum.Enum):
    RAW = "raw-count"
    EQUAL_DIVISION = "equal-division"
    CARDINALITY_WEIGHTED = "cardinality-weighted"


@dataclass(frozen=True, eq=False)
class CountingScheme:
    selector: Selector
    transform: Transform = Transform.RAW
    size_weights: Optional[Mapping[int, Fraction]] = None
    normalize: bool = True

    def __post_init__(self):
        try:
            object.__setattr__(self, "selector", Selector(self.selector))
            object.__setattr__(self, "transform", Transform(self.transform))
        except ValueError as exc:
            raise InvalidInputError(str(exc)) from None
        weighted = self.transform is Transform.CARDINALITY_WEIGHTED
        if weighted != (self.size_weights is not None):
            raise InvalidInputError("size_weights is required exactly for the cardinality-weighted transform")
        if weighted:
            weights = {int(s): Fraction(w) for s, w in self.size_weights.items()}
            if any(w < 0 for w in weights.values()):
                raise InvalidInputError("size weights must be nonnegative")
            object.__setattr__(self, "size_weights", weights)


def _typed_coalitions(v: SimpleGame, selector: Selector) -> Iterator[tuple[int, list[int]]]:
    """Yield (coalition, credited 0-based players) for every coalition of the type."""
    n = v.n
    if selector is Selector.MINIMAL_WINNING:
        family = _mwc(v)
    elif selector is Selector.SHIFT_MINIMAL_WINNING:
        family = shift_minimal_winning(v)
    else:
        family = _positions(v.table)
    if selector is not Selector.CRITICAL:
        for U in family:
            yield U, [k for k in range(n) if (U >> k) & 1]
        return
    losing = ~v.table
    # swing[k]: winning coalitions U containing k with U - {k} losing
    swing = [v.table & ((losing & _without(n, k)) << (1 << k)) for k in range(n)]
    for U in family:
        yield U, [k for k in range(n) if (swing[k] >> U) & 1]


def count_index(v: SimpleGame, scheme: CountingScheme) -> PowerVector:
    n = v.n
    transform = scheme.transform
    if transform is Transform.CARDINALITY_WEIGHTED:
        missing = [s for s in range(1, n + 1) if s not in scheme.size_weights]
        if missing:
            raise InvalidInputError(f"size_weights lacks sizes {missing}")
    totals = [Fraction(0)] * n
    for U, credited in _typed_coalitions(v, scheme.selector):
        if not credited:
            continue
        if transform is Transform.RAW:
            share = Fraction(1)
        elif transform is Transform.EQUAL_DIVISION:
            share = Fraction(1, len(credited))
        else:
            share = scheme.size_weights[U.bit_count()]
        for k in credited:
            totals[k] += share
    if scheme.normalize:
        total = sum(totals)
        if total == 0:
            raise InvalidInputError("cannot normalize: every player received zero")
        totals = [x / total for x in totals]
    return tuple(totals)


# -- named indices ----------------------------------------------------------------

PGI = CountingScheme(Selector.MINIMAL_WINNING)
DEEGAN_PACKEL = CountingScheme(Selector.MINIMAL_WINNING, Transform.EQUAL_DIVISION)
BANZHAF_NORMALIZED = CountingScheme(Selector.CRITICAL)
BANZHAF_SWINGS = CountingScheme(Selector.CRITICAL, normalize=False)
JOHNSTON = CountingScheme(Selector.CRITICAL, Transform.EQUAL_DIVISION)
KOENIG_BRAEUNINGER = CountingScheme(Selector.WINNING)
KB_EQUAL_DIVISION = CountingScheme(Selector.WINNING, Transform.EQUAL_DIVISION)
SHIFT = CountingScheme(Selector.SHIFT_MINIMAL_WINNING)
SHIFT_DEEGAN_PACKEL = CountingScheme(Selector.SHIFT_MINIMAL_WINNING, Transform.EQUAL_DIVISION)


def shapley_shubik_scheme(n: int) -> CountingScheme:
    """Swing coalitions of size s weighted by (s-1)!(n-s)!/n!."""
    f = math.factorial
    weights = {s: Fraction(f(s - 1) * f(n - s), f(n)) for s in range(1, n + 1)}
    return CountingScheme(Selector.CRITICAL, Transform.CARDINALITY_WEIGHTED, weights, normalize=False)


@lru_cache(maxsize=65536)
def pgi(v: SimpleGame) -> PowerVector:
    return count_index(v, PGI)


@lru_cache(maxsize=65536)
def deegan_packel(v: SimpleGame) -> PowerVector:
    return count_index(v, DEEGAN_PACKEL)


@lru_cache(maxsize=65536)
def banzhaf(v: SimpleGame, normalized: bool = True) -> PowerVector:
    """Swing counts, normalized to sum 1 or divided by 2**(n-1)."""
    if normalized:
        return count_index(v, BANZHAF_NORMALIZED)
    scale = 1 << (v.n - 1)
    return tuple(x / scale for x in count_index(v, BANZHAF_SWINGS))


def banzhaf_raw(v: SimpleGame) -> PowerVector:
    return banzhaf(v, normalized=False)


@lru_cache(maxsize=65536)
def shapley_shubik(v: SimpleGame) -> PowerVector:
    return count_index(v, shapley_shubik_scheme(v.n))


@lru_cache(maxsize=65536)
def johnston(v: SimpleGame) -> PowerVector:
    return count_index(v, JOHNSTON)


@lru_cache(maxsize=65536)
def koenig_braeuninger(v: SimpleGame) -> PowerVector:
    return count_index(v, KOENIG_BRAEUNINGER)


@lru_cache(maxsize=65536)
def kb_equal_division(v: SimpleGame) -> PowerVector:
    return count_index(v, KB_EQUAL_DIVISION)


@lru_cache(maxsize=65536)
def shift_index(v: SimpleGame) -> PowerVector:
    return count_index(v, SHIFT)


@lru_cache(maxsize=65536)
def shift_deegan_packel(v: SimpleGame) -> PowerVector:
    return count_index(v, SHIFT_DEEGAN_PACKEL)


# -- registry ------------------------------------------------------------------------

@dataclass(frozen=True)
class PowerIndex:
    id: str
    name: str
    compute: Callable[[SimpleGame], PowerVector]
    complete_only: bool = False
    efficient: bool = True
    note: str = ""

    def __call__(self, v: SimpleGame) -> PowerVector:
        if self.complete_only and not is_complete(v):
            raise InvalidGameError(f"{self.name} is only defined for complete games")
        return self.compute(v)

    def applicable(self, v: SimpleGame) -> bool:
        return not self.complete_only or is_complete(v)


INDICES: dict[str, PowerIndex] = {
    p.id: p
    for p in [
        PowerIndex("pgi", "Public Good index", pgi),
        PowerIndex("deegan_packel", "Deegan-Packel index", deegan_packel),
        PowerIndex("banzhaf", "Penrose-Banzhaf index (normalized)", banzhaf),
        PowerIndex("banzhaf_raw", "Penrose-Banzhaf index (raw)", banzhaf_raw, efficient=False),
        PowerIndex("shapley_shubik", "Shapley-Shubik index", shapley_shubik),
        PowerIndex("johnston", "Johnston index", johnston),
        PowerIndex("koenig_braeuninger", "Koenig-Braeuninger index", koenig_braeuninger),
        PowerIndex(
            "kb_equal_division",
            "Koenig-Braeuninger equal-division index",
            kb_equal_division,
            note="non-standard name: no published name is known for this variant",
        ),
        PowerIndex("shift", "Shift index", shift_index, complete_only=True),
        PowerIndex("shift_deegan_packel", "Shift-Deegan-Packel index", shift_deegan_packel, complete_only=True),
        PowerIndex("nucleolus", "Nucleolus", nucleolus),
    ]
}

ALIASES = {
    "public_good": "pgi",
    "dp": "deegan_packel",
    "pbi": "banzhaf",
    "banzhaf_normalized": "banzhaf",
    "pbi_raw": "banzhaf_raw",
    "ssi": "shapley_shubik",
    "kb": "koenig_braeuninger",
    "kb_ed": "kb_equal_division",
    "sdp": "shift_deegan_packel",
}


def get_index(index: str | PowerIndex | Callable) -> PowerIndex:
    """Resolve an id, alias, PowerIndex or bare callable to a PowerIndex."""
    if isinstance(index, PowerIndex):
        return index
    if callable(index):
        name = getattr(index, "__name__", "custom")
        return PowerIndex(name, name, index)
    key = str(index).strip().lower().replace("-", "_")
    key = ALIASES.get(key, key)
    try:
        return INDICES[key]
    except KeyError:
        known = ", ".join(INDICES)
        raise InvalidInputError(f"unknown index {index!r} (known: {known})") from None


def resolve_indices(spec: str) -> list[PowerIndex]:
    """Parse ``all`` or a comma-separated list of ids."""
    if spec.strip().lower() == "all":
        return list(INDICES.values())
    return [get_index(part) for part in spec.split(",") if part.strip()]
