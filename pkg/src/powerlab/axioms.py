"""Executable axiom checks for power indices.

Each ``check_*`` function tests one axiom for one index on one game and
returns a ``Verdict``; a violated verdict carries a ``Witness`` that
``replay`` can re-verify in isolation. ``property_matrix`` sweeps corpora.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Optional, Sequence, Union

from .enumeration import CorpusSpec, corpus
from .formats import dumps_game, fraction_str, game_to_dict
from .games import SimpleGame, desirability, is_complete, is_null_player, relabel
from .indices import PowerIndex, get_index
from .parallel import ordered_map

POSITIVITY = "positivity"
EFFICIENCY = "efficiency"
NULL_PLAYER = "null-player"
SYMMETRY = "symmetry"
LOCAL_MONOTONICITY = "local-monotonicity"
LOCAL_MONOTONICITY_ALL = "local-monotonicity-all"
LINEARITY = "linearity"

AXIOMS = (POSITIVITY, EFFICIENCY, NULL_PLAYER, SYMMETRY, LOCAL_MONOTONICITY)
MATRIX_COLUMNS = AXIOMS + (LOCAL_MONOTONICITY_ALL, LINEARITY)
SCOPES = {
    LOCAL_MONOTONICITY: "complete games only",
    LOCAL_MONOTONICITY_ALL: "comparable pairs of all games",
    LINEARITY: "not applicable: simple games are not closed under linear combination",
}

SYMMETRY_SAMPLE = 100
SYMMETRY_SEED = 20180401

IndexLike = Union[str, PowerIndex, Callable[[SimpleGame], Sequence[Fraction]]]


@dataclass(frozen=True)
class Witness:
    players: tuple[int, ...] = ()
    permutation: Optional[tuple[int, ...]] = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"players": list(self.players), "detail": self.detail}
        if self.permutation is not None:
            out["permutation"] = list(self.permutation)
        return out


@dataclass(frozen=True)
class Verdict:
    axiom: str
    holds: bool
    witness: Optional[Witness] = None

    def to_dict(self) -> dict:
        out = {"axiom": self.axiom, "verdict": "holds" if self.holds else "violated"}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


_HOLDS = {a: Verdict(a, True) for a in AXIOMS}


def check_positivity(index: IndexLike, v: SimpleGame) -> Verdict:
    g = get_index(index)(v)
    for i, x in enumerate(g, 1):
        if x < 0:
            return Verdict(POSITIVITY, False, Witness((i,), detail=f"g_{i} = {fraction_str(x)} < 0"))
    if not any(g):
        return Verdict(POSITIVITY, False, Witness(detail="all values are zero"))
    return _HOLDS[POSITIVITY]


def check_efficiency(index: IndexLike, v: SimpleGame) -> Verdict:
    total = sum(get_index(index)(v))
    if total != 1:
        return Verdict(EFFICIENCY, False, Witness(detail=f"sum = {fraction_str(total)}"))
    return _HOLDS[EFFICIENCY]


def check_null_player(index: IndexLike, v: SimpleGame) -> Verdict:
    g = get_index(index)(v)
    for i in v.players:
        if is_null_player(v, i) and g[i - 1] != 0:
            return Verdict(NULL_PLAYER, False, Witness((i,), detail=f"null player {i} gets {fraction_str(g[i - 1])}"))
    return _HOLDS[NULL_PLAYER]


def symmetry_permutations(n: int) -> list[tuple[int, ...]]:
    """All n! relabellings for n <= 5, else a fixed seeded sample."""
    if n <= 5:
        return list(itertools.permutations(range(1, n + 1)))
    rng = random.Random(SYMMETRY_SEED)
    perms = []
    for _ in range(SYMMETRY_SAMPLE):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        perms.append(tuple(p))
    return perms


def check_symmetry(index: IndexLike, v: SimpleGame) -> Verdict:
    # relabel() renames player i to tau(i), so symmetry reads g_tau(i)(tau v) == g_i(v)
    idx = get_index(index)
    g = idx(v)
    for tau in symmetry_permutations(v.n):
        h = idx(relabel(v, tau))
        for i in v.players:
            if h[tau[i - 1] - 1] != g[i - 1]:
                detail = f"g_{tau[i - 1]}(tau v) = {fraction_str(h[tau[i - 1] - 1])} != g_{i}(v) = {fraction_str(g[i - 1])}"
                return Verdict(SYMMETRY, False, Witness((i,), tau, detail))
    return _HOLDS[SYMMETRY]


def check_local_monotonicity(index: IndexLike, v: SimpleGame) -> Verdict:
    """g_i >= g_j for every pair with i ⪰ j; incomparable pairs are unconstrained."""
    g = get_index(index)(v)
    for i, j in desirability(v).pairs():
        if g[i - 1] < g[j - 1]:
            detail = f"{i} ⪰ {j} but {fraction_str(g[i - 1])} < {fraction_str(g[j - 1])}"
            return Verdict(LOCAL_MONOTONICITY, False, Witness((i, j), detail=detail))
    return _HOLDS[LOCAL_MONOTONICITY]


CHECKERS = {
    POSITIVITY: check_positivity,
    EFFICIENCY: check_efficiency,
    NULL_PLAYER: check_null_player,
    SYMMETRY: check_symmetry,
    LOCAL_MONOTONICITY: check_local_monotonicity,
}


def check_all(index: IndexLike, v: SimpleGame) -> list[Verdict]:
    return [check(index, v) for check in CHECKERS.values()]


def replay(axiom: str, index: IndexLike, v: SimpleGame, witness: Witness) -> bool:
    """True iff ``witness`` still demonstrates a violation of ``axiom``."""
    idx = get_index(index)
    g = idx(v)
    if axiom == POSITIVITY:
        if witness.players:
            return g[witness.players[0] - 1] < 0
        return not any(g)
    if axiom == EFFICIENCY:
        return sum(g) != 1
    if axiom == NULL_PLAYER:
        (i,) = witness.players
        return is_null_player(v, i) and g[i - 1] != 0
    if axiom == SYMMETRY:
        (i,) = witness.players
        tau = witness.permutation
        return idx(relabel(v, tau))[tau[i - 1] - 1] != g[i - 1]
    if axiom in (LOCAL_MONOTONICITY, LOCAL_MONOTONICITY_ALL):
        i, j = witness.players
        return desirability(v).weakly(i, j) and g[i - 1] < g[j - 1]
    raise ValueError(f"unknown axiom {axiom!r}")


# -- corpus sweeps -------------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    game_id: str
    game: SimpleGame
    witness: Witness

    @property
    def label(self) -> str:
        return f"{self.game_id} {dumps_game(self.game)}"


@dataclass
class AxiomReport:
    axiom: str
    index_id: str
    verdict: str  # holds | violated | n/a
    counterexamples: list[Counterexample] = field(default_factory=list)
    games_checked: int = 0
    scope: str = ""

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "index": self.index_id,
            "verdict": self.verdict,
            "scope": self.scope,
            "games_checked": self.games_checked,
            "counterexamples": [
                {"game_id": c.game_id, "game": game_to_dict(c.game), "witness": c.witness.to_dict()}
                for c in self.counterexamples
            ],
        }


def _sweep_game(indices: Sequence[PowerIndex], item: tuple[str, SimpleGame]):
    game_id, v = item
    complete = is_complete(v)
    out = []
    for idx in indices:
        if not idx.applicable(v):
            out.append(None)
            continue
        verdicts = check_all(idx, v)
        out.append((verdicts, complete))
    return game_id, v, out


def property_matrix(
    specs: Union[CorpusSpec, Iterable[CorpusSpec], Iterable[tuple[str, SimpleGame]]],
    indices: Iterable[IndexLike],
    max_counterexamples: int = 1,
    workers: Optional[int] = None,
) -> list[AxiomReport]:
    """Run every checker for every index over a corpus.

    Local monotonicity is reported twice: restricted to complete games (the
    usual definition) and over the comparable pairs of every game. Games on
    which an index is undefined (shift indices on incomplete games) are
    skipped for that index. Counterexamples are the first ones in corpus
    order.
    """
    indices = [get_index(i) for i in indices]
    if isinstance(specs, CorpusSpec):
        items = corpus(specs)
    else:
        specs = list(specs)
        items = corpus(specs) if all(isinstance(s, CorpusSpec) for s in specs) else iter(specs)

    reports: dict[tuple[str, str], AxiomReport] = {}
    for idx in indices:
        for axiom in MATRIX_COLUMNS:
            reports[idx.id, axiom] = AxiomReport(axiom, idx.id, "n/a", scope=SCOPES.get(axiom, "all games"))

    def record(report: AxiomReport, game_id: str, v: SimpleGame, verdict: Verdict):
        report.games_checked += 1
        if report.verdict == "n/a":
            report.verdict = "holds"
        if not verdict.holds:
            report.verdict = "violated"
            if len(report.counterexamples) < max_counterexamples:
                report.counterexamples.append(Counterexample(game_id, v, verdict.witness))

    for game_id, v, results in ordered_map(partial(_sweep_game, indices), items, workers):
        for idx, res in zip(indices, results):
            if res is None:
                continue
            verdicts, complete = res
            for verdict in verdicts:
                if verdict.axiom == LOCAL_MONOTONICITY:
                    record(reports[idx.id, LOCAL_MONOTONICITY_ALL], game_id, v, verdict)
                    if complete:
                        record(reports[idx.id, LOCAL_MONOTONICITY], game_id, v, verdict)
                else:
                    record(reports[idx.id, verdict.axiom], game_id, v, verdict)
    return list(reports.values())


def matrix_csv(reports: Iterable[AxiomReport]) -> str:
    """Rows = index, columns = axiom; cells holds / violated(<game-id> <game>) / n/a."""
    rows: dict[str, dict[str, str]] = {}
    for r in reports:
        cell = r.verdict
        if r.verdict == "violated" and r.counterexamples:
            cell = f"violated({r.counterexamples[0].label})"
        rows.setdefault(r.index_id, {})[r.axiom] = cell
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", *MATRIX_COLUMNS])
    for index_id, cells in rows.items():
        writer.writerow([index_id, *(cells.get(a, "n/a") for a in MATRIX_COLUMNS)])
    return buf.getvalue()
