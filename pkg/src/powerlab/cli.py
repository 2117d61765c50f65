"""Command-line front end.

Every verb writes one report to stdout (JSON unless noted) and diagnostics
to stderr. Exit status: 0 ok, 1 invalid input, 2 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import axioms, design
from .enumeration import CorpusSpec, count, enumerate_games, parse_corpus
from .errors import CapExceededError, InvalidInputError, PowerLabError
from .formats import dumps_game, fraction_str, game_to_dict, load_game, power_vector_dict
from .games import is_complete, is_weighted
from .indices import get_index, resolve_indices
from .parallel import worker_count


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInputError(f"{self.prog}: {message}")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _players(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InvalidInputError(f"--keep: expected comma-separated player numbers, got {text!r}") from None


def _sizes(text: str) -> list[int]:
    lo, _, hi = text.partition("-")
    try:
        lo_n = int(lo)
        hi_n = int(hi) if hi else lo_n
    except ValueError:
        raise InvalidInputError(f"--n: expected k or a-b, got {text!r}") from None
    return list(range(lo_n, hi_n + 1))


def cmd_compute(args) -> None:
    v = load_game(args.game)
    rows = []
    explicit = args.index.strip().lower() != "all"
    for idx in resolve_indices(args.index):
        if not idx.applicable(v):
            if explicit:
                raise InvalidInputError(f"--index: {idx.id} requires a complete game")
            rows.append({"index": idx.id, "values": None, "decimal": None, "note": "undefined: game is not complete"})
            continue
        row = power_vector_dict(idx.id, idx(v))
        if idx.note:
            row["note"] = idx.note
        rows.append(row)
    _emit({"game": game_to_dict(v), "n": v.n, "indices": rows})


def cmd_check(args) -> None:
    v = load_game(args.game)
    rep = is_weighted(v)
    out = {
        "game": game_to_dict(v),
        "complete": is_complete(v),
        "weighted": None if rep is None else str(rep),
        "indices": [],
    }
    for idx in resolve_indices(args.index):
        if not idx.applicable(v):
            out["indices"].append({"index": idx.id, "note": "undefined: game is not complete"})
            continue
        out["indices"].append(
            {
                "index": idx.id,
                "values": [fraction_str(x) for x in idx(v)],
                "verdicts": [verdict.to_dict() for verdict in axioms.check_all(idx, v)],
            }
        )
    _emit(out)


def cmd_enumerate(args) -> None:
    spec = CorpusSpec(args.game_class, args.n, args.dedup)
    if args.count_only:
        total = count(spec)
        if args.json:
            _emit({"class": spec.game_class.value, "n": spec.n, "dedup": spec.dedup, "count": total})
        else:
            print(total)
        return
    if args.json:
        games = [game_to_dict(g) for g in enumerate_games(spec)]
        _emit({"class": spec.game_class.value, "n": spec.n, "dedup": spec.dedup, "count": len(games), "games": games})
        return
    for g in enumerate_games(spec):
        sys.stdout.write(dumps_game(g) + "\n")


def cmd_matrix(args) -> None:
    specs = [CorpusSpec(args.game_class, n, args.dedup) for n in _sizes(args.n)]
    reports = axioms.property_matrix(specs, resolve_indices(args.indices))
    if args.json:
        _emit({"corpus": [s.label for s in specs], "reports": [r.to_dict() for r in reports]})
    else:
        sys.stdout.write(axioms.matrix_csv(reports))


def cmd_design(args) -> None:
    source = []
    for text in args.corpus:
        source.extend(parse_corpus(text, args.dedup))
    for path in args.game or []:
        source.append((f"file:{path}", load_game(path)))
    result = design.minimal_lm_lambda(source, args.base_a, args.base_b)
    out = {"base_a": get_index(args.base_a).id, "base_b": get_index(args.base_b).id}
    out.update(result.to_dict())
    _emit(out)


def cmd_spectrum(args) -> None:
    specs = [CorpusSpec(args.game_class, n, args.dedup) for n in _sizes(args.n)]
    report = design.largest_player_spectrum(args.index, specs)
    out = {"corpus": [s.label for s in specs]}
    out.update(report.to_dict())
    _emit(out)


def cmd_approx(args) -> None:
    v = load_game(args.game)
    result = design.alon_edelman_search(v, args.index, _players(args.keep))
    _emit(result.to_dict())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powerlab", description="Exact power indices and axiom checks for simple games.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="force the structured JSON report")
        return p

    p = add("compute", cmd_compute, "power vectors of one game")
    p.add_argument("--game", required=True)
    p.add_argument("--index", default="all")

    p = add("check", cmd_check, "axiom verdicts for one game")
    p.add_argument("--game", required=True)
    p.add_argument("--index", default="all")

    p = add("enumerate", cmd_enumerate, "stream or count a corpus")
    p.add_argument("--class", dest="game_class", required=True, choices=["simple", "complete", "weighted"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--dedup", action="store_true", help="one game per relabelling orbit")

    p = add("matrix", cmd_matrix, "CSV property matrix over a corpus")
    p.add_argument("--class", dest="game_class", required=True, choices=["simple", "complete", "weighted"])
    p.add_argument("--n", required=True, help="k or a-b")
    p.add_argument("--indices", default="all")
    p.add_argument("--dedup", action="store_true")

    p = add("design", cmd_design, "least locally monotonic convex combination weight")
    p.add_argument("--corpus", action="append", required=True, help="class:n or class:a-b (repeatable)")
    p.add_argument("--game", action="append", help="extra game file added to the corpus (repeatable)")
    p.add_argument("--base-a", required=True)
    p.add_argument("--base-b", required=True)
    p.add_argument("--dedup", action="store_true")

    p = add("spectrum", cmd_spectrum, "largest-player power values over a corpus")
    p.add_argument("--index", required=True)
    p.add_argument("--class", dest="game_class", required=True, choices=["complete", "weighted"])
    p.add_argument("--n", required=True, help="k or a-b")
    p.add_argument("--dedup", action="store_true")

    p = add("approx", cmd_approx, "closest game on a kept player set")
    p.add_argument("--game", required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--keep", required=True, help="comma-separated players")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        worker_count()
        args = build_parser().parse_args(argv)
        args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PowerLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
