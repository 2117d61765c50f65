"""Game files and JSON serialization of results.

Two game file shapes are accepted, nothing else:

    {"type": "weighted", "quota": "51", "weights": ["47", "36", "17"]}
    {"type": "mwc", "n": 4, "minimal_winning": [[1, 3], [1, 4], [2, 3], [2, 4]]}

Rationals are JSON integers or strings of the form ``p`` or ``p/q``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Union

from .errors import InvalidGameError
from .games import SimpleGame, WeightedRepresentation, from_minimal_winning, from_weighted, members, minimal_winning

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
_KEYS = {
    "weighted": {"type", "quota", "weights"},
    "mwc": {"type", "n", "minimal_winning"},
}


def parse_rational(value: Any, field: str) -> Fraction:
    if isinstance(value, bool):
        raise InvalidGameError(f"{field}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise InvalidGameError(f"{field}: zero denominator in {value!r}") from None
    raise InvalidGameError(f"{field}: expected an integer or a 'p/q' string, got {value!r}")


def parse_game(data: Union[str, dict]) -> SimpleGame:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InvalidGameError(f"game file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidGameError("game file must hold a single JSON object")
    kind = data.get("type")
    if kind not in _KEYS:
        raise InvalidGameError(f"type: expected 'weighted' or 'mwc', got {kind!r}")
    unknown = set(data) - _KEYS[kind]
    if unknown:
        raise InvalidGameError(f"unknown key(s) {sorted(unknown)} for type {kind!r}")
    missing = _KEYS[kind] - set(data)
    if missing:
        raise InvalidGameError(f"missing key(s) {sorted(missing)} for type {kind!r}")

    if kind == "weighted":
        weights = data["weights"]
        if not isinstance(weights, list) or not weights:
            raise InvalidGameError("weights: expected a nonempty list")
        rep = WeightedRepresentation(
            parse_rational(data["quota"], "quota"),
            tuple(parse_rational(w, f"weights[{k}]") for k, w in enumerate(weights)),
        )
        return from_weighted(rep)

    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidGameError(f"n: expected a positive integer, got {n!r}")
    mwc = data["minimal_winning"]
    if not isinstance(mwc, list) or not all(isinstance(c, list) for c in mwc):
        raise InvalidGameError("minimal_winning: expected a list of player lists")
    for k, c in enumerate(mwc):
        if len(set(c)) != len(c):
            raise InvalidGameError(f"minimal_winning[{k}]: repeated player")
    return from_minimal_winning(n, mwc)


def load_game(path: Union[str, Path]) -> SimpleGame:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidGameError(f"game: cannot read {path}: {exc.strerror}") from None
    return parse_game(text)


def game_to_dict(v: SimpleGame) -> dict:
    return {"type": "mwc", "n": v.n, "minimal_winning": [list(members(S)) for S in minimal_winning(v)]}


def representation_to_dict(rep: WeightedRepresentation) -> dict:
    return {"type": "weighted", "quota": fraction_str(rep.quota), "weights": [fraction_str(w) for w in rep.weights]}


def dumps_game(v: SimpleGame) -> str:
    """One-line mwc form, stable across runs."""
    return json.dumps(game_to_dict(v))


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal(x: Fraction) -> float:
    return float(format(float(x), ".12g"))


def power_vector_dict(index_id: str, values: Iterable[Fraction]) -> dict:
    values = list(values)
    return {
        "index": index_id,
        "values": [fraction_str(x) for x in values],
        "decimal": [decimal(x) for x in values],
    }
