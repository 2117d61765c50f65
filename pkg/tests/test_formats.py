import json
from fractions import Fraction

import pytest

from powerlab.errors import InvalidGameError
from powerlab.formats import (
    decimal,
    dumps_game,
    fraction_str,
    load_game,
    parse_game,
    parse_rational,
    power_vector_dict,
)
from powerlab.games import weighted_game


def test_weighted_file(committee):
    assert parse_game('{"type":"weighted", "quota":"51", "weights":["47","36","17"]}') == committee


def test_integer_and_fraction_fields():
    g = parse_game({"type": "weighted", "quota": "1/2", "weights": [1, "1/4", "1/4"]})
    assert g == weighted_game(Fraction(1, 2), 1, Fraction(1, 4), Fraction(1, 4))


def test_mwc_file(family):
    text = '{"type":"mwc", "n":4, "minimal_winning":[[1,3],[1,4],[2,3],[2,4]]}'
    assert parse_game(text) == family


@pytest.mark.parametrize(
    "obj,field",
    [
        ({"type": "weighted", "quota": "51", "weights": ["47"], "extra": 1}, "extra"),
        ({"type": "weighted", "quota": 5.5, "weights": ["47"]}, "quota"),
        ({"type": "weighted", "quota": "1", "weights": ["1", "x"]}, "weights[1]"),
        ({"type": "weighted", "quota": "1", "weights": []}, "weights"),
        ({"type": "mwc", "n": 0, "minimal_winning": [[1]]}, "n"),
        ({"type": "mwc", "n": 2, "minimal_winning": [[1, 1]]}, "minimal_winning[0]"),
        ({"type": "mwc", "n": 2}, "minimal_winning"),
        ({"type": "tu", "n": 2}, "type"),
    ],
)
def test_strict_parsing_names_field(obj, field):
    with pytest.raises(InvalidGameError, match=field.replace("[", r"\[").replace("]", r"\]")):
        parse_game(obj)


def test_bad_json():
    with pytest.raises(InvalidGameError):
        parse_game("{not json")
    with pytest.raises(InvalidGameError):
        parse_game("[1, 2]")


def test_parse_rational():
    assert parse_rational("3/6", "q") == Fraction(1, 2)
    assert parse_rational(7, "q") == 7
    for bad in (True, 1.5, "1.5", "1/0", None):
        with pytest.raises(InvalidGameError):
            parse_rational(bad, "q")


def test_load_game(tmp_path, family):
    path = tmp_path / "family.json"
    path.write_text(dumps_game(family))
    assert load_game(path) == family
    with pytest.raises(InvalidGameError):
        load_game(tmp_path / "missing.json")


def test_power_vector_serialization():
    out = power_vector_dict("pgi", [Fraction(4, 15), Fraction(2, 15), Fraction(1, 5)])
    assert out["values"] == ["4/15", "2/15", "1/5"]
    assert out["decimal"][0] == 0.266666666667
    assert json.loads(json.dumps(out)) == out


def test_fraction_str_and_decimal():
    assert fraction_str(Fraction(2)) == "2"
    assert fraction_str(Fraction(-1, 3)) == "-1/3"
    assert decimal(Fraction(2, 3)) == 0.666666666667
