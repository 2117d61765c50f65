import csv
import io
import json
import subprocess
import sys

import pytest

from powerlab.cli import main
from powerlab.formats import dumps_game, parse_game


@pytest.fixture
def files(tmp_path, family, lm_game, g211):
    paths = {}
    for name, g in (("family", family), ("lm", lm_game), ("g211", g211)):
        p = tmp_path / f"{name}.json"
        p.write_text(dumps_game(g))
        paths[name] = str(p)
    weighted = tmp_path / "committee.json"
    weighted.write_text('{"type": "weighted", "quota": "51", "weights": ["47", "36", "17"]}')
    paths["committee"] = str(weighted)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_family(capsys, files):
    code, out, _ = run(capsys, "compute", "--index", "pgi", "--game", files["family"])
    assert code == 0
    report = json.loads(out)
    assert report["indices"][0]["values"] == ["1/4"] * 4
    assert report["indices"][0]["decimal"] == [0.25] * 4


def test_compute_all_marks_shift_undefined(capsys, files):
    code, out, _ = run(capsys, "compute", "--game", files["family"])
    rows = {r["index"]: r for r in json.loads(out)["indices"]}
    assert code == 0 and rows["shift"]["values"] is None
    code, _, err = run(capsys, "compute", "--index", "shift", "--game", files["family"])
    assert code == 1 and "--index" in err


def test_check_lm_witness(capsys, files):
    code, out, _ = run(capsys, "check", "--game", files["lm"], "--index", "pgi")
    assert code == 0
    report = json.loads(out)
    verdicts = {v["axiom"]: v for v in report["indices"][0]["verdicts"]}
    lm = verdicts["local-monotonicity"]
    assert lm["verdict"] == "violated" and lm["witness"]["players"] == [2, 3]
    assert report["weighted"] == "[5; 3, 2, 1, 1, 1]"


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--class", "simple", "--n", "4", "--count-only")[1] == "166\n"
    code, out, _ = run(capsys, "enumerate", "--class", "simple", "--n", "4", "--count-only", "--dedup", "--json")
    assert json.loads(out)["count"] == 28


def test_enumerate_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "complete", "--n", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 18
    games = [parse_game(line) for line in lines]
    assert [dumps_game(g) for g in games] == lines


def test_matrix_csv(capsys):
    code, out, _ = run(capsys, "matrix", "--class", "simple", "--n", "1-3", "--indices", "pgi,kb")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][:2] == ["index", "positivity"]
    assert rows[2][:3] == ["koenig_braeuninger", "holds", "holds"]
    assert rows[2][3].startswith("violated(simple:2#0 ")


def test_design(capsys, files):
    code, out, _ = run(capsys, "design", "--corpus", "complete:1-3", "--game", files["lm"], "--base-a", "pgi", "--base-b", "pbi")
    report = json.loads(out)
    assert code == 0 and report["lambda_star"] == "5/11"
    assert report["witnesses"][0]["pair"] == [2, 3]


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "--index", "pgi", "--class", "weighted", "--n", "1-4")
    report = json.loads(out)
    assert code == 0 and report["in_open_interval_half_one"] == [] and report["max_below_one"] == "1/2"


def test_approx(capsys, files):
    code, out, _ = run(capsys, "approx", "--game", files["g211"], "--index", "pbi", "--keep", "1")
    assert code == 0 and json.loads(out)["ratio"] == "2"


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--index", "nope", "--game", "x.json"],
        ["enumerate", "--class", "bogus", "--n", "3"],
        ["enumerate"],
        ["frobnicate"],
        ["approx", "--game", "missing.json", "--index", "pgi", "--keep", "1"],
    ],
)
def test_invalid_input_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_bad_game_file_names_field(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"type": "weighted", "quota": "51", "weights": ["47", "x"]}')
    code, _, err = run(capsys, "compute", "--game", str(p))
    assert code == 1 and "weights[1]" in err


def test_caps_exit_2(capsys, files):
    assert run(capsys, "enumerate", "--class", "simple", "--n", "6", "--count-only")[0] == 2
    assert run(capsys, "spectrum", "--index", "pgi", "--class", "weighted", "--n", "6")[0] == 2


def test_threads_variable(capsys, monkeypatch):
    monkeypatch.setenv("POWERLAB_THREADS", "0")
    code, _, err = run(capsys, "enumerate", "--class", "simple", "--n", "2", "--count-only")
    assert code == 1 and "POWERLAB_THREADS" in err
    monkeypatch.setenv("POWERLAB_THREADS", "2")
    code, out, _ = run(capsys, "matrix", "--class", "simple", "--n", "1-3", "--indices", "pgi")
    monkeypatch.delenv("POWERLAB_THREADS")
    _, serial, _ = run(capsys, "matrix", "--class", "simple", "--n", "1-3", "--indices", "pgi")
    assert code == 0 and out == serial


def test_deterministic_subprocess(files):
    cmd = [sys.executable, "-m", "powerlab", "check", "--game", files["lm"]]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
