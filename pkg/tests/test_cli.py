import json

import pytest

from arlab.cli import main, parse_params
from arlab.constructions import build_lower_bound
from arlab.core import EdgeColoring, read_coloring, write_coloring


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_parse_params():
    assert parse_params("k=1, t=2") == {"k": 1, "t": 2}
    assert parse_params("p=2:3:4,n=40") == {"p": [2, 3, 4], "n": 40}
    assert parse_params("regime=C,n=6,t=3") == {"regime": "C", "n": 6, "t": 3}


def test_formula(capsys):
    code, out = run(capsys, "formula", "--family", "SPANNING_KP3_TP2", "--params", "k=2,t=3")
    assert code == 0
    assert json.loads(out.out)["value"] == 37


def test_formula_text_format_after_subcommand(capsys):
    code, out = run(capsys, "formula", "--family", "P3_TP2", "--params", "n=9,t=3", "--format", "text")
    assert code == 0
    assert "value: 16" in out.out and "branch: small" in out.out


def test_formula_out_of_domain(capsys):
    code, out = run(capsys, "formula", "--family", "PATH", "--params", "n=30,t=2")
    assert code == 0
    assert "negative" in json.loads(out.out)["out_of_domain"]


def test_construct_and_detect(tmp_path, capsys):
    path = tmp_path / "lb.json"
    code, _ = run(capsys, "construct", "--k", "1", "--t", "2", "--out", str(path))
    assert code == 0
    assert read_coloring(path) == build_lower_bound(1, 2)
    code, out = run(capsys, "detect", "--coloring", str(path), "--k", "1", "--t", "2")
    body = json.loads(out.out)
    assert code == 0 and body["found"] is False and body["complete"] is True
    code, out = run(capsys, "detect", "--coloring", str(path), "--k", "1", "--t", "2", "--oracle")
    assert json.loads(out.out)["found"] is False


def test_construct_to_stdout(capsys):
    code, out = run(capsys, "construct", "--k", "1", "--t", "2")
    assert code == 0
    assert json.loads(out.out)["n"] == 7


def test_find(tmp_path, capsys):
    path = tmp_path / "r.txt"
    write_coloring(EdgeColoring.rainbow(10), path)
    code, out = run(capsys, "find", "--coloring", str(path), "--k", "2", "--t", "2", "--trace")
    body = json.loads(out.out)
    assert code == 0 and body["fallback_used"] == 0
    assert [lv["k"] for lv in body["levels"]] == [1, 2]


def test_find_below_threshold_exits_2(tmp_path, capsys):
    path = tmp_path / "lb.json"
    write_coloring(build_lower_bound(1, 2), path)
    code, out = run(capsys, "find", "--coloring", str(path), "--k", "1", "--t", "2")
    assert code == 2 and "colors" in out.err


def test_missing_file_exits_2(tmp_path, capsys):
    code, out = run(capsys, "detect", "--coloring", str(tmp_path / "nope.json"), "--k", "1", "--t", "1")
    assert code == 2


def test_oracle(capsys):
    code, out = run(capsys, "oracle", "--n", "5", "--k", "1", "--t", "1")
    body = json.loads(out.out)
    assert code == 0 and body["value"] == 2 and body["status"] == "proven"
    code, out = run(capsys, "oracle", "--n", "4", "--triangle")
    assert json.loads(out.out)["value"] == 3
    code, out = run(capsys, "oracle", "--n", "7", "--k", "1", "--t", "2", "--budget", "10")
    assert json.loads(out.out)["status"] == "lowerBoundOnly"


def test_threads_env_override(tmp_path, capsys, monkeypatch):
    path = tmp_path / "c.json"
    write_coloring(EdgeColoring.rainbow(10), path)
    _, one = run(capsys, "detect", "--coloring", str(path), "--k", "2", "--t", "2", "--threads", "1")
    monkeypatch.setenv("ARLAB_THREADS", "8")
    _, eight = run(capsys, "detect", "--coloring", str(path), "--k", "2", "--t", "2")
    assert one.out == eight.out


def test_unknown_family_rejected():
    with pytest.raises(SystemExit):
        main(["formula", "--family", "NOPE"])


@pytest.mark.slow
def test_crosscheck_csv(capsys):
    code, out = run(capsys, "crosscheck", "--suite", "base", "--format", "csv")
    lines = out.out.splitlines()
    assert code == 0
    assert lines[0].startswith("check_id,")
    assert sum("mismatch" in line for line in lines) == 1
