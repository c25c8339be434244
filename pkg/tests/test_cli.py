import json

import pytest

from goldens import T0, T0_RHO3
from lrsym.cli import main
from lrsym.tableau import Tableau, tableau_from_json, tableau_to_json


@pytest.fixture
def t0_file(tmp_path):
    p = tmp_path / "t0.json"
    p.write_text(json.dumps(tableau_to_json(Tableau.parse(T0))))
    return str(p)


def _out(capsys):
    return json.loads(capsys.readouterr().out)


def test_apply_rho3(t0_file, capsys):
    assert main(["apply", "rho3", "--in", t0_file]) == 0
    assert tableau_from_json(_out(capsys)) == Tableau.parse(T0_RHO3)


def test_apply_text_input_and_out_file(tmp_path, capsys):
    src = tmp_path / "t.txt"
    src.write_text(T0 + "\n")
    dst = tmp_path / "r.json"
    assert main(["apply", "rotate", "--in", str(src), "--out", str(dst)]) == 0
    assert main(["apply", "rotate", "--in", str(dst)]) == 0
    assert tableau_from_json(_out(capsys)) == Tableau.parse(T0)


def test_fast_and_slow_agree(t0_file, capsys):
    main(["apply", "blacklozenge", "--in", t0_file, "--box", "3,6"])
    slow = _out(capsys)
    main(["apply", "blacklozenge-fast", "--in", t0_file, "--box", "3,6"])
    assert _out(capsys) == slow


def test_enumerate_and_coeff(capsys):
    assert main(["enumerate", "6,4,3", "2,1", "5,3,2", "--count"]) == 0
    n = int(capsys.readouterr().out)
    assert n >= 1
    assert main(["enumerate", "6,4,3/2,1/5,3,2"]) == 0
    assert len(_out(capsys)) == n
    assert main(["coeff", "3,2,1", "/", "2,1", "/", "2,1"]) == 0
    rep = _out(capsys)
    assert rep["c"] == 2 and rep["conj_count"] == 2 and rep["bijection_ok"]


def test_verify_exit_codes(capsys):
    assert main(["verify", "fast-slow", "--max-cells", "4"]) == 0
    assert "fast-slow: ok" in capsys.readouterr().out
    assert main(["verify", "nope"]) == 2


def test_bench(tmp_path, capsys):
    csv = tmp_path / "b.csv"
    assert main(["bench", "fast-blacklozenge", "--scales", "1,2", "--repeats", "1", "--csv", str(csv)]) == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "map,scale,cells,bitsize,median_nanos,alpha_calls" and len(lines) == 3
    assert "slope" in capsys.readouterr().err
    assert main(["bench", "nope", "--scales", "1"]) == 2
    assert main(["bench", "--scales", "x"]) == 2


@pytest.mark.parametrize("text", ["{not json", "..2/11", '{"outer": [2], "inner": [], "rows": [[1]]}'])
def test_bad_input(tmp_path, capsys, text):
    p = tmp_path / "bad"
    p.write_text(text)
    assert main(["apply", "rho3", "--in", str(p)]) == 2
    assert capsys.readouterr().err.startswith("lrsym:")


def test_bad_map_and_missing_file(capsys):
    assert main(["apply", "nope", "--in", "/nonexistent"]) == 2
    assert main(["apply", "rho3", "--in", "/nonexistent"]) == 2
    assert main(["enumerate", "3", "1"]) == 2
