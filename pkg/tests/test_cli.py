import json

import pytest

from hypermaps.cli import main
from hypermaps.config import RunConfig, build_config, parse_config_file
from hypermaps.report import Report, emit


def test_rhm_oracle(capsys):
    assert main(["rhm", "--N", "2", "--genus", "1", "--degrees", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"N": 2, "g": 1, "degrees": [4], "rhm": 1}


def test_rhm_tau_engine(capsys):
    assert main(["rhm", "--N", "3", "--genus", "0", "--degrees", "1,1,1",
                 "--engine", "tau"]) == 0
    assert json.loads(capsys.readouterr().out)["rhm"] == 2


def test_rhm_invalid_inputs(capsys):
    assert main(["rhm", "--N", "1", "--genus", "0", "--degrees", "2"]) == 2
    assert main(["rhm", "--N", "2", "--genus", "0",
                 "--degrees", "0,2"]) == 2
    assert main(["rhm", "--N", "2", "--genus", "0",
                 "--degrees", "14"]) == 2  # over the dart cap
    capsys.readouterr()


def test_smatrix_output(capsys):
    assert main(["smatrix", "--N", "2", "--m-max", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["S"]["0"] == [["1", "0"], ["0", "1"]]
    assert out["S"]["1"] == [["0", "0"], ["1", "0"]]


def test_frobenius_output(capsys):
    assert main(["frobenius", "--N", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["eta"][0][2] == "1" and out["eta"][1][1] == "1/2"
    assert len(out["psi"]) == 3
    assert set(out["c"][0]) == {"q", "e1", "e2", "ang"}


def test_pluecker_subcommand(capsys):
    assert main(["pluecker", "--N", "2", "--weight-cap", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["violations"] == []
    assert out["relations_checked"] > 0


def test_curve_subcommand(capsys):
    assert main(["curve", "--N", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["rhm01"][1] == 1 and out["rhm01"][3] == 2


def test_tau_subcommand(capsys):
    assert main(["tau", "--N", "2", "--weight-cap", "4",
                 "--emit", "log"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["terms"]["2"]["-2"] == "1"


def test_config_file_parsing(tmp_path):
    p = tmp_path / "run.conf"
    p.write_text("N = 2,3\nweight_cap = 6\n# comment line\n\nthreads = 2\n")
    values = parse_config_file(str(p))
    cfg = build_config(values)
    assert cfg.N == (2, 3) and cfg.weight_cap == 6 and cfg.threads == 2


def test_config_file_bad_line(tmp_path):
    p = tmp_path / "bad.conf"
    p.write_text("just a dangling token\n")
    with pytest.raises(ValueError, match="expected key = value"):
        parse_config_file(str(p))


def test_config_validation():
    with pytest.raises(ValueError, match="no engines selected"):
        RunConfig(engines=())
    with pytest.raises(ValueError, match="unknown engine"):
        RunConfig(engines=("oracle", "quantum"))
    with pytest.raises(ValueError, match="caps must be positive"):
        RunConfig(weight_cap=0)
    with pytest.raises(ValueError, match="unknown output format"):
        RunConfig(out="xml")
    with pytest.raises(ValueError, match="N must be at least 2"):
        RunConfig(N=(1,))


def test_emit_determinism_and_formats():
    rep = Report({"N": [2]})
    rep.add("demo", {"x": 1}, {"y": "2"}, True)
    rep.add_error("boom", {}, RuntimeError("nope"))
    j1, j2 = emit(rep, "json"), emit(rep, "json")
    assert j1 == j2 and j1.endswith(b"\n")
    csv_bytes = emit(rep, "csv")
    assert csv_bytes.splitlines()[0] == b"check_id,inputs,values,verdict"
    with pytest.raises(ValueError, match="unknown format"):
        emit(rep, "yaml")
    assert not rep.ok
    assert rep.summary() == {"pass": 1, "fail": 0, "error": 1}
