import json

import pytest

from hlnet.cli import RunConfig, run


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_witness_command(capsys):
    assert run(["witness", "--graph", "qn:4", "--r", "2"]) == 0
    rep = out_json(capsys)
    assert rep["result"]["F_size"] == 5
    assert rep["version"] and rep["graph"] == "qn:4" and rep["budget"] == 10**7


def test_witness_dot(tmp_path, capsys):
    dot = tmp_path / "w.dot"
    assert run(["witness", "--graph", "cq3", "--r", "1", "--dot", str(dot)]) == 0
    assert "color=red" in dot.read_text()


def test_bounds_table(capsys):
    assert run(["bounds", "--n", "4", "--table"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0].split() == ["g", "e_g", "f(g)"]
    assert rows[4].split() == ["4", "4", "8"]


def test_bounds_json_lines(capsys):
    assert run(["bounds", "--n", "3", "--g-max", "3"]) == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert [x["e_g"] for x in lines] == [0, 1, 2]
    assert lines[2] == {"n": 3, "g": 3, "e_g": 2, "f_g": 5, "oracle_e_g": None, "verdict": "pass"}


def test_build_c4(capsys):
    assert run(["build", "--graph", "random:2:7"]) == 0
    assert capsys.readouterr().out == "n=2\n0 1\n0 2\n1 3\n2 3\n"


@pytest.mark.parametrize("spec", ["qn:4", "cq3", "random:6:3"])
def test_build_round_trip(spec, tmp_path, capsys):
    run(["build", "--graph", spec])
    first = capsys.readouterr().out
    path = tmp_path / "g.txt"
    path.write_text(first)
    run(["build", "--graph", str(path)])
    assert capsys.readouterr().out == first


def test_build_dot(capsys):
    assert run(["build", "--graph", "qn:2", "--format", "dot"]) == 0
    assert "0 -- 1;" in capsys.readouterr().out


def test_flow_command(tmp_path, capsys):
    path = tmp_path / "q3.txt"
    run(["build", "--graph", "qn:3"])
    path.write_text(capsys.readouterr().out)
    assert run(["flow", str(path), "0", "7"]) == 0
    rep = out_json(capsys)["result"]
    assert rep["value"] == 3 == len(rep["paths"]) == len(rep["cut"])


def test_smlambda_command(tmp_path, capsys):
    assert run(["smlambda", "qn:3"]) == 0
    assert out_json(capsys)["result"]["verdict"] is True
    faults = tmp_path / "f.txt"
    faults.write_text("1 3\n5 1\n")
    assert run(["smlambda", "qn:3", "--faults", str(faults)]) == 1
    rep = out_json(capsys)["result"]
    assert rep["verdict"] is False and rep["faults"] == [[1, 3], [1, 5]]


def test_verify_command(capsys):
    assert run(["verify", "--graph", "qn:3", "--r", "1"]) == 0
    assert out_json(capsys)["result"]["verdict"] == "holds"
    assert run(["verify", "--graph", "qn:3", "--r", "1", "--m", "2"]) == 1
    assert out_json(capsys)["result"]["verdict"] == "refuted"


def test_verify_sampled(capsys):
    argv = ["verify", "--graph", "cq3", "--r", "1", "--mode", "sampled", "--samples", "50", "--seed", "2"]
    assert run(argv) == 0
    rep = out_json(capsys)
    assert rep["seed"] == 2 and rep["result"]["sets_examined"] == 50


def test_break_command(capsys):
    assert run(["break", "--graph", "qn:4", "--r", "1"]) == 0
    rep = out_json(capsys)["result"]
    assert rep["verdict"] == "refuted" and len(rep["breaking_set"]) == 3


def test_lemma27_command(capsys):
    assert run(["lemma27", "--graph", "qn:3", "--r", "1"]) == 0
    rep = out_json(capsys)["result"]
    assert rep["passed"] and rep["sets_examined"] == 299


def test_invalid_configs(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--graph", "qn:3", "--r", "1", "--mode", "sampled"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["build", "--graph", "random:4"])
    assert exc.value.code == 2
    assert run(["build", "--graph", "no/such/file"]) == 2
    assert run(["witness", "--graph", "qn:3", "--r", "2"]) == 2
    assert run(["verify", "--graph", "qn:4", "--r", "2", "--budget", "10"]) == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("verify", budget=0).validate()
    RunConfig("verify", mode="sampled", seed=1).validate()


def test_reproduce_subset(capsys):
    assert run(["reproduce", "--only", "5", "8"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("[PASS] criterion 5")
    assert out[1].startswith("[PASS] criterion 8")
