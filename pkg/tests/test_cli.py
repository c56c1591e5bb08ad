import json

import pytest

from sullivan.cli import EXIT_CONFIG, EXIT_IO, EXIT_MATH, EXIT_OK, main
from sullivan.graphs import path_graph


def run(args):
    return main(args)


def test_build_and_analyze_mk(tmp_path, capsys):
    out = tmp_path / "m6.json"
    assert run(["build", "--family", "mk", "--k", "6", "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert data["family"] == "mk" and data["k"] == 6
    assert run(["analyze", "--model", str(out), "--checks", "d2,dim,isolation"]) == EXIT_OK


def test_analyze_output_shape(tmp_path, capsys):
    out = tmp_path / "m6.json"
    run(["build", "--family", "mk", "--k", "6", "--out", str(out)])
    capsys.readouterr()
    assert run(["--quiet", "analyze", "--model", str(out)]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] and report["checks"]["d2"]


def test_build_odd_k_is_config_error(capsys):
    assert run(["build", "--family", "mk", "--k", "7"]) == EXIT_CONFIG


def test_corrupt_model_is_io_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["analyze", "--model", str(bad)]) == EXIT_IO
    # parameter/algebra mismatch is also treated as a corrupt file
    out = tmp_path / "m6.json"
    run(["build", "--family", "mk", "--k", "6", "--out", str(out)])
    data = json.loads(out.read_text())
    data["k"] = 8
    bad2 = tmp_path / "bad2.json"
    bad2.write_text(json.dumps(data))
    assert run(["analyze", "--model", str(bad2)]) == EXIT_IO


def test_verify_arith(tmp_path, capsys):
    out = tmp_path / "arith.json"
    assert (
        run(["--quiet", "verify-arith", "--family", "mk", "--k-max", "40", "--out", str(out)])
        == EXIT_OK
    )
    capsys.readouterr()
    report = json.loads(out.read_text())
    assert report["ok"] and len(report["reports"]) == 18  # even k in [6, 40]
    assert {"name", "value", "verdict"} <= set(report["reports"][0]["checks"][0])


def test_aut_subcommand(tmp_path, capsys):
    gpath = tmp_path / "p3.json"
    gpath.write_text(path_graph(3).to_json())
    assert run(["--quiet", "aut", "--graph", str(gpath)]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 2


def test_endos_subcommand(tmp_path, capsys):
    out = tmp_path / "m6.json"
    run(["build", "--family", "mk", "--k", "6", "--out", str(out)])
    rpath = tmp_path / "endos.json"
    assert run(["--quiet", "endos", "--model", str(out), "--report", str(rpath)]) == EXIT_OK
    report = json.loads(rpath.read_text())
    assert report["elements"] == ["zero", "identity"]
    assert report["invertible_count"] == 1
    assert report["degrees"]["zero"] == "0" and report["degrees"]["identity"] == "1"


def test_build_mng_via_graph_file(tmp_path, capsys):
    gpath = tmp_path / "p3.json"
    gpath.write_text(path_graph(3).to_json())
    out = tmp_path / "mng.json"
    assert (
        run(["build", "--family", "mng", "--n", "1", "--graph", str(gpath), "--out", str(out)])
        == EXIT_OK
    )
    capsys.readouterr()
    assert run(["--quiet", "endos", "--model", str(out)]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["invertible_count"] == 2


def test_realize_z2(capsys):
    assert run(["--quiet", "realize", "--group", "z2"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] and report["invertible_count"] == 2
    assert report["group_order"] == 2


def test_realize_unknown_group():
    assert run(["realize", "--group", "monster"]) == EXIT_CONFIG


def test_verify_all_with_config(tmp_path, capsys):
    cfg = tmp_path / "run.toml"
    cfg.write_text(
        "\n".join(
            [
                "[verify_all]",
                "k_list = [6]",
                "n_list = [1]",
                'graphs = ["path3"]',
                "k_max = 20",
                "n_max = 5",
            ]
        )
    )
    out = tmp_path / "all.json"
    assert run(["--quiet", "verify-all", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    assert report["ok"]
    assert any(name.startswith("endos[mng") for name in report["stages"])


def test_json_config(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"verify_all": {"k_list": [6], "n_list": [], "graphs": [], "k_max": 10, "n_max": 2}}))
    out = tmp_path / "all.json"
    assert run(["--quiet", "verify-all", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
