from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from qmat.cli import main
from qmat.samples import f8, generator_2x4

F8 = f8()


def _write(tmp_path, doc, name="job.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def _run(capsys, argv):
    status = main(argv)
    return status, capsys.readouterr()


def _code_config():
    G = [[F8.coords(x) for x in row] for row in generator_2x4()]
    return {"field": {"p": 2}, "construction": {"type": "code", "ext": {"p": 2, "e": 3}, "G": G}}


def test_families_of_a_code(tmp_path, capsys):
    status, out = _run(capsys, ["families", "--config", _write(tmp_path, _code_config()), "--family", "flats"])
    assert status == 0
    assert json.loads(out.out)["counts"] == {"flats": 11}


def test_sample_construction_counts_cyclic_spaces(tmp_path, capsys):
    doc = {"construction": {"type": "sample", "name": "2x5"}}
    status, out = _run(capsys, ["families", "--config", _write(tmp_path, doc), "--family", "cyclic_spaces"])
    assert status == 0 and json.loads(out.out)["counts"]["cyclic_spaces"] == 102


def test_lattice_dot_and_json(tmp_path, capsys):
    path = _write(tmp_path, _code_config())
    status, out = _run(capsys, ["lattice", "--config", path, "--dot"])
    assert status == 0 and out.out.startswith("digraph cyclic_flats {") and "n0 -> n1;" in out.out
    status, out = _run(capsys, ["lattice", "--config", path])
    assert [n["label"] for n in json.loads(out.out)["nodes"]] == ["<0>", "<e2, e3, e4>"]


def test_axioms_pass_for_uniform(tmp_path, capsys):
    doc = {"field": {"p": 3}, "construction": {"type": "uniform", "k": 2, "n": 3}}
    status, out = _run(capsys, ["axioms", "--config", _write(tmp_path, doc)])
    assert status == 0 and json.loads(out.out)["passed"]


def test_bad_rank_table_exits_1_with_report(tmp_path, capsys):
    ranks = [{"rows": [], "rank": 1}, {"rows": [[1, 0]], "rank": 1}, {"rows": [[0, 1]], "rank": 1},
             {"rows": [[1, 1]], "rank": 1}, {"rows": [[1, 0], [0, 1]], "rank": 1}]
    doc = {"field": {"p": 2}, "construction": {"type": "rank_table", "n": 2, "ranks": ranks}}
    status, out = _run(capsys, ["axioms", "--config", _write(tmp_path, doc), "--scheme", "R"])
    assert status == 1
    assert json.loads(out.out)["report"]["violations"][0]["axiom"] == "R1"


def test_z_lattice_axioms_and_reconstruction(tmp_path, capsys):
    good = {"field": {"p": 2}, "construction": {"type": "z_lattice", "n": 4, "nodes": [
        {"rows": [], "rank": 0}, {"rows": [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "rank": 1}]}}
    status, out = _run(capsys, ["axioms", "--config", _write(tmp_path, good), "--scheme", "Z"])
    assert status == 0
    status, out = _run(capsys, ["reconstruct", "--config", _write(tmp_path, good)])
    assert status == 0 and len(json.loads(out.out)["flats"]["members"]) == 11
    bad = {"field": {"p": 2}, "construction": {"type": "z_lattice", "n": 2, "nodes": [
        {"rows": [], "rank": 1}, {"rows": [[1, 0], [0, 1]], "rank": 2}]}}
    status, out = _run(capsys, ["axioms", "--config", _write(tmp_path, bad), "--scheme", "Z"])
    assert status == 1


def test_code_minimal_summary(tmp_path, capsys):
    doc = {"construction": {"type": "sample", "name": "3x5"}}
    status, out = _run(capsys, ["code", "--config", _write(tmp_path, doc), "--minimal"])
    payload = json.loads(out.out)
    assert status == 0
    assert payload["summary"] == "61 minimal codewords" and payload["params"] == "[5,3]_{8/2}"
    assert payload["bridge"]["passed"]


def test_exit_codes_for_bad_input(tmp_path, capsys):
    assert main(["families", "--config", _write(tmp_path, {"construction": {"type": "magic"}})]) == 2
    assert main(["families", "--config", str(tmp_path / "missing.json")]) == 2
    doc = {"field": {"p": 2}, "construction": {"type": "uniform", "k": 2, "n": 4}}
    assert main(["families", "--config", _write(tmp_path, doc), "--max-subspaces", "10"]) == 3
    assert main(["families", "--config", _write(tmp_path, doc), "--family", "bogus"]) == 2
    capsys.readouterr()


def test_repro_and_out_file(tmp_path, capsys):
    out_file = tmp_path / "r.json"
    assert main(["repro", "2x4", "--out", str(out_file)]) == 0
    assert json.loads(out_file.read_text())["passed"]
    status, out = _run(capsys, ["repro", "2x4", "--dot"])
    assert status == 0 and out.out.count("->") == 1
    with pytest.raises(SystemExit):
        main(["repro", "nope"])


@pytest.mark.skipif(shutil.which("qmat") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["qmat", "repro", "3x3"], capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["passed"]
