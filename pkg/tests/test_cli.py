import csv
import io
import json
from pathlib import Path

import pytest

from twisted_zhu.cli import main, read_config

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--example", "heisenberg", "--twist-order", "2", "--level", "0",
                       "--cutoff", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["dims_per_weight"] == [1, 0, 0, 0, 0] and doc["basis"] == ["1"]


def test_compute_virasoro_level_one(capsys):
    code, out, _ = run(capsys, "compute", "--example", "virasoro", "--central-charge", "1/2", "--level", "1",
                       "--cutoff", "6")
    assert code == 0
    assert json.loads(out)["basis"][:4] == ["1", "L(-2)", "L(-2)^2", "L(-2)^3"]


@pytest.mark.parametrize("argv", [
    ["compute", "--twist-order", "2", "--level", "2/3+1"],
    ["compute", "--cutoff", "11"],
    ["compute", "--twist-order", "3"],
    ["compute", "--example", "virasoro", "--twist-order", "2"],
    ["compute", "--central-charge", "1/0", "--example", "virasoro"],
    ["verify", "--checks", "nonsense"],
    ["verify", "--modules", "fock_twisted"],
    ["scan", "--cutoffs", "3,x"],
])
def test_invalid_configs_exit_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_large_cutoff_acknowledged(capsys, monkeypatch):
    import twisted_zhu.cli as cli

    monkeypatch.setattr(cli, "HARD_CUTOFF", 2)
    assert run(capsys, "compute", "--cutoff", "3")[0] == 2
    assert run(capsys, "compute", "--cutoff", "3", "--allow-large-cutoff")[0] == 0


def test_verify_default_set(capsys):
    code, out, _ = run(capsys, "verify", "--twist-order", "2", "--level", "1/2", "--cutoff", "4",
                       "--checks", "associativity,identity,center,ideal,surjection,anti-isomorphism,"
                       "odd-vanishing,representation,contraction,layers,jacobi")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "twisted-zhu/report/v1" and rep["status"] == "pass"
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_verify_surjection_skipped_at_zero(capsys):
    code, out, _ = run(capsys, "verify", "--level", "0", "--checks", "surjection")
    assert code == 0
    (c,) = json.loads(out)["checks"]
    assert c["status"] == "skipped" and c["reason"]


def test_negative_control(capsys):
    code, out, err = run(capsys, "verify", "--twist-order", "2", "--level", "1/2", "--cutoff", "4", "--perturb",
                         "--checks", "associativity")
    assert code == 1 and "FAIL associativity" in err
    (c,) = json.loads(out)["checks"]
    assert c["status"] == "fail" and c["witness"][0]["triple"]


def test_perturbation_needs_two_classes(capsys):
    code, _, err = run(capsys, "verify", "--twist-order", "2", "--level", "0", "--perturb", "--checks",
                       "associativity")
    assert code == 2


def _strip(text):
    doc = json.loads(text)
    doc.pop("timing")
    return json.dumps(doc, indent=2)


def test_determinism_across_runs_and_threads(capsys):
    args = ["verify", "--twist-order", "2", "--level", "1", "--cutoff", "5",
            "--checks", "associativity,ideal,representation,dl-identity"]
    outs = [_strip(run(capsys, *args, "--jobs", j)[1]) for j in ("1", "1", "4")]
    assert outs[0] == outs[1] == outs[2]


def test_scan_table(capsys):
    code, out, _ = run(capsys, "scan", "--twist-order", "2", "--levels", "0,1/2,1", "--cutoffs", "3,4,5")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 9 and doc["monotone"]
    code, out, _ = run(capsys, "scan", "--levels", "0", "--cutoffs", "3")
    assert len(json.loads(out)["rows"]) == 1
    code, out, _ = run(capsys, "scan", "--levels", "0,1", "--cutoffs", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["level", "cutoff", "filtration_dims", "monotone"] and len(rows) == 3


def test_config_file_and_overrides(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# settings\nexample = virasoro\ncentral-charge = 1/2\nlevel = 1\ncutoff = 3\n")
    assert read_config(str(cfg))["central_charge"] == "1/2"
    code, out, _ = run(capsys, "compute", "--config", str(cfg), "--cutoff", "4")
    assert code == 0 and json.loads(out)["cutoff"] == 4
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert run(capsys, "compute", "--config", str(bad))[0] == 2


def test_csv_outputs(tmp_path, capsys):
    out = tmp_path / "table.csv"
    assert run(capsys, "compute", "--twist-order", "2", "--level", "1/2", "--cutoff", "4", "--format", "csv",
               "--out", str(out))[0] == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == ["*", "1", "a(-1)^2"]
    code, text, _ = run(capsys, "verify", "--level", "0", "--checks", "identity", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[1][:2] == ["identity", "pass"]


@pytest.mark.parametrize("name,argv", [
    ("heisenberg_t2_level_1_2_w4.json", ["--twist-order", "2", "--level", "1/2", "--cutoff", "4"]),
    ("virasoro_level_1_w6.json", ["--example", "virasoro", "--level", "1", "--cutoff", "6"]),
    ("heisenberg_t2_level_1_w6.csv", ["--twist-order", "2", "--level", "1", "--cutoff", "6", "--format", "csv"]),
])
def test_golden_files(tmp_path, capsys, name, argv):
    out = tmp_path / name
    assert run(capsys, "compute", *argv, "--out", str(out))[0] == 0
    assert out.read_bytes() == (GOLDEN / name).read_bytes()
