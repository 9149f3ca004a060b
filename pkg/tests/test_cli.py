"""Command-line interface: exit codes, CSV/JSON schemas, scan determinism
across worker counts, reference-table comparison, and data-dir overrides."""

import json
import shutil
import subprocess
import sys
from pathlib import Path

from click.testing import CliRunner

from lcrit import newformdata, reference
from lcrit.cli import main

PACKAGED_DATA = Path(newformdata.__file__).parent / "data"


def invoke(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_check_reports_both_sums():
    r = invoke("check", "--level", "32", "--disc", "-371")
    assert r.exit_code == 0
    assert "F(0) = 4" in r.output
    assert "F(1/3) = 4" in r.output
    assert "L = 0" in r.output


def test_check_level27_row():
    r = invoke("check", "--level", "27", "--disc", "-3115")
    assert r.exit_code == 0
    assert "F(0) = 8" in r.output
    assert "F(1/2) = 8" in r.output
    assert "L = 0" in r.output


def test_check_precondition_exit_code():
    r = invoke("check", "--level", "32", "--disc", "-7")
    assert r.exit_code == 2
    assert "3 (mod 8)" in r.output
    r = invoke("check", "--level", "32", "--disc", "-9")
    assert r.exit_code == 2
    r = invoke("check", "--level", "13", "--disc", "-11")
    assert r.exit_code == 2


def test_check_json_with_forms():
    r = invoke("check", "--level", "32", "--disc", "-11", "--json", "--dump-forms")
    assert r.exit_code == 0
    obj = json.loads(r.output)
    assert obj["level"] == 32 and obj["D"] == -11
    assert (obj["f_x1"], obj["f_x2"]) == (0, 1)
    assert obj["verdict"] == "nonzero"
    assert obj["forms_x1"] == []
    assert obj["forms_x2"] == [[-32, 17, -2]]
    assert obj["count_x1"] == 0 and obj["count_x2"] == 1


def test_check_with_oracle():
    r = invoke("check", "--level", "32", "--disc", "-11", "--oracle")
    assert r.exit_code == 0
    assert "oracle: nonzero" in r.output
    r = invoke("check", "--level", "32", "--disc", "-219", "--oracle")
    assert r.exit_code == 0
    assert "oracle: zero" in r.output


def _csv_rows(output):
    lines = output.strip().splitlines()
    assert lines[0] == "D,f_x1,f_x2,count_x1,count_x2,verdict"
    return {int(parts[0]): parts for parts in
            (line.split(",") for line in lines[1:])}


def test_scan_good_only_reproduces_known_rows():
    r = invoke("scan", "--level", "32", "--from", "-3", "--to", "-250",
               "--good-only", "--parallel", "1")
    assert r.exit_code == 0
    rows = _csv_rows(r.output)
    assert rows[-11][1:3] == ["0", "1"]
    assert rows[-19][1:3] == ["0", "1"]
    assert rows[-35][1:3] == ["0", "2"]
    assert rows[-219][1:3] == ["2", "2"]
    assert rows[-219][5] == "vanishes"
    assert rows[-11][5] == "nonzero"


def test_scan_level27_rows():
    r = invoke("scan", "--level", "27", "--from", "-3", "--to", "-300",
               "--parallel", "1")
    assert r.exit_code == 0
    rows = _csv_rows(r.output)
    assert rows[-7][1:3] == ["0", "2"]
    assert rows[-31][1:3] == ["2", "2"]
    assert rows[-115][1:3] == ["0", "4"]
    assert rows[-283][1:3] == ["2", "2"]


def test_scan_empty_range_header_only():
    r = invoke("scan", "--level", "32", "--from", "-5", "--to", "-9",
               "--good-only", "--parallel", "1")
    assert r.exit_code == 0
    assert r.output.strip() == "D,f_x1,f_x2,count_x1,count_x2,verdict"


def test_scan_deterministic_across_workers():
    serial = invoke("scan", "--level", "32", "--from", "-3", "--to", "-400",
                    "--parallel", "1")
    parallel = invoke("scan", "--level", "32", "--from", "-3", "--to", "-400",
                      "--parallel", "8")
    assert serial.exit_code == 0 and parallel.exit_code == 0
    assert serial.output == parallel.output


def test_scan_json_roundtrip():
    r = invoke("scan", "--level", "32", "--from", "-3", "--to", "-100",
               "--json", "--parallel", "1")
    assert r.exit_code == 0
    for line in r.output.strip().splitlines():
        obj = json.loads(line)
        assert set(obj) == {"D", "f_x1", "f_x2", "count_x1", "count_x2", "verdict"}
        assert obj["verdict"] == ("vanishes" if obj["f_x1"] == obj["f_x2"]
                                  else "nonzero")
        assert abs(obj["f_x1"]) <= obj["count_x1"]
        assert abs(obj["f_x2"]) <= obj["count_x2"]


def test_scan_to_file(tmp_path):
    out = tmp_path / "rows.csv"
    r = invoke("scan", "--level", "32", "--from", "-3", "--to", "-50",
               "--parallel", "1", "--out", str(out))
    assert r.exit_code == 0
    assert r.output == ""
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "D,f_x1,f_x2,count_x1,count_x2,verdict"
    assert len(lines) > 1


def test_scan_range_validation():
    assert invoke("scan", "--level", "32", "--from", "-50", "--to", "-3",
                  "--parallel", "1").exit_code == 2
    assert invoke("scan", "--level", "32", "--from", "3", "--to", "-50",
                  "--parallel", "1").exit_code == 2
    assert invoke("scan", "--level", "13", "--from", "-3", "--to", "-50",
                  "--parallel", "1").exit_code == 2


def test_tables_match_frozen_values():
    r = invoke("table", "maincor", "--max-abs-d", "5000", "--parallel", "1")
    assert r.exit_code == 0
    assert "all 7 rows match" in r.output
    r = invoke("table", "primes", "--max-abs-d", "6000", "--parallel", "2")
    assert r.exit_code == 0
    assert "all 6 rows match" in r.output
    r = invoke("table", "cubes", "--max-abs-d", "3200", "--parallel", "1")
    assert r.exit_code == 0
    assert "all 7 rows match" in r.output


def test_table_discs_reproduces_lists():
    r = invoke("table", "discs")
    assert r.exit_code == 0
    assert "all listed non-invariant values reproduced" in r.output
    assert "MISMATCH" not in r.output


def test_table_mismatch_exit_code(monkeypatch):
    monkeypatch.setattr(reference, "MAINCOR_ROWS", ((-11, 99, 99, "x"),))
    r = invoke("table", "maincor", "--parallel", "1")
    assert r.exit_code == 3
    assert "MISMATCH" in r.output


def test_congruent_command():
    r = invoke("congruent", "219")
    assert r.exit_code == 0
    assert "congruent assuming BSD" in r.output
    r = invoke("congruent", "11")
    assert r.exit_code == 0
    assert "not congruent (unconditional)" in r.output
    assert invoke("congruent", "10").exit_code == 2


def test_cubes_command():
    r = invoke("cubes", "31")
    assert r.exit_code == 0
    assert "infinitely many rational points assuming BSD" in r.output
    r = invoke("cubes", "7")
    assert r.exit_code == 0
    assert "finitely many rational points (unconditional)" in r.output
    assert invoke("cubes", "5").exit_code == 2


def test_data_dir_env_override(tmp_path, monkeypatch):
    # a data dir without newforms.json only breaks commands that need it
    monkeypatch.setenv("LCRIT_DATA_DIR", str(tmp_path))
    r = invoke("check", "--level", "32", "--disc", "-11")
    assert r.exit_code == 0
    r = invoke("check", "--level", "32", "--disc", "-11", "--oracle")
    assert r.exit_code == 2
    # a complete override directory restores the oracle path
    shutil.copy(PACKAGED_DATA / "newforms.json", tmp_path / "newforms.json")
    r = invoke("check", "--level", "32", "--disc", "-11", "--oracle")
    assert r.exit_code == 0
    assert "oracle: nonzero" in r.output


def test_data_dir_flag(tmp_path):
    shutil.copy(PACKAGED_DATA / "newforms.json", tmp_path / "newforms.json")
    r = invoke("check", "--level", "32", "--disc", "-11", "--oracle",
               "--data-dir", str(tmp_path))
    assert r.exit_code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lcrit.cli", "table",
                           "maincor", "--max-abs-d", "500", "--parallel", "1"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "all 6 rows match" in proc.stdout


def test_console_script_help():
    exe = shutil.which("lcrit")
    assert exe, "console script not installed"
    proc = subprocess.run([exe, "--help"], capture_output=True, text=True,
                          timeout=60)
    assert proc.returncode == 0
    assert "scan" in proc.stdout and "table" in proc.stdout
