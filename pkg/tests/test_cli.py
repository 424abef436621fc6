"""Command line behavior: subcommands, output files, exit codes."""

import json
import subprocess
import sys

import pytest

from perspectra import __version__
from perspectra.census import SCHEMA_VERSION
from perspectra.cli import run, spec_from_config
from perspectra.incidence import from_json, to_json, verify
from perspectra.families import perm_spec, skew_perspective


def _construct(tmp_path, name, *argv):
    out = tmp_path / name
    assert run(["construct", *argv, "-o", str(out)]) == 0
    return out


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
    text = capsys.readouterr().out
    assert __version__ in text and SCHEMA_VERSION in text


def test_usage_error_exit_code_2():
    with pytest.raises(SystemExit) as exc:
        run(["construct"])          # --family is required
    assert exc.value.code == 2


def test_construct_and_verify(tmp_path, capsys):
    path = _construct(tmp_path, "g.json", "--family", "gras", "--n", "5")
    assert run(["verify", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["signature"] == [10, 3, 10, 3]


def test_construct_skew_with_catalog_axis(tmp_path):
    path = _construct(tmp_path, "w2.json", "--family", "skew", "--n", "4",
                      "--skew", "(1,2)", "--axis", "W2")
    config = from_json(path.read_text())
    assert verify(config).as_tuple() == (15, 4, 20, 3)


def test_construct_mveb_edge_list(tmp_path):
    path = _construct(tmp_path, "mv.json", "--family", "mveb", "--n", "4",
                      "--graph", "1-2,2-3")
    config = from_json(path.read_text())
    assert verify(config).as_tuple() == (15, 4, 20, 3)


def test_construct_zeta(tmp_path):
    path = _construct(tmp_path, "z.json", "--family", "zeta")
    config = from_json(path.read_text())
    assert verify(config).as_tuple() == (15, 4, 20, 3)


def test_verify_reports_violation_with_exit_1(tmp_path, capsys):
    bad = {"points": ["w", "x", "y", "z"], "lines": [[0, 1, 2], [0, 1, 3]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    assert run(["verify", str(path), "--json"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["violation"] == "not partially linear"


def test_analyze_free_and_skew_class(tmp_path, capsys):
    path = _construct(tmp_path, "c.json", "--family", "skew", "--n", "4",
                      "--skew", "(1,2)")
    assert run(["analyze", str(path), "--free-k", "5", "--skew-class",
                "--centers", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["free_count"] == 4          # two sides + two fixed indices
    assert data["skew_class"] == "induced"
    assert data["alternate_centers"] == [3, 4]


def test_iso_command(tmp_path, capsys):
    p1 = _construct(tmp_path, "a.json", "--family", "skew", "--n", "4",
                    "--skew", "id", "--axis", "W2")
    p2 = _construct(tmp_path, "b.json", "--family", "skew", "--n", "4",
                    "--skew", "(3,4)")
    assert run(["iso", str(p1), str(p2), "--json", "--witness"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["isomorphic"] is True
    assert len(data["witness"]) == 15


def test_aut_command(tmp_path, capsys):
    path = _construct(tmp_path, "g6.json", "--family", "gras", "--n", "6")
    assert run(["aut", str(path), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["automorphisms"] == 720


def test_census_command_writes_file(tmp_path, capsys):
    out = tmp_path / "census.json"
    assert run(["census", "--family", "perm", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema_version"] == SCHEMA_VERSION
    assert all(e["family"] == "perm" for e in data["entries"])


def test_identify_command(tmp_path, capsys):
    path = _construct(tmp_path, "q.json", "--family", "quasigras", "--n", "4")
    assert run(["identify", str(path)]) == 0
    assert "quasi-Grassmannian R4" in capsys.readouterr().out


def test_realize_command(tmp_path, capsys):
    path = _construct(tmp_path, "c4.json", "--family", "skew", "--n", "4",
                      "--skew", "(1,2,3,4)")
    out = tmp_path / "coords.json"
    assert run(["realize", str(path), "--case", "c4",
                "--params", "beta2=2,x=2,y=2", "-o", str(out)]) == 0
    coords = json.loads(out.read_text())
    assert len(coords) == 15
    assert all(len(v) == 3 for v in coords.values())


def test_realize_rejects_mismatched_input(tmp_path, capsys):
    path = _construct(tmp_path, "id.json", "--family", "skew", "--n", "4",
                      "--skew", "id")
    assert run(["realize", str(path), "--case", "c4",
                "--params", "beta2=2,x=2,y=2"]) == 1
    assert "error:" in capsys.readouterr().err


def test_search_pg_command(tmp_path, capsys):
    path = _construct(tmp_path, "d.json", "--family", "skew", "--n", "3",
                      "--skew", "id")
    assert run(["search-pg", str(path), "--q", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "none"


def test_export_dot(tmp_path, capsys):
    path = _construct(tmp_path, "d.json", "--family", "skew", "--n", "3",
                      "--skew", "id")
    assert run(["export", str(path), "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("graph levi {")


def test_missing_file_is_domain_error(capsys):
    assert run(["verify", "/nonexistent/x.json"]) == 1
    assert "error:" in capsys.readouterr().err


def test_spec_from_config_roundtrip():
    spec = perm_spec(4, "(1,2,3)")
    back = spec_from_config(skew_perspective(spec))
    assert back.delta.same_map(spec.delta)
    assert back.axis.lines == spec.axis.lines


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "perspectra.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "perspectra" in proc.stdout
