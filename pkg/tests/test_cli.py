"""Command-line behavior: outputs, formats, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from weightsys.cli import main
from weightsys.graphs import TrivalentGraph, serialize_graph

DATA = Path(__file__).parent / "data"
THETA = str(DATA / "theta.tgf")
K4 = str(DATA / "k4.tgf")
K33 = str(DATA / "k33.tgf")


@pytest.fixture
def disconnected(tmp_path):
    g = TrivalentGraph(4, (4, 3, 5, 1, 0, 2, 10, 9, 11, 7, 6, 8))
    path = tmp_path / "two_thetas.tgf"
    path.write_bytes(serialize_graph(g))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", THETA, "--algebra", "gl:2")
    assert code == 0
    assert out == "12\n"
    code, out, _ = run(capsys, "eval", THETA, "--algebra", "so3")
    assert out == "-6\n"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", THETA, "--algebra", "gl:2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == {"schema_version": 1, "algebra": "gl:2",
                               "value": "12"}


def test_eval_missing_file(capsys):
    code, out, err = run(capsys, "eval", "no-such-file", "--algebra", "so3")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_eval_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.tgf"
    bad.write_text("v 2\ne 0 0\ne 2 3\ne 4 5\n")
    code, _, err = run(capsys, "eval", str(bad), "--algebra", "so3")
    assert code == 2
    assert "line 2" in err


def test_eval_unknown_algebra(capsys):
    code, _, err = run(capsys, "eval", THETA, "--algebra", "su2")
    assert code == 3
    assert "unknown algebra" in err


def test_poly_text(capsys):
    code, out, _ = run(capsys, "poly", THETA)
    assert code == 0
    assert out.splitlines() == [
        "wgl 2*N^3 - 2*N",
        "w_top 2",
        "spherical_embeddings 2",
        "planar true",
        "two_connected true",
    ]


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", THETA, "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema_version"] == 1
    assert payload["wgl"] == {"3": "2", "1": "-2"}
    assert payload["w_top"] == 2
    assert payload["planar"] is True


def test_poly_rejects_disconnected(capsys, disconnected):
    code, _, err = run(capsys, "poly", disconnected)
    assert code == 2
    assert "not connected" in err


def test_colorings_text(capsys):
    code, out, _ = run(capsys, "colorings", THETA)
    assert code == 0
    assert out.splitlines() == [
        "edge_3_colorings 6",
        "penrose -6",
        "w_sl2 -12",
    ]


def test_map_text(capsys):
    code, out, _ = run(capsys, "map", THETA)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "marking + +"
    assert "face 0 : 0 5" in lines
    assert "edge 0 (0 4) faces 0 1" in lines
    assert "outer_face 0" in lines
    assert "self_bordering false" in lines
    assert "four_colorings 24" in lines
    assert lines[-1] == "tait ok"


def test_map_json(capsys):
    code, out, _ = run(capsys, "map", K4, "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["marking"] == [1, 1, 1, 1]
    assert payload["four_colorings"] == 24
    assert payload["tait"] == "ok"
    assert payload["self_bordering"] is False
    assert len(payload["faces"]) == 4


def test_map_requires_spherical_embedding(capsys):
    code, _, err = run(capsys, "map", K33)
    assert code == 2
    assert "no spherical embedding" in err


def test_validate_text(capsys):
    code, out, _ = run(capsys, "validate", THETA)
    assert code == 0
    assert out.splitlines() == [
        "ok", "v 2", "e 3",
        "connected true", "two_connected true", "has_loop false",
        "genus 0",
    ]


def test_validate_with_algebra(capsys):
    code, out, _ = run(capsys, "validate", THETA, "--algebra", "so3")
    assert code == 0
    assert out.splitlines()[-1] == "algebra so3 ok"


def test_validate_disconnected_has_no_genus(capsys, disconnected):
    code, out, _ = run(capsys, "validate", disconnected)
    assert code == 0
    assert "connected false" in out.splitlines()
    assert "genus n/a" in out.splitlines()


def test_validate_bad_algebra(capsys):
    code, _, err = run(capsys, "validate", THETA, "--algebra", "gl:0")
    assert code == 3
    assert "error" in err


def test_survey_text(capsys):
    code, out, _ = run(capsys, "survey", "--max-v", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graphs 15"
    assert lines[1] == "v=2 15"
    identity_lines = [ln for ln in lines if ln.startswith("identity ")]
    assert len(identity_lines) == 7
    assert all(ln.endswith(" 15/15") for ln in identity_lines)
    assert lines[-1] == "failures 0"


def test_survey_json_dedup(capsys):
    code, out, _ = run(capsys, "survey", "--max-v", "4", "--dedup",
                       "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema_version"] == 1
    assert payload["summary"]["graphs_checked"] == 7
    assert payload["summary"]["graph_counts"] == {"2": 2, "4": 5}
    assert len(payload["reports"]) == 7
    assert all(all(r["identities"].values()) for r in payload["reports"])


def test_survey_no_loops(capsys):
    code, out, _ = run(capsys, "survey", "--max-v", "2", "--no-loops",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"]["graphs_checked"] == 6


@pytest.mark.parametrize("argv", [
    ("survey", "--max-v", "3"),
    ("survey", "--max-v", "0"),
    ("survey", "--max-v", "-2"),
    ("survey", "--max-v", "2", "--jobs", "0"),
])
def test_survey_rejects_bad_arguments(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_module_entry_point():
    ok = subprocess.run([sys.executable, "-m", "weightsys", "--help"],
                        capture_output=True, text=True)
    assert ok.returncode == 0
    assert "survey" in ok.stdout
    missing = subprocess.run([sys.executable, "-m", "weightsys"],
                             capture_output=True, text=True)
    assert missing.returncode == 2


def test_survey_output_independent_of_worker_count():
    runs = []
    for jobs in ("1", "2"):
        done = subprocess.run(
            [sys.executable, "-m", "weightsys", "survey", "--max-v", "2",
             "--jobs", jobs, "--format", "json"],
            capture_output=True, check=True)
        runs.append(done.stdout)
    assert runs[0] == runs[1]
