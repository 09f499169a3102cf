"""CLI subcommands, output formats, and exit codes."""

import json
import subprocess
import sys

import pytest

from cliquecolour.cli import main
from cliquecolour.graph import cycle_graph, parse_edge_list, serialize_edge_list


def write_graph(path, g):
    path.write_bytes(serialize_edge_list(g))
    return str(path)


@pytest.fixture
def c5_file(tmp_path):
    return write_graph(tmp_path / "c5.edges", cycle_graph(5))


# ------------------------------------------------------------- gen


def test_gen_writes_parsable_deterministic_output(tmp_path, capsys):
    out = tmp_path / "g.edges"
    assert main(["gen", "--n", "12", "--p", "0.5", "--seed", "3", "--out", str(out)]) == 0
    g = parse_edge_list(out.read_bytes())
    assert g.n == 12
    assert main(["gen", "--n", "12", "--p", "0.5", "--seed", "3"]) == 0
    stdout = capsys.readouterr().out
    assert stdout.encode() == out.read_bytes()


def test_gen_rejects_bad_probability(capsys):
    assert main(["gen", "--n", "5", "--p", "2.0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_exponent_mode(capsys):
    assert main(["gen", "--n", "16", "--x", "0.5"]) == 0
    g = parse_edge_list(capsys.readouterr().out)
    assert g.n == 16


# ------------------------------------------------------------- cliques


def test_cliques_summary(c5_file, capsys):
    assert main(["cliques", "--in", c5_file]) == 0
    out = capsys.readouterr().out
    assert "count=5" in out and "max_size=2" in out


def test_cliques_stats_json(c5_file, capsys):
    assert main(["cliques", "--in", c5_file, "--stats", "--k", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 5
    assert payload["max_size"] == 2
    assert payload["triangle_total"] == 0
    assert payload["max_k1_cliques_per_edge"] == 0


def test_cliques_list(c5_file, capsys):
    assert main(["cliques", "--in", c5_file, "--list"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert "0 1" in lines and "0 4" in lines


def test_cliques_overflow_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path / "r.edges", cycle_graph(12))
    assert main(["cliques", "--in", path, "--max-count", "3"]) == 3
    assert "budget" in capsys.readouterr().err


# ------------------------------------------------------------- color


def test_color_emits_lines_and_summary(c5_file, capsys):
    assert main(["color", "--in", c5_file, "--method", "domset"]) == 0
    out_lines = capsys.readouterr().out.strip().splitlines()
    summary = json.loads(out_lines[-1])
    assert summary["valid"] is True
    assert summary["method"] == "domset"
    assert summary["palette"] == 3
    vertex_lines = [l for l in out_lines if l.startswith("v ")]
    assert len(vertex_lines) == 5
    assert vertex_lines[0].split() == ["v", "0", "0"]


def test_color_out_file(c5_file, tmp_path, capsys):
    out = tmp_path / "col.txt"
    assert main(["color", "--in", c5_file, "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 5
    summary = json.loads(capsys.readouterr().out)
    assert summary["palette"] == 3


def test_color_methods_and_flags(c5_file, capsys):
    for extra in (
        ["--method", "trifree"],
        ["--method", "trifree", "--paper-faithful"],
        ["--method", "dense"],
        ["--method", "portfolio", "--p", "0.5", "--seed", "7"],
    ):
        assert main(["color", "--in", c5_file, *extra]) == 0
        summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert summary["valid"] is True


# ------------------------------------------------------------- exact


def test_exact_json(c5_file, capsys):
    assert main(["exact", "--in", c5_file, "--mcf", "--chi"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["chi_c"] == 3
    assert payload["valid"] is True
    assert payload["chi"] == 3
    assert payload["mcf"] == {"size": 2, "vertices": payload["mcf"]["vertices"], "chi_lower": 3}
    assert len(payload["colouring"]) == 5


def test_exact_budget_exit_code(tmp_path, capsys):
    import oracles

    path = write_graph(tmp_path / "h.edges", oracles.random_graph(40, 0.5, seed=1))
    assert main(["exact", "--in", path, "--mcf", "--budget-ms", "1"]) == 3
    assert "budget" in capsys.readouterr().err


# ------------------------------------------------------------- bounds


def test_bounds_json(capsys):
    assert main(["bounds", "--n", "1000000", "--x", "0.3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["regime"]["label"] == "a"
    assert payload["constants"]["triangles_per_edge_bound"] is not None


def test_bounds_error_exit(capsys):
    assert main(["bounds", "--n", "2", "--p", "0.5"]) == 2


# ------------------------------------------------------------- sweep/report


def test_sweep_and_seed_override(tmp_path, capsys):
    out = tmp_path / "s.csv"
    cfg = tmp_path / "s.cfg"
    cfg.write_text(f"n = 8\np = 0.5\ntrials = 2\nmethods = portfolio\nout = {out}\n")
    assert main(["sweep", "--config", str(cfg)]) == 0
    assert "rows=2" in capsys.readouterr().out
    base = out.read_bytes()
    assert main(["sweep", "--config", str(cfg), "--seed", "99"]) == 0
    capsys.readouterr()
    assert out.read_bytes() != base  # a different master seed moves the cells


def test_sweep_bad_config_exit(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("n = 8\n")
    assert main(["sweep", "--config", str(cfg)]) == 2


def test_sweep_missing_file_exit(tmp_path):
    assert main(["sweep", "--config", str(tmp_path / "nope.cfg")]) == 2


def test_report_json(c5_file, capsys):
    assert main(["report", "--in", c5_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["portfolio"]["colors"] == 3
    assert payload["exact"]["clique_chromatic"]["value"] == 3


def test_parse_error_names_line(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_bytes(b"p edge 3 1\ne 5 9\n")
    assert main(["cliques", "--in", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


# ------------------------------------------------------------- entry point


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "cliquecolour.cli", "gen", "--n", "4", "--p", "1.0"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith(b"p edge 4 6")
