import io
import json
import subprocess
import sys

import pytest

from rainbowtri.cli import (EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_SCHEMA,
                            EXIT_UNSAT, EXIT_USAGE, main)


def run_cli(capsys, *argv, stdin=None):
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = main(list(argv))
        finally:
            sys.stdin = old
    else:
        code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# construct / color
# ---------------------------------------------------------------------------

def test_construct_barrel_to_file(tmp_path, capsys):
    out = tmp_path / "g.json"
    code, _, _ = run_cli(capsys, "construct", "--family", "hk", "--k", "6",
                         "--out", str(out))
    assert code == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["n"] == 20
    assert len(doc["rotations"]) == 20
    assert doc["labels"]["0"] == "v0"
    assert doc["family"] == {"k": 6, "name": "hk"}


def test_construct_fixture_stdout(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "fixture",
                           "--name", "octahedron")
    assert code == EXIT_OK
    assert json.loads(out)["n"] == 6


def test_construct_text_format(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "fn", "--n", "10",
                           "--format", "text")
    assert code == EXIT_OK
    assert "n=10" in out and "edges=24" in out


def test_construct_json_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "construct", "--family", "fn", "--n", "8")
    code, out2, _ = run_cli(capsys, "construct", "--family", "fn", "--n", "8")
    assert out1 == out2


def test_color_emits_graph_and_coloring(capsys):
    code, out, _ = run_cli(capsys, "color", "--family", "hk", "--k", "5")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["coloring"]["palette"] == 7
    assert len(doc["coloring"]["edges"]) == 30


def test_color_fixture_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "color", "--family", "fixture",
                           "--name", "k4")
    assert code == EXIT_USAGE


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_color_pipe_verify_passes(capsys):
    _, colored, _ = run_cli(capsys, "color", "--family", "fn", "--n", "11")
    code, out, _ = run_cli(capsys, "verify", "--forbid", "5,6", stdin=colored)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["pass"] is True
    assert report["rainbow"]["5"]["count"] == 0


def test_verify_failure_exit_code(tmp_path, capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "k4")
    coloring = {"palette": 3, "edges": [[0, 1, 1], [0, 2, 2], [0, 3, 3],
                                        [1, 2, 3], [1, 3, 2], [2, 3, 1]]}
    gpath = tmp_path / "g.json"
    cpath = tmp_path / "c.json"
    gpath.write_text(graph_doc)
    cpath.write_text(json.dumps(coloring))
    code, out, _ = run_cli(capsys, "verify", "--graph", str(gpath),
                           "--coloring", str(cpath), "--forbid", "3")
    assert code == EXIT_FAIL
    assert json.loads(out)["claims"]["no_rainbow_3"] is False


def test_verify_text_format(capsys):
    _, colored, _ = run_cli(capsys, "color", "--family", "hk", "--k", "5")
    code, out, _ = run_cli(capsys, "verify", "--forbid", "4",
                           "--format", "text", stdin=colored)
    assert code == EXIT_OK
    assert "overall: pass" in out


def test_verify_without_coloring_is_schema_error(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "k4")
    code, _, err = run_cli(capsys, "verify", "--forbid", "3", stdin=graph_doc)
    assert code == EXIT_SCHEMA


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def test_construct_pipe_search_unsat(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "octahedron")
    code, out, _ = run_cli(capsys, "search", "--palette", "12",
                           "--forbid", "4", stdin=graph_doc)
    assert code == EXIT_UNSAT
    assert json.loads(out)["status"] == "UNSAT"


def test_search_sat_exit_zero(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "icosahedron")
    code, out, _ = run_cli(capsys, "search", "--palette", "7", "--forbid", "4",
                           stdin=graph_doc)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["status"] == "SAT"
    assert doc["witness"]["palette"] == 7


def test_search_budget_exit_code(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "icosahedron")
    code, out, _ = run_cli(capsys, "search", "--palette", "7", "--forbid", "4",
                           "--budget-nodes", "3", "--no-precheck",
                           stdin=graph_doc)
    assert code == EXIT_BUDGET
    assert json.loads(out)["status"] == "BUDGET_EXCEEDED"


def test_search_kernel_flag(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "k4")
    code, out, _ = run_cli(capsys, "search", "--palette", "3", "--forbid", "3",
                           "--kernel", "py", "--no-precheck", stdin=graph_doc)
    assert code == EXIT_UNSAT
    assert json.loads(out)["stats"]["backend"] == "py"


# ---------------------------------------------------------------------------
# count / export
# ---------------------------------------------------------------------------

def test_count_four_cycles_of_barrel5(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "hk", "--k", "5")
    code, out, _ = run_cli(capsys, "count", "--length", "4", stdin=graph_doc)
    assert code == EXIT_OK
    assert json.loads(out) == {"count": 30, "length": 4, "n": 12}


def test_export_dot_with_colors(capsys):
    _, colored, _ = run_cli(capsys, "color", "--family", "fn", "--n", "6")
    code, out, _ = run_cli(capsys, "export", "--format", "dot", stdin=colored)
    assert code == EXIT_OK
    assert out.startswith("graph rainbowtri {")
    assert 'label="u1"' in out
    assert '[color="#' in out and 'label="5"' in out


def test_export_dot_plain_graph(capsys):
    _, graph_doc, _ = run_cli(capsys, "construct", "--family", "fixture",
                              "--name", "k4")
    code, out, _ = run_cli(capsys, "export", "--format", "dot", stdin=graph_doc)
    assert code == EXIT_OK
    assert "0 -- 1;" in out


# ---------------------------------------------------------------------------
# error paths
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["construct", "--family", "hk"],                      # --k missing
    ["construct", "--family", "nope", "--k", "5"],        # bad choice
    ["construct", "--family", "hk", "--k", "4"],          # family range
    ["search", "--palette", "5", "--forbid", "x"],        # bad forbid list
    ["verify", "--forbid", "2"],                          # length < 3
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code = main(argv)
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_schema_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 4, "rotations": [[1], [0, 2], [1, 3], [2]]}')
    code, _, err = run_cli(capsys, "count", "--graph", str(bad), "--length", "3")
    assert code == EXIT_SCHEMA


def test_help_exits_ok(capsys):
    assert main(["--help"]) == EXIT_OK
    capsys.readouterr()


def test_real_shell_pipeline():
    pipeline = ("rainbowtri color --family fn --n 9 | "
                "rainbowtri verify --forbid 5,6,7,8")
    proc = subprocess.run(["bash", "-c", pipeline], capture_output=True,
                          text=True)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["pass"] is True