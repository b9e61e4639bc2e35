import json

from lapsep.cli import main
from lapsep.graphs import complete_graph, graph_from_edges, to_graph6

K22_G6 = to_graph6(graph_from_edges(4, [(0, 1), (0, 2), (3, 1), (3, 2)]))
P4_G6 = to_graph6(graph_from_edges(4, [(0, 1), (1, 2), (2, 3)]))
C6_G6 = to_graph6(graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)]))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_separable(capsys):
    code, out, _ = run(capsys, "check", K22_G6, "--labeling", "0 1 2 3",
                       "--shape", "2x2")
    assert code == 0
    assert "verdict: SEPARABLE" in out
    assert "degree-condition PASS" in out and "ppt-exact PASS" in out


def test_check_entangled(capsys):
    code, out, _ = run(capsys, "check", P4_G6, "--labeling", "0 1 2 3",
                       "--shape", "2x2")
    assert code == 0
    assert "verdict: ENTANGLED" in out
    assert "certificate: vertex 0 degree 1 -> 2" in out


def test_check_bad_labeling_exits_1(capsys):
    code, _, err = run(capsys, "check", P4_G6, "--labeling", "0 0 1 2",
                       "--shape", "2x2")
    assert code == 1 and "error" in err


def test_check_bad_graph6_exits_1(capsys):
    code, _, err = run(capsys, "check", "nope!", "--labeling", "0 1 2 3",
                       "--shape", "2x2")
    assert code == 1 and "error" in err


def test_check_dump_matrix(capsys):
    code, out, _ = run(capsys, "check", K22_G6, "--labeling", "0 1 2 3",
                       "--shape", "2x2", "--dump-matrix")
    assert code == 0
    assert "rho:" in out and "1/4" in out and "rho^pT" in out


def test_pt_graph_fail_line(capsys):
    code, out, _ = run(capsys, "pt-graph", P4_G6, "--labeling", "0 1 2 3",
                       "--shape", "2x2")
    assert code == 0
    assert "degree condition: FAIL" in out
    assert out.splitlines()[0].startswith("pt-graph6: ")


def test_pt_graph_pass_line(capsys):
    code, out, _ = run(capsys, "pt-graph", K22_G6, "--labeling", "0 1 2 3",
                       "--shape", "2x2")
    assert code == 0 and "degree condition: PASS" in out
    assert f"pt-graph6: {K22_G6}" in out  # fixed point


def test_entangle_construction(capsys):
    code, out, _ = run(capsys, "entangle", C6_G6, "--shape", "2x3")
    assert code == 0
    assert "case: CASE2" in out and "seed: 0" in out
    assert "labeling (shape 2x3):" in out
    assert "ppt=no" in out


def test_entangle_complete_graph_exits_1(capsys):
    code, _, err = run(capsys, "entangle", to_graph6(complete_graph(4)),
                       "--shape", "2x2")
    assert code == 1 and "complete graphs" in err


def test_entangle_budget_exceeded_exits_2(capsys):
    code, _, err = run(capsys, "entangle", K22_G6, "--shape", "2x2",
                       "--budget", "1")
    assert code == 2 and "inconclusive" in err


def test_classify_tsv(capsys):
    code, out, _ = run(capsys, "classify", P4_G6, "--shape", "2x2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("graph6\t")
    assert lines[1].split("\t")[3] == "SE"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", P4_G6, "--shape", "2x2",
                       "--format", "json")
    assert code == 0
    row = json.loads(out.strip())
    assert row["class"] == "SE" and row["n_separable"] + row["n_entangled"] == 24


def test_scan_file_and_exit_codes(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text(f"{to_graph6(complete_graph(4))}\n{P4_G6}\n")
    code, out, _ = run(capsys, "scan", str(path), "--shape", "2x2")
    assert code == 0
    assert len(out.strip().splitlines()) == 3

    path.write_text("garbage\n")
    code, out, _ = run(capsys, "scan", str(path), "--shape", "2x2")
    assert code == 2


def test_scan_budget_marks_incomplete_and_exits_2(tmp_path, capsys):
    path = tmp_path / "one.g6"
    path.write_text(P4_G6 + "\n")
    code, out, _ = run(capsys, "scan", str(path), "--shape", "2x2",
                       "--full", "--budget", "3")
    assert code == 2
    assert "UNRESOLVED" in out or "SE" in out  # partial class, flagged row


def test_scan_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(f"{P4_G6}\n"))
    code, out, _ = run(capsys, "scan", "-", "--shape", "2x2")
    assert code == 0 and "SE" in out


def test_scan_deterministic_across_jobs(tmp_path, capsys, n4_nonempty):
    path = tmp_path / "n4.g6"
    path.write_text("\n".join(n4_nonempty) + "\n")

    def strip_timing(text):
        return ["\t".join(line.split("\t")[:-1]) for line in text.splitlines()]

    _, out1, _ = run(capsys, "scan", str(path), "--shape", "2x2", "--jobs", "1")
    _, out2, _ = run(capsys, "scan", str(path), "--shape", "2x2", "--jobs", "3")
    assert strip_timing(out1) == strip_timing(out2)


def test_env_shape_default(capsys, monkeypatch):
    monkeypatch.setenv("LAPSEP_SHAPE", "2x2")
    code, out, _ = run(capsys, "classify", P4_G6)
    assert code == 0 and "SE" in out


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("LAPSEP_SHAPE", "3x3")  # wrong for n=4; flag must win
    code, out, _ = run(capsys, "classify", P4_G6, "--shape", "2x2")
    assert code == 0 and "SE" in out


def test_missing_shape_errors(capsys, monkeypatch):
    monkeypatch.delenv("LAPSEP_SHAPE", raising=False)
    code, _, err = run(capsys, "classify", P4_G6)
    assert code == 1 and "no shape" in err


def test_full_flag(capsys):
    code, out, _ = run(capsys, "classify", P4_G6, "--shape", "2x2", "--full")
    assert code == 0 and "SE" in out


def test_console_entry_point():
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "lapsep.cli", "classify", P4_G6, "--shape", "2x2"],
        capture_output=True, text=True)
    assert proc.returncode == 0 and "SE" in proc.stdout
