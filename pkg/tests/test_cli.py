import subprocess
import sys

import pytest

from srdom.cli import main
from srdom.graphs import family, read_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def porcelain(text):
    return dict(line.split("=", 1) for line in text.splitlines())


def test_gen_counts(tmp_path, capsys):
    f = tmp_path / "g.txt"
    assert run(capsys, "gen", "ladder", "3", "--out", str(f))[0] == 0
    g = read_edge_list(str(f))
    assert (g.vertex_count, g.edge_count) == (6, 7)
    assert g == family("ladder", 3)
    code, out, _ = run(capsys, "gen", "--family", "circular-ladder", "--n", "3")
    assert code == 0 and out.splitlines()[0] == "6 9"


@pytest.mark.parametrize("argv", [
    ["gen", "cycle", "2"],
    ["gen"],
    ["gen", "wheel", "4"],
    ["solve", "--in", "/nonexistent"],
    ["solve", "path", "20", "--method", "exhaustive"],
    ["solve", "path", "5", "--method", "dp"],
    ["table", "ladder", "5", "2"],
])
def test_input_errors_exit_1(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_cap_guidance(capsys):
    code, _, err = run(capsys, "solve", "ladder", "9", "--method", "exhaustive")
    assert code == 1 and "--method dp" in err


@pytest.mark.parametrize("argv,want", [
    (["--family", "circular-ladder", "--n", "5"], "4"),
    (["--family", "ladder", "--n", "2"], "3"),
    (["--family", "ladder", "--n", "1000", "--method", "dp"], "502"),
    (["complete", "3", "--method", "exhaustive"], "2"),
])
def test_solve_weights(argv, want, capsys):
    code, out, _ = run(capsys, "solve", *argv, "--porcelain")
    fields = porcelain(out)
    assert code == 0 and fields["weight"] == want and fields["valid"] == "yes"


def test_solve_then_verify(tmp_path, capsys):
    g, lab = tmp_path / "g.txt", tmp_path / "f.txt"
    run(capsys, "gen", "circular-ladder-complement", "4", "--out", str(g))
    assert run(capsys, "solve", "--in", str(g), "--labeling-out", str(lab), "--deterministic")[0] == 0
    code, out, _ = run(capsys, "verify", str(g), str(lab))
    assert code == 0 and "weight: 4" in out


def test_verify_figure_and_failures(tmp_path, capsys):
    g = tmp_path / "g.txt"
    run(capsys, "gen", "ladder", "2", "--out", str(g))
    good, bad, short = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    good.write_text("0 -1\n1 1\n2 2\n3 1\n")
    bad.write_text("0 -1\n1 -1\n2 -1\n3 -1\n")
    short.write_text("0 1\n1 1\n")
    code, out, _ = run(capsys, "verify", str(g), str(good))
    assert code == 0 and "weight: 3" in out
    code, out, _ = run(capsys, "verify", str(g), str(bad), "--porcelain")
    assert code == 2 and porcelain(out)["sum-violations"] == "0,1,2,3"
    assert run(capsys, "verify", str(g), str(short))[0] == 1


def test_bounds(tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", "ladder", "11", "--porcelain")
    assert code == 0 and porcelain(out)["degree-bound"] == "2"
    assert porcelain(run(capsys, "bounds", "cycle", "6", "--porcelain")[1])["size-bound"] == "-3"
    f = tmp_path / "iso.txt"
    f.write_text("3 1\n0 1\n")
    code, out, _ = run(capsys, "bounds", "--in", str(f))
    assert code == 0 and "size bound: inapplicable" in out


def test_table_exit_codes(capsys):
    code, out, _ = run(capsys, "table", "ladder", "2", "7", "--check")
    assert code == 0 and "MISMATCH" not in out
    code, out, _ = run(capsys, "table", "ladder-complement", "4", "7", "--check")
    assert code == 0
    assert all(line.split()[1] == "2" for line in out.splitlines()[2:])


def test_table_reports_discrepancy(capsys):
    code, out, _ = run(capsys, "table", "circular-ladder", "3", "7", "--check")
    row5 = next(line for line in out.splitlines() if line.startswith("5 "))
    assert "figure(4)" in row5 and "4 (ladder-dp)" in row5
    # exact solver disagrees with the closed form at n = 4 and 6
    assert code == 3
    code, _, _ = run(capsys, "table", "circular-ladder", "3", "7")
    assert code == 0


def test_table_blank_above_cap(capsys):
    code, out, _ = run(capsys, "table", "ladder-complement", "8", "8")
    row = out.splitlines()[2]
    assert "branch-bound" not in row


def test_construct(capsys):
    assert run(capsys, "construct", "ladder", "4")[0] == 0
    code, out, _ = run(capsys, "construct", "ladder-complement", "3")
    assert code == 2 and "valid: no" in out


def test_dot(tmp_path, capsys):
    g, lab = tmp_path / "g.txt", tmp_path / "f.txt"
    run(capsys, "gen", "ladder", "2", "--out", str(g))
    lab.write_text("0 -1\n1 1\n2 2\n3 1\n")
    code, out, _ = run(capsys, "dot", str(g), "--labeling", str(lab))
    assert code == 0 and out.startswith("graph")
    labels = [line.split('label="')[1].split('"')[0] for line in out.splitlines() if "class=" in line]
    assert labels == ["-1", "1", "2", "1"]
    assert 'class="label-two"' in out
    code, out, _ = run(capsys, "dot", str(g))
    assert code == 0 and "class=" not in out and out.count(" -- ") == 4
    assert run(capsys, "dot", str(tmp_path / "missing"))[0] == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "srdom", "solve", "ladder", "4", "--porcelain"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "weight=4" in r.stdout
