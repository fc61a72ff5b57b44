import subprocess
import sys

import pytest

from ramsey_stars.cli import main
from ramsey_stars.io import read_coloring


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute(capsys):
    assert run(capsys, "compute", "-t", "3", "-m", "2,3,3") == (0, "4\n", "")
    code, out, _ = run(capsys, "compute", "-t", "3", "-m", "3,4", "-s", "2", "--trace")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "5"
    assert lines[1].startswith('0: "two-star-base"')
    assert lines[-1].endswith("-> 5")


@pytest.mark.parametrize("argv", [
    ["compute", "-t", "3", "-m", "0,1,1"],
    ["compute", "-t", "2", "-m", "3", "-s", "2"],
    ["compute", "-t", "3", "-m", "1,2"],
    ["compute", "-t", "1", "-m", "1"],
    ["table", "-t", "3", "--m-min", "4", "--m-max", "3"],
])
def test_invalid_parameters(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_witness_then_verify(capsys, tmp_path):
    cert = tmp_path / "w.txt"
    dot = tmp_path / "w.dot"
    code, out, _ = run(capsys, "witness", "-t", "3", "-m", "4,2,3", "-o", str(cert), "--dot", str(dot))
    assert code == 0 and out.strip() == "R=5 rule=reduction-equality n=4"
    assert read_coloring(cert).n == 4 and dot.read_text().startswith("graph")
    assert run(capsys, "verify", str(cert), "-t", "3", "-m", "4,2,3")[:2] == (0, "AVOIDS\n")
    # the same certificate read against reordered stars no longer avoids
    code, out, _ = run(capsys, "verify", str(cert), "-t", "3", "-m", "2,3,4")
    assert code == 1 and out.startswith("ARRIVES target=")


def test_witness_to_stdout(capsys):
    code, out, err = run(capsys, "witness", "-t", "2", "-m", "2,2")
    assert code == 0
    assert out.startswith("ramsey-coloring v1\nn=2 t=2\n")
    assert "R=3" in err


def test_witness_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "witness", "-t", "2", "-m", "2,2", "-o", str(tmp_path / "no" / "x"))
    assert code == 4 and "cannot write" in err


def test_verify_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("ramsey-coloring v1\nn=3 t=2\n0 1 1\n")
    code, _, err = run(capsys, "verify", str(bad), "-t", "2", "-m", "2,2")
    assert code == 2 and "missing edge" in err
    assert run(capsys, "verify", str(tmp_path / "nope"), "-t", "2", "-m", "2,2")[0] == 2
    ok = tmp_path / "ok.txt"
    ok.write_text("ramsey-coloring v1\nn=2 t=2\n0 1 1\n")
    code, _, err = run(capsys, "verify", str(ok), "-t", "3", "-m", "2,2,2")
    assert code == 2 and "t=2" in err


def test_verify_arriving_random(capsys, tmp_path):
    code, out, _ = run(capsys, "random-coloring", "-n", "6", "-t", "2", "--seed", "3")
    path = tmp_path / "r.txt"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", str(path), "-t", "2", "-m", "3,3")
    assert code == 1 and out.startswith("ARRIVES")


def test_search(capsys):
    code, out, _ = run(capsys, "search", "-t", "3", "-m", "2,3,3", "--cap", "6")
    assert code == 0 and out.splitlines()[0] == "R = 4 (exact)"
    code, out, _ = run(capsys, "search", "-t", "2", "-m", "4,4", "--cap", "5")
    assert out.splitlines()[0] == "R >= 6 (cap_reached)"
    code, out, _ = run(capsys, "search", "-t", "2", "-m", "2", "-s", "2")
    assert code == 0 and "(exact)" in out


def test_table(capsys, tmp_path):
    fig = tmp_path / "f.png"
    code, out, _ = run(capsys, "table", "-t", "3", "--m-max", "3", "--oracle-check", "--figure", str(fig))
    rows = out.splitlines()
    assert code == 0 and len(rows) == 11
    assert all(r.endswith(",ok") for r in rows[1:])
    assert fig.stat().st_size > 0
    code, out, _ = run(capsys, "table", "-t", "3", "--m-max", "2", "--s-max", "2")
    assert code == 0 and len(out.splitlines()) == 1 + 3 * 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "ramsey_stars", "compute", "-t", "2", "-m", "3,4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "7\n"
