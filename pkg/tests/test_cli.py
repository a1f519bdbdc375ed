import json
import subprocess
import sys

import pytest

from qisv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complete_text(capsys):
    code, out, _ = run(capsys, "complete", "--seq", "2,3,5,6,8", "--n", "9")
    assert code == 0
    assert "one-line: (2,3,5,6,8,1,4,7,9)" in out
    assert "cycles: (1 2 3 5 8 7 4 6)" in out


def test_complete_json(capsys):
    code, out, _ = run(capsys, "complete", "--seq", "1,3", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"one_line": [1, 3, 2], "cycles": [[2, 3]]}


def test_complete_rejects_bad_sequence(capsys):
    code, _, err = run(capsys, "complete", "--seq", "3,2", "--n", "4")
    assert code == 64
    assert "not strictly increasing" in err


def test_verify_diagram(capsys):
    code, out, _ = run(capsys, "verify", "diagram", "--which", "tilde", "--k", "2", "--n", "5")
    assert code == 0
    assert "verified" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "map", "--map", "curran", "--k", "2", "--n", "4", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["status"] == "verified"
    assert d["params"] == {"k": 2, "n": 4}


@pytest.mark.parametrize("kind,extra", [("closure", []), ("beta-consistency", []), ("map", ["--map", "q"])])
def test_verify_kinds(capsys, kind, extra):
    code, _, _ = run(capsys, "verify", kind, "--k", "2", "--n", "4", *extra)
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["verify", "diagram", "--k", "2", "--n", "5"],
    ["verify", "diagram", "--which", "dot", "--k", "5", "--n", "5"],
    ["verify", "map", "--k", "2", "--n", "5"],
    ["verify", "map", "--map", "eta-tilde", "--n", "5"],
    ["verify", "closure", "--k", "0", "--n", "5"],
    ["report", "--max-n", "3"],
    ["verify", "bogus", "--n", "3"],
    ["complete", "--seq", "a,b", "--n", "3"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 64


def test_report(capsys, tmp_path):
    out_file = tmp_path / "cert.json"
    code, out, _ = run(capsys, "report", "--max-n", "5", "--out", str(out_file))
    assert code == 0
    assert "verified-with-assumptions" in out
    assert json.loads(out_file.read_text())["overall_status"] == "verified-with-assumptions"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qisv", "complete", "--seq", "2", "--n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "(2,1,3)" in proc.stdout


def test_exit_code_table():
    from qisv.cli import _exit_code
    from qisv.morphisms import Status

    assert [_exit_code(s, False) for s in Status] == [0, 1, 2]
    assert [_exit_code(s, True) for s in Status] == [0, 3, 3]


def test_complete_identity(capsys):
    code, out, _ = run(capsys, "complete", "--seq", "1,2", "--n", "2")
    assert code == 0
    assert "one-line: (1,2)" in out and "(identity)" in out
