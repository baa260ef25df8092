import json
import subprocess
import sys

import pytest

from goeritz.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_invariant_text(capsys):
    code, out, _ = run(["invariant", "3", "2"], capsys)
    assert code == 0
    assert "goeritz (3)" in out
    code, out, _ = run(["invariant", "4", "4"], capsys)
    assert code == 0 and "goeritz (2,0,0)" in out


def test_invariant_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariant", "1", "5"])
    assert exc.value.code == 2


def test_invariant_json_and_csv(capsys):
    code, out, _ = run(["invariant", "3", "6", "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["goeritz"] == ["0", "0"]
    assert doc["cor53"]["computed_a"] == "36" and doc["cor53"]["claimed_a"] == "1"
    code, out, _ = run(["invariant", "3", "6", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert lines[0] == "p,q,r,class,goeritz,nullity,zero_order,leading,cor53_a_match"
    assert lines[1] == "3,6,3,odd-even,0;0,2,2,36,False"


def test_verify_rows(capsys):
    code, out, _ = run(["verify", "--p-max", "3", "--q-max", "9"], capsys)
    assert code == 0
    assert "T(3,6) odd-even r=3 goeritz=(0,0)" in out
    assert "T(3,9) odd-odd r=3 goeritz=(2,2)" in out
    assert out.splitlines()[-1].startswith("checked 15, path-agreements 15, cor53-a-mismatches")


def test_verify_desk_scale(capsys):
    code, out, _ = run(["verify", "--p-max", "6", "--q-max", "6"], capsys)
    assert code == 0
    assert out.splitlines()[-1].startswith("checked 15, path-agreements 15,")


def test_verify_jobs_deterministic(capsys):
    _, one, _ = run(["verify", "--p-max", "7", "--q-max", "8", "--format", "csv"], capsys)
    _, four, _ = run(["verify", "--p-max", "7", "--q-max", "8", "--format", "csv", "--jobs", "3"], capsys)
    assert one == four


def test_verify_json_summary(capsys):
    _, out, _ = run(["verify", "--p-max", "3", "--q-max", "6", "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["summary"]["checked"] == len(doc["rows"]) == 9
    assert doc["summary"]["failures"] == 0


def test_trace(capsys):
    code, out, _ = run(["trace", "3", "4"], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[-1] == "1 2 1 1 1 -2 | op2 | 3 | (3)"
    assert {line.split(" | ")[2] for line in lines} == {"3"}
    code, out, _ = run(["trace", "4", "3", "--format", "json"], capsys)
    assert json.loads(out)[-1]["state"]["h"] == "-2"


def test_trace_rejects_even(capsys):
    code, _, err = run(["trace", "4", "6"], capsys)
    assert code == 2 and "even pipeline" in err and "g4" in err
    code, _, _ = run(["trace", "5", "5"], capsys)
    assert code == 2


def test_matrix(capsys):
    code, out, _ = run(["matrix", "2", "2", "--which", "full"], capsys)
    assert code == 0 and out == "2 2\n2 -2\n-2 2\n"
    code, out, _ = run(["matrix", "4", "6", "--which", "g3", "--variant", "p"], capsys)
    assert code == 0 and out.startswith("6 6\n")
    code, _, err = run(["matrix", "3", "4", "--which", "g4"], capsys)
    assert code == 2 and "even" in err


def test_alexander_and_homology(capsys):
    code, out, _ = run(["alexander", "3", "2"], capsys)
    assert out == "P(t) = 1 - t + t^2\nzero_order 0\nleading 3\n"
    code, out, _ = run(["alexander", "3", "6", "--format", "json"], capsys)
    assert json.loads(out)["leading"] == "36"
    code, out, _ = run(["homology", "3", "6"], capsys)
    assert out == "Z + Z\n"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "g.txt"
    code, out, _ = run(["homology", "3", "3", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text() == "Z_2 + Z_2\n"
    code, _, err = run(["homology", "3", "3", "--out", str(tmp_path / "no" / "x")], capsys)
    assert code == 1 and "no" in err


def test_bench(capsys):
    code, out, _ = run(["bench", "--sizes", "3,4", "4,4", "--repeat", "1"], capsys)
    assert code == 0
    assert "T(3,4)" in out and "T(4,4)" in out
    code, _, _ = run(["bench", "--sizes", "3x4"], capsys)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "goeritz", "homology", "2", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Z_2\n"
