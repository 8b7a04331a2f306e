import json
import subprocess
import sys

import pytest

from cyclic_avoidance import verify
from cyclic_avoidance.cli import main
from cyclic_avoidance.formats import parse_bfile
from cyclic_avoidance.perm import AvoidanceSpec
from cyclic_avoidance.sequences import SequenceFamily


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    assert run(capsys, "count", "--one-line", "3421,4321", "--cycle", "213", "--n", "7") == (0, "89\n", "")
    assert run(capsys, "count", "--spec", "1324,1423;213", "--n", "4")[:2] == (0, "5\n")


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "--spec", ";213", "--n", "3")
    assert code == 0
    assert out == "(1,2,3)\n(1,3,2)\n"
    code, out, _ = run(capsys, "enum", "--spec", "1324,1423;213", "--n", "5")
    lines = out.splitlines()
    assert len(lines) == 11 and lines == sorted(lines)


def test_seq_formats(capsys, tmp_path):
    args = ["seq", "--spec", "4321;213", "--from", "2", "--to", "6"]
    code, out, _ = run(capsys, *args, "--format", "csv")
    assert out == "n,count\n2,1\n3,2\n4,5\n5,13\n6,34\n"
    code, out, _ = run(capsys, *args, "--format", "json")
    assert json.loads(out) == [{"n": n, "count": c} for n, c in [(2, 1), (3, 2), (4, 5), (5, 13), (6, 34)]]
    path = tmp_path / "b.txt"
    code, out, _ = run(capsys, *args, "--format", "bfile", "--output", str(path))
    assert out == ""
    data = path.read_bytes()
    assert b"\r" not in data
    assert parse_bfile(data.decode("utf-8")) == [(2, 1), (3, 2), (4, 5), (5, 13), (6, 34)]


def test_outputs_are_byte_stable(capsys):
    for argv in (["seq", "--spec", "1324,1423;213", "--to", "8", "--format", "csv"],
                 ["enum", "--spec", "3412,4321;213", "--n", "6"],
                 ["verify", "--theorem", "T4.8", "--to", "7", "--format", "json"]):
        first = run(capsys, *argv)
        assert run(capsys, *argv) == first


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "C3.6", "--to", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_match"] is True
    assert [r["brute_force_count"] for r in doc["rows"]] == [1, 2, 5, 13, 34]
    code, out, _ = run(capsys, "verify", "--theorem", "T3.4", "--tau", "34521", "--to", "8")
    assert code == 0 and "all_match: True" in out


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    bad = verify.TheoremEntry(AvoidanceSpec.parse("4321;213"), SequenceFamily.POW2_N_MINUS_2)
    monkeypatch.setitem(verify.REGISTRY, "C3.6", bad)
    code, out, _ = run(capsys, "verify", "--theorem", "C3.6", "--to", "6")
    assert code == 1
    assert "all_match: False" in out


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "--map", "L22", "--spec", "3421,4321;213", "--n", "8")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {r["check"] for r in rows} == {"round_trip", "transport"}
    assert all(r["pass"] for r in rows)
    code, out, _ = run(capsys, "bijection", "--map", "INV", "--spec", "1324,1423;213", "--n", "6")
    assert code == 0
    assert json.loads(out.splitlines()[1])["spec_out"] == "1324,1342;312"
    # the preset restriction on L23 is picked up when the pair matches
    code, out, _ = run(capsys, "bijection", "--map", "L23", "--spec", "1324,1423;213",
                       "--spec-out", "132;213", "--n", "7")
    assert code == 0


def test_bijection_failure_exit_code(capsys):
    code, out, _ = run(capsys, "bijection", "--map", "C24", "--spec", "4321;213",
                       "--spec-out", "4321;312", "--n", "6")
    assert code == 1


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", "--spec", "1324,1423;213", "--n", "8", "--format", "json")
    doc = json.loads(out)
    assert doc["total"] == 57
    assert doc["counts_by_j"]["2"] == 10 and doc["counts_by_j"]["8"] == 6
    assert sum(s["plus"] for s in doc["plus_minus"]) == 11
    code, out, _ = run(capsys, "partition", "--spec", "1324,1423;213", "--n", "6")
    assert code == 0 and "plus" in out


@pytest.mark.parametrize("argv", [
    ["count", "--spec", "44;213", "--n", "4"],
    ["count", "--n", "4"],
    ["count", "--spec", "4321;213", "--one-line", "4321", "--n", "4"],
    ["seq", "--spec", "4321;213", "--to", "13"],
    ["verify", "--theorem", "T3.4", "--to", "6"],
    ["verify", "--theorem", "T3.4", "--tau", "3412", "--to", "6"],
    ["verify", "--theorem", "E3", "--from", "3", "--to", "6"],
])
def test_argument_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "NOPE", "--to", "4"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclic_avoidance", "count", "--spec", "4312,4321;213",
                          "--n", "6"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "16\n"
