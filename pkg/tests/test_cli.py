from __future__ import annotations

import json

import pytest

from braided_bicrossed.cli import main
from braided_bicrossed.io import load_dataset


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_example_trivial_actions_verifies(capsys, tmp_path):
    path = tmp_path / "ta.json"
    code, out, _ = run(capsys, "example", "trivial-actions", "--p", 3, "--verify", "all", "--export", path)
    assert code == 0, out
    assert "closed form" in out and "FAIL" not in out
    assert load_dataset(path).datum.mp.nG == 9


def test_example_with_unrealized_braiding_exits_1(capsys, tmp_path):
    code, out, _ = run(capsys, "example", "p4q", "--p", 3, "--q", 2, "--r", 1, "--verify", "realization")
    assert code == 1 and "FAIL" in out
    code, out, _ = run(capsys, "example", "p4q", "--p", 3, "--q", 2, "--r", 0, "--verify", "all")
    assert code == 0, out


def test_verify_qtable_and_realize(capsys, tmp_path):
    ds = tmp_path / "p4q.json"
    assert run(capsys, "example", "p4q", "--r", 1, "--export", ds)[0] == 0
    code, out, _ = run(capsys, "verify", "--input", ds, "--check", "basic,theorem")
    assert code == 0, out
    qfile = tmp_path / "q.json"
    assert run(capsys, "qtable", "--input", ds, "--out", qfile)[0] == 0
    data = json.loads(qfile.read_text())
    assert data["conductor"] == 3 and len(data["q"]) == 9
    rfile, bfile = tmp_path / "r.json", tmp_path / "b.json"
    code, out, _ = run(capsys, "realize", "--input", ds, "--universal", "--biproduct",
                       "--biproduct-out", bfile, "--out", rfile)
    assert code == 0, out
    assert "dimension 162" in out and bfile.exists()
    code, out, _ = run(capsys, "realize", "--input", ds, "--realization", rfile)
    assert code == 0, out
    assert run(capsys, "realize", "--input", ds, "--universal", "--orientation", "transposed")[0] == 0


def test_equiv(capsys, tmp_path):
    left, right, other = tmp_path / "l.json", tmp_path / "r.json", tmp_path / "o.json"
    run(capsys, "example", "cyclic", "--N", 4, "--M", 2, "--omega", 3, "--mu", 2, "--export", left)
    run(capsys, "example", "cyclic", "--N", 4, "--M", 2, "--omega", 0, "--mu", 5, "--export", right)
    run(capsys, "example", "cyclic", "--N", 4, "--M", 2, "--omega", 0, "--mu", 2, "--export", other)
    code, out, _ = run(capsys, "equiv", "--left", left, "--right", right)
    assert code == 0, out
    assert "ν" in out
    code, out, _ = run(capsys, "equiv", "--left", left, "--right", other)
    assert code == 1 and "no gauge" in out


def test_search(capsys, tmp_path):
    mp = tmp_path / "mp.json"
    run(capsys, "example", "s3", "--export", mp)
    out_dir = tmp_path / "found"
    out_dir.mkdir()
    code, out, _ = run(capsys, "search", "--mp", mp, "--conductor", 3, "--max-results", 2, "--out-dir", out_dir)
    assert code == 0 and "found" in out
    assert sorted(p.name for p in out_dir.iterdir()) == ["datum_1.json", "datum_2.json"]
    code, out, _ = run(capsys, "verify", "--input", out_dir / "datum_2.json")
    assert code == 0, out


@pytest.mark.parametrize("argv", [
    ["verify", "--input", "/nonexistent/file.json"],
    ["verify", "--input", "{bad}", "--check", "bogus"],
    ["example", "trivial-actions", "--p", "4"],
])
def test_errors_exit_2(capsys, tmp_path, argv):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    argv = [str(bad) if a == "{bad}" else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_json_and_usage_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, _, err = run(capsys, "verify", "--input", bad)
    assert code == 2 and "SchemaError" in err
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
