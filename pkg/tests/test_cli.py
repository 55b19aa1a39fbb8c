from __future__ import annotations

import csv
import io
import json

import pytest

from reslie.catalog import sl2s
from reslie.cli import EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, EXIT_REFUSED, main
from reslie.modules import radical_module, baby_verma


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_planes_heisenberg(capsys):
    code, out, _ = run(capsys, "planes", "--builtin", "heisenberg", "--p", "5")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["count"] == 6
    assert len(rep["planes"]) == 6
    assert all("z" in pl for pl in rep["planes"])


def test_degree_of_radical(capsys):
    code, out, _ = run(capsys, "degree", "--builtin", "sl2s", "--p", "5", "--module", "radZ:0", "--j", "1")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["degrees"] == {"span(e, c0)": 10, "span(f, c0)": 9}
    assert rep["constant"] is False


def test_degree_methods_agree(capsys):
    seen = []
    for method in ("minors", "compound", "sections"):
        code, out, _ = run(capsys, "degree", "--builtin", "e_2", "--p", "3", "--module", "free", "--j", "1", "--method", method)
        assert code == EXIT_OK
        seen.append(json.loads(out)["degrees"])
    assert seen[0] == seen[1] == seen[2] and len(seen[0]) == 1


def test_compound_refuses_large_modules(capsys):
    code, _, err = run(capsys, "degree", "--builtin", "sl2s", "--module", "radZ:0", "--j", "1", "--plane", "e;c0", "--method", "compound")
    assert code == EXIT_REFUSED and json.loads(err)["error"] == "refused"


def test_paper_check_subset_passes(capsys):
    code, out, err = run(capsys, "paper-check", "--only", "1.1", "2.3", "6.1")
    assert code == EXIT_OK
    assert err.count("PASS") == 3
    assert json.loads(out)["failed"] == 0


def test_paper_check_failure_exit(capsys):
    code, out, err = run(capsys, "paper-check", "--only", "3.3")
    assert code == EXIT_CHECK_FAILED
    assert "FAIL" in err


def test_verify_and_nullcone(capsys):
    code, out, _ = run(capsys, "verify-algebra", "--builtin", "sl2", "--p", "3")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "nullcone", "--builtin", "sl2", "--p", "5")
    assert code == EXIT_OK and json.loads(out)["count"] == 6


def test_csv_output(capsys):
    code, out, _ = run(capsys, "jordan", "--builtin", "sl2", "--module", "L:3", "--x", "e", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and {"size", "count"} <= set(rows[0])


def test_json_is_deterministic(capsys):
    argv = ["rank", "--builtin", "sl2s", "--module", "Z:1", "--j", "2", "--seed", "3"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "modj", "--builtin", "sl2", "--module", "L:1", "--j", "2", "--output", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())


def test_invalid_inputs(capsys):
    assert run(capsys, "planes", "--builtin", "sl2", "--p", "4")[0] == EXIT_INVALID
    assert run(capsys, "planes", "--builtin", "nosuch")[0] == EXIT_INVALID
    code, _, err = run(capsys, "exp-check", "--builtin", "sl2", "--x", "h")
    assert code == EXIT_INVALID and json.loads(err)["error"] == "invalid input"
    code, _, err = run(capsys, "degree", "--builtin", "sl2s", "--module", "Z:0", "--j", "1", "--plane", "e;f")
    assert code == EXIT_INVALID
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_non_constant_rank_is_reported(capsys):
    code, out, _ = run(capsys, "degree", "--builtin", "witt", "--module", "Stop", "--j", "1")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert not rep["degrees"] and rep["non_constant_rank"]
    code, out, _ = run(capsys, "degree", "--builtin", "witt", "--module", "Stop", "--j", "1", "--plane", "e1;e3")
    assert code == EXIT_OK and list(json.loads(out)["non_constant_rank"]) == ["span(e1, e3)"]


def test_refusal(capsys):
    code, _, err = run(capsys, "planes", "--builtin", "e_3", "--p", "7", "--k", "3", "--bound", "10")
    assert code == EXIT_REFUSED
    assert json.loads(err)["error"] == "refused"


def test_algebra_and_module_files(tmp_path, capsys):
    L = sl2s(5)
    alg = tmp_path / "alg.json"
    alg.write_text(json.dumps(L.to_json()))
    code, out, _ = run(capsys, "verify-algebra", "--algebra-file", str(alg))
    assert code == EXIT_OK
    mod = tmp_path / "mod.json"
    mod.write_text(json.dumps(radical_module(baby_verma(L, 0)).to_json()))
    code, out, _ = run(capsys, "degree", "--module", str(mod), "--j", "1")
    assert code == EXIT_OK
    assert json.loads(out)["degrees"] == {"span(e, c0)": 10, "span(f, c0)": 9}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify-algebra", "--algebra-file", str(bad))[0] == EXIT_INVALID
