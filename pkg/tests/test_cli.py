"""Command-line behaviour: outputs, determinism, exit codes, fault injection."""

import json

import pytest

from blobcat import verify
from blobcat.cli import main
from blobcat.triangles import blobbed_entry


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_matches_table(capsys):
    code, out, _ = run(capsys, "count", "--n", "9", "--s", "4", "--which", "d")
    assert code == 0 and out == "221004\n"


def test_dim_output(capsys):
    code, out, _ = run(capsys, "dim", "--n", "2")
    assert code == 0
    assert out == "19\n[6, 10, 3]\n"


def test_reduce_output(capsys):
    code, out, _ = run(capsys, "reduce", "--n", "2", "--level", "sb", "--word", "1,0,2,1")
    assert code == 0 and out == "k * [1]\n"
    code, out, _ = run(capsys, "reduce", "--n", "3", "--level", "tl", "--word", "")
    assert code == 0 and out == "1 * []\n"


def test_triangle_csv(capsys):
    code, out, _ = run(
        capsys, "triangle", "--kind", "blobbed", "--rows", "3", "--cols", "4",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i\\j,0,1,2,3"
    assert lines[1] == "0,1,0,1,0"
    assert lines[3] == "2,2,0,4,0"


def test_triangle_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "triangle", "--kind", "blobbed", "--rows", "6", "--cols", "6",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "blobbed"
    for i, row in enumerate(payload["entries"]):
        for j, value in enumerate(row):
            assert int(value) == blobbed_entry(i, j)


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--s", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 25
    words = {e["word"] for e in payload["elements"]}
    assert "2" in words
    positives = [e for e in payload["elements"] if e["positive"]]
    assert len(positives) == 14
    assert all(e["blocks"] is not None for e in positives)
    assert all(
        e["blocks"] is None and e["blobbed"] is None
        for e in payload["elements"]
        if not e["positive"]
    )


def test_enumerate_filters_and_limit(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--s", "1", "--positive")
    payload = json.loads(out)
    assert payload["filter"] == "positive" and payload["count"] == 14
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--s", "1", "--blobbed")
    payload = json.loads(out)
    assert payload["filter"] == "blobbed" and payload["count"] == 10
    code, out, _ = run(
        capsys, "enumerate", "--n", "2", "--s", "1", "--blobbed", "--limit", "4"
    )
    assert json.loads(out)["count"] == 4


def test_grid_from_blocks_and_word(capsys):
    code, out, _ = run(
        capsys, "grid", "--blocks", "7:8,4:8,3:7,1:4,0:1,0:0", "--render", "svg"
    )
    assert code == 0 and out.count("<circle") == 19
    code, out_blocks, _ = run(capsys, "grid", "--blocks", "0:1", "--n", "1")
    code, out_word, _ = run(capsys, "grid", "--word", "0,1", "--n", "1")
    assert out_blocks == out_word
    assert out_blocks.splitlines()[1].count("*") == 2


def test_grid_rejects_non_positive_word(capsys):
    code, _, err = run(capsys, "grid", "--word", "1,0,1", "--n", "2")
    assert code == 2 and "positive" in err


def test_malformed_input_exits_two(capsys):
    code, _, err = run(capsys, "reduce", "--n", "2", "--level", "sb", "--word", "1,x")
    assert code == 2 and "error" in err


def test_output_determinism(capsys):
    argv = ("enumerate", "--n", "2", "--s", "2", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    argv = ("triangle", "--kind", "classical", "--rows", "8", "--cols", "8")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_tables_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 0
    assert "PASS tables:excluded: 90 cells" in out
    assert out.strip().endswith("3/3 checks passed")


def test_verify_max_n_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables", "--max-n", "3")
    assert code == 0
    assert "PASS tables:excluded: 30 cells" in out
    assert "PASS tables:blobbed: 30 cells" in out


def test_verify_reports_injected_fault(capsys):
    from blobcat import enumeration

    def broken(n, s):
        value = enumeration.d_count(n, s)
        return value + 1 if (n, s) == (4, 2) else value

    checks = verify.verify_tables(d_fn=broken)
    failed = [c for c in checks if not c.ok]
    assert len(failed) == 1
    assert "(n=4,s=2) got 149 want 148" in failed[0].detail


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    def broken_suite(max_n=9):
        return [verify.Check("tables:excluded", False, "injected")]

    monkeypatch.setitem(verify.SUITES, "tables", broken_suite)
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 1 and "FAIL tables:excluded: injected" in out
