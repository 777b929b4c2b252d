import json

import pytest

from e6wb import cli, verify


@pytest.fixture
def shared(monkeypatch, wb):
    monkeypatch.setattr(verify, "Workbench", lambda: wb)
    return wb


def test_tables_subht_text(shared, capsys):
    assert cli.main(["tables", "subht"]) == 0
    out = capsys.readouterr().out
    for key, value in (("|rH|", 24), ("|r⊥|", 28), ("|bH|", 14), ("|b⊥|", 12)):
        assert f"{key}  expected {value}  computed {value}" in out


def test_tables_subt_json(shared, capsys):
    assert cli.main(["tables", "subt", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["table"] == "subt"
    assert [r["computed"] for r in data["rows"]] == [36, 16, 10, 16]
    assert set(data["rows"][0]) == {"key", "expected", "computed"}


def test_tables_fano_grid(shared, capsys):
    assert cli.main(["tables", "fano"]) == 0
    lines = capsys.readouterr().out.splitlines()
    grid = [line.split() for line in lines[1:9]]
    assert all(row[n + 1] == "r1,H" for n, row in enumerate(grid))


def test_unknown_table_is_a_usage_error(capsys):
    assert cli.main(["tables", "nope"]) == 2


def test_unknown_section_is_a_usage_error(shared, capsys):
    assert cli.main(["verify", "--section", "nope"]) == 2


def test_verify_single_section(shared, capsys):
    assert cli.main(["verify", "--section", "orbit"]) == 0
    out = capsys.readouterr().out
    assert "== orbit" in out and "== basis" not in out


def test_fault_injection_names_jacobi(capsys):
    assert cli.main(["verify", "--section", "jacobi", "--inject-fault", "0,1,2"]) == 1
    out = capsys.readouterr().out
    assert "FAILED jacobi: jacobi identity defects" in out


def test_chains_dot(shared, tmp_path, capsys):
    out = tmp_path / "chains.dot"
    assert cli.main(["chains", "--out", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert '"su(2,H)" [label=' in text
    targets = {line.split("->")[1].strip(' ";') for line in text.splitlines() if line.strip().startswith('"su(2,H)" ->')}
    assert {"su(3,H)_1", "su(3,H)_2", "su(2,1,H)_1", "su(2,1,H)_2"} <= targets


def test_chains_io_error(shared, tmp_path):
    assert cli.main(["chains", "--out", str(tmp_path / "missing" / "x.dot")]) == 2


def test_dump_round_trip(shared, tmp_path, capsys):
    out = tmp_path / "dump.json"
    assert cli.main(["dump", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    states = verify.recheck(data)
    for name, rows in data["sections"].items():
        assert states[name] == [r["status"] for r in rows]
    names = {r["name"] for r in data["records"]}
    assert "su(3,1,H)_2" in names


def test_recheck_detects_tampering():
    dump = {"sections": {"x": [{"key": "k", "expected": 1, "computed": 2, "status": "pass"}]}}
    assert verify.recheck(dump) == {"x": ["fail"]}


def test_plain_rendering():
    from fractions import Fraction

    assert verify.plain((1, Fraction(1, 2), Fraction(4, 2))) == [1, "1/2", 2]


def test_threads_env(monkeypatch):
    monkeypatch.setenv("E6WB_THREADS", "3")
    assert verify.worker_count() == 3
    monkeypatch.setenv("E6WB_THREADS", "zero")
    assert verify.worker_count() == 1


def test_threaded_run_matches_serial(wb):
    names = ["subh", "subt", "star"]
    serial = verify.run_sections(names, wb, threads=1)
    threaded = verify.run_sections(names, wb, threads=3)
    assert verify.to_json(serial) == verify.to_json(threaded)
