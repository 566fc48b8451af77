from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from t3recon import corpus
from t3recon.cli import main
from t3recon.graph import encode_graph6, format_edge_list, parse_graph6
from t3recon.ksets import connected_ksets, format_ksets
from t3recon.sweep import SweepConfig, SweepRecord, resolve_jobs, run_sweep, write_jsonl


def run(monkeypatch, capsys, argv: list[str], stdin: str = "") -> tuple[int, str, str]:
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def g6(g) -> str:
    return encode_graph6(g) + "\n"


def test_triples(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["triples"], g6(corpus.cycle(5)))
    assert code == 0
    assert out.splitlines()[0] == "n=5 k=3" and len(out.splitlines()) == 6
    code, out, _ = run(monkeypatch, capsys, ["triples", "--k", "4"], g6(corpus.complete(4)))
    assert out == "n=4 k=4\n0 1 2 3\n"
    code, _, err = run(monkeypatch, capsys, ["triples", "--k", "5"], g6(corpus.complete(4)))
    assert code == 2 and "--k" in err


def test_edge_list_input(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["triples"], format_edge_list(corpus.path(4)))
    assert out == "n=4 k=3\n0 1 2\n1 2 3\n"


def test_parse_error_reports_line(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["triples"], "n=3\n0 1\n1 1\n")
    assert code == 1 and "line 3" in err
    code, _, err = run(monkeypatch, capsys, ["lift"], "n=4 k=3\n0 1\n")
    assert code == 1 and "line 2" in err


def test_lift(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["lift"], format_ksets(connected_ksets(corpus.cycle(5), 3)))
    assert out == format_ksets(connected_ksets(corpus.cycle(5), 4))


def test_reconstruct_cycle(monkeypatch, capsys, tmp_path):
    path = tmp_path / "t3_c8.txt"
    path.write_text(format_ksets(connected_ksets(corpus.cycle(8), 3)))
    code, out, _ = run(monkeypatch, capsys, ["reconstruct", "--class", "cycle", str(path)])
    assert code == 0 and parse_graph6(out.strip()) == corpus.cycle(8)


def test_reconstruct_regular_planar_reports_degree(monkeypatch, capsys):
    t = format_ksets(connected_ksets(corpus.prism(4), 3))
    code, out, err = run(monkeypatch, capsys, ["reconstruct", "--class", "regular-planar"], t)
    assert parse_graph6(out.strip()) == corpus.prism(4) and "degree 3" in err


def test_reconstruct_usage_errors(monkeypatch, capsys):
    t = format_ksets(connected_ksets(corpus.petersen(), 3))
    code, _, err = run(monkeypatch, capsys, ["reconstruct", "--class", "srg"], t)
    assert code == 2 and "--k-degree" in err
    code, _, err = run(monkeypatch, capsys, ["reconstruct", "--class", "hexagonal"], t)
    assert code == 2
    code, out, _ = run(monkeypatch, capsys, ["reconstruct", "--class", "srg", "--k-degree", "3"], t)
    assert parse_graph6(out.strip()) == corpus.petersen()


def test_reconstruct_promise_violation(monkeypatch, capsys):
    t = format_ksets(connected_ksets(corpus.complete(5), 3))
    code, out, err = run(monkeypatch, capsys, ["reconstruct", "--class", "cycle"], t)
    assert code == 1 and out == "" and "cycle" in err


def test_check_strong_both(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["check-strong", "--method", "both"], g6(corpus.bull()) + g6(corpus.star(4)))
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0]["fast_verdict"] is True and recs[0]["oracle_verdict"] is True and recs[0]["agree"]
    assert recs[1]["fast_verdict"] is False and recs[1]["witness"] == "twin:1,2"


def test_realizations(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["realizations"], g6(corpus.complete(4)))
    assert len(out.splitlines()) == 10
    code, out, err = run(monkeypatch, capsys, ["realizations", "--limit", "4"], g6(corpus.complete(4)))
    assert len(out.splitlines()) == 4 and "truncated" in err


def test_connectivity_and_profile(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["connectivity"], g6(corpus.petersen()))
    assert json.loads(out)["kappa"] == 3 and json.loads(out)["exact"]
    code, out, _ = run(monkeypatch, capsys, ["profile"], g6(corpus.petersen()))
    prof = json.loads(out)
    assert prof["srg"] == [10, 3, 0, 1] and prof["planar"] is False


def test_neighborhoods(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["neighborhoods"], g6(corpus.cycle(5)))
    first = json.loads(out.splitlines()[0])
    assert first["elements"] == [[1, 2], [1, 4], [3, 4]]


def test_twins(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["twins", "--n", "4", "--class", "hamiltonian"])
    k4 = encode_graph6(corpus.complete(4))
    c4 = encode_graph6(corpus.cycle(4))
    assert " ".join(sorted((k4, c4))) in out.splitlines()
    code, _, err = run(monkeypatch, capsys, ["twins", "--n", "4", "--class", "bogus"])
    assert code == 2


def test_cli_is_deterministic(monkeypatch, capsys):
    outs = [run(monkeypatch, capsys, ["sweep", "--n", "4", "--mode", "census"])[1] for _ in range(2)]
    assert outs[0] == outs[1]
    lines = outs[0].splitlines()
    k4 = encode_graph6(corpus.complete(4))
    rec = next(json.loads(line) for line in lines if json.loads(line).get("graph6") == k4)
    assert rec["oracle_verdict"] is False
    assert json.loads(lines[-1])["total"] == 38


def test_sweep_bound(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["sweep", "--n", "7"])
    assert code == 1 and "bound" in err


def test_sweep_parallel_output_identical(tmp_path):
    serial, summary = run_sweep(SweepConfig(n=5))
    parallel, summary2 = run_sweep(SweepConfig(n=5, jobs=2, chunk=100))
    assert summary == summary2 and summary.total == 728 and summary.agree == 728
    a, b = io.StringIO(), io.StringIO()
    write_jsonl(serial, summary, a)
    write_jsonl(parallel, summary2, b)
    assert a.getvalue() == b.getvalue()


def test_sweep_record_fields():
    rec = SweepRecord("D~{", 5, True, True, True, None, ("F1",), 0)
    assert list(rec.as_json()) == [
        "graph6", "n", "fast_verdict", "oracle_verdict", "agree", "witness", "families_used", "elapsed_us",
    ]


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("RECON_JOBS", "3")
    assert resolve_jobs(None) == 3 and resolve_jobs(1) == 1
    monkeypatch.delenv("RECON_JOBS")
    assert resolve_jobs(None) == 1
    with pytest.raises(ValueError):
        SweepConfig(n=4, mode="bogus")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "t3recon", "triples"],
        input=g6(corpus.cycle(5)),
        capture_output=True,
        text=True,
        check=True,
    )
    assert res.stdout.startswith("n=5 k=3\n")
