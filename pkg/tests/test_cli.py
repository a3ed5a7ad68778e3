from __future__ import annotations

import dataclasses
import json

import pytest

from critcrown.cli import main
from critcrown.io import parse_edgelist
from critcrown.theorems import REGISTRY, fail

P3 = "3 2\n0 1\n1 2\n"
C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
K1 = "1 0\n"


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_analyze_p3(capsys, tmp_graph):
    code, r = run_json(capsys, "analyze", tmp_graph(P3), "--audit")
    assert code == 0 and r["schema"] == 1 and r["audit"] == "pass"
    assert r["d"] == 1
    assert r["families"]["crit_indep"] == [[0, 2]]
    assert len(r["families"]["crown"]) == 4
    assert r["max_crown"]["S"] == [0, 2] and r["max_crown"]["neighborhood"] == [1]


def test_analyze_c5(capsys, tmp_graph):
    code, r = run_json(capsys, "analyze", tmp_graph(C5))
    assert code == 0
    assert r["d"] == 0 and r["families"]["crown"] == [[]] and r["ke"] is False


def test_analyze_k1(capsys, tmp_graph):
    code, r = run_json(capsys, "analyze", tmp_graph(K1))
    assert [] in r["families"]["psi"] and [] not in r["families"]["crit_indep"]


def test_analyze_dimacs_and_text(capsys, tmp_graph):
    path = tmp_graph("p edge 3 2\ne 1 2\ne 2 3\n", "p3.dimacs")
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0 and "max_critical_set: {0,2}" in out


def test_analyze_skips_beyond_family_limit(capsys, tmp_graph):
    code, r = run_json(capsys, "analyze", tmp_graph(C5), "--family-limit", "4")
    assert code == 0 and r["families"] == "skipped(limit)" and r["d"] == 0


def test_parse_error_exit_code(capsys, tmp_graph):
    code, _, err = run(capsys, "analyze", tmp_graph("3 1\n0 7\n"))
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "analyze", "/nonexistent/graph.edgelist")
    assert code == 2


def test_verify_exhaustive(capsys):
    code, r = run_json(capsys, "verify", "--exhaustive", "5")
    assert code == 0 and r["result"] == "pass" and r["graphs"] == 1 + 2 + 4 + 11 + 34
    assert r["checks"]["inclusion-chain"] == {"pass": 52}


def test_verify_connected_count(capsys):
    code, r = run_json(capsys, "verify", "--exhaustive", "6", "--connected", "--checks", "inclusion-chain")
    assert code == 0 and r["per_order"]["6"] == 112


def test_verify_is_deterministic(capsys):
    args = ("verify", "--random", "15", "--max-n", "9", "--seed", "11")
    a = run_json(capsys, *args)
    b = run_json(capsys, *args)
    assert a == b and a[1]["config"]["seed"] == 11


def test_verify_threads_do_not_change_results(capsys):
    args = ("verify", "--random", "12", "--max-n", "8", "--seed", "2")
    _, one = run_json(capsys, *args, "--threads", "1")
    _, two = run_json(capsys, *args, "--threads", "2")
    one["config"].pop("threads")
    two["config"].pop("threads")
    assert one == two


def test_verify_failure_writes_certificate(capsys, tmp_path, monkeypatch):
    broken = dataclasses.replace(REGISTRY["ker"], run=lambda P: fail(reason="injected"))
    monkeypatch.setitem(REGISTRY, "ker", broken)
    cert = tmp_path / "cex.json"
    code, r = run_json(capsys, "verify", "--tree", "4", "--checks", "ker", "--certificate", cert)
    assert code == 1 and r["result"] == "fail"
    saved = json.loads(cert.read_text())
    assert saved["check"] == "ker" and saved["details"] == {"reason": "injected"}


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--exhaustive", "12")[0] == 3
    assert run(capsys, "verify", "--random", "3")[0] == 2
    assert run(capsys, "verify", "--tree", "4", "--checks", "nope")[0] == 2
    with pytest.raises(SystemExit):
        main(["verify"])


def test_verify_findings_dir(capsys, tmp_path):
    out = tmp_path / "findings"
    code, r = run_json(capsys, "verify", "--exhaustive", "5", "--checks", "conjecture-triangle-free",
                       "--findings-dir", out)
    assert code == 0 and r["findings"] == len(list(out.iterdir())) >= 1


def test_kernelize(capsys, tmp_graph, tmp_path):
    code, r = run_json(capsys, "kernelize", tmp_graph(C5, "c5.edgelist"), "--k", "2", "--out-dir", tmp_path)
    assert code == 0 and r["status"] == "reduced" and r["kernel"]["n"] == 5 and r["steps"] == []
    assert parse_edgelist((tmp_path / "c5.kernel.edgelist").read_text()) == parse_edgelist(C5)
    code, r = run_json(capsys, "kernelize", tmp_graph(P3, "p3.edgelist"), "--k", "0", "--out-dir", tmp_path)
    assert code == 0 and r["status"] == "infeasible"
    code, r = run_json(capsys, "kernelize", tmp_graph(P3, "p3.edgelist"), "--k", "1", "--out-dir", tmp_path)
    assert r["status"] == "reduced" and r["kernel"]["n"] == 0 and r["certificate"]["holds"]
    trace = json.loads((tmp_path / "p3.trace.json").read_text())
    assert trace["steps"][0]["crown"] == [0, 2]
    assert run(capsys, "kernelize", tmp_graph(P3), "--k", "-1")[0] == 2


def test_scan(capsys):
    code, r = run_json(capsys, "scan", "--max-n", "6")
    assert code == 0 and r["result"] == "pass"
    equal = r["crit_equals_crown"]["graphs"]
    assert all(g["d"] == 0 for g in equal)
    edge_sets = {(g["n"], g["m"]) for g in equal}
    assert (4, 4) in edge_sets and (6, 6) in edge_sets  # C4 and C6 among them


def test_scan_triangle_free_reports_findings(capsys, tmp_path):
    code, r = run_json(capsys, "scan", "--max-n", "6", "--triangle-free", "--findings-dir", tmp_path)
    assert code == 0
    assert r["conjecture"]["disagree"] == len(r["conjecture"]["findings"]) >= 1
    assert any(f["graph"]["n"] == 5 and f["graph"]["m"] == 5 for f in r["conjecture"]["findings"])
