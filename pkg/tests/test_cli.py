"""CLI behaviour: golden outputs, exit codes, stdout/stderr separation.

Regenerate the golden files with ``UPDATE_GOLDEN=1 pytest tests/test_cli.py``.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from disjoint_mis.cli import main, parse_search_config, SearchConfigError
from disjoint_mis.graph import parse_graph6

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("UPDATE_GOLDEN") == "1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def check_golden(name, text):
    path = GOLDEN / name
    if UPDATE:
        path.write_text(text)
    assert path.exists(), f"missing golden file {name}; run with UPDATE_GOLDEN=1"
    assert text == path.read_text()


GOLDEN_CASES = {
    "analyze_c4.json": ["analyze", "Cr", "--json"],
    "analyze_c4.txt": ["analyze", "Cr"],
    "analyze_c4.dot": ["analyze", "Cr", "--dot"],
    "analyze_k1.json": ["analyze", "@", "--json"],
    "analyze_c5_corona.json": ["analyze", "IheA@?OA?", "--json"],
    "decide_c4.json": ["decide", "Cr", "--json"],
    "decide_c5.txt": ["decide", "Dhc"],
    "decide_k13_omega_pairs.json": ["decide", "Cs", "--strategy", "omega-pairs", "--json"],
    "decide_c7_unicyclic.json": ["decide", "FhCKG", "--strategy", "unicyclic", "--json"],
    "verify_named.json": ["verify", "named", "--json"],
    "verify_berge_n5.json": ["verify", "berge", "--nmax", "5", "--json", "--workers", "1"],
    "generate_cycle5.txt": ["generate", "cycle", "5"],
    "generate_corona_c5.txt": ["generate", "corona-k1", "cycle", "5"],
    "generate_friendship3.txt": ["generate", "friendship", "3"],
    "generate_paths.txt": ["generate", "path", "1", "2", "3"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(capsys, name):
    code, out, _ = run(capsys, *GOLDEN_CASES[name])
    assert code == 0
    check_golden(name, out)


def test_analyze_named_facts(capsys):
    code, out, _ = run(capsys, "analyze", "Cr", "--json")
    r = json.loads(out)
    assert r["alpha"] == 2 and r["konig_egervary"] and r["certificate"]["verdict"] == "yes"
    _, out, _ = run(capsys, "analyze", "@", "--json")
    r = json.loads(out)
    assert r["alpha"] == 1 and r["vertex_classes"]["shedding"] == []
    _, out, _ = run(capsys, "generate", "corona-k1", "cycle", "5")
    _, out, _ = run(capsys, "analyze", out.strip(), "--json")
    r = json.loads(out)
    assert r["very_well_covered"] and r["disjoint_maximal_pair"] is False


def test_generate_families_parse_back(capsys):
    _, out, _ = run(capsys, "generate", "cycle", "5")
    assert parse_graph6(out.strip()).m == 5
    _, out, _ = run(capsys, "generate", "friendship", "3")
    g = parse_graph6(out.strip())
    assert (g.n, g.m) == (7, 9)
    _, out, _ = run(capsys, "generate", "complete-bipartite", "2", "3")
    assert parse_graph6(out.strip()).m == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "cycle"],
        ["generate", "cycle", "x"],
        ["generate", "complete-bipartite", "2"],
        ["generate", "corona-k1"],
        ["analyze", "C~~"],
        ["decide", "not-a-graph!"],
    ],
)
def test_parse_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "parse error" in err


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_cap_exceeded(capsys):
    code, out, err = run(capsys, "decide", "K~~~~~~~~~~~", "--max-n", "10")
    assert code == 3 and out == "" and "cap exceeded" in err
    code, out, err = run(capsys, "analyze", "K~~~~~~~~~~~", "--max-n", "10", "--json")
    assert code == 3
    r = json.loads(out)
    assert r["alpha"] is None and "alpha" in r["skipped"] and r["mu"] == 6
    assert "skipped alpha" in err


def test_omega_cap(capsys):
    code, out, _ = run(capsys, "decide", "Cs", "--strategy", "omega-pairs", "--max-omega", "0")
    assert code == 3 and out == ""


def test_timeout(capsys):
    from disjoint_mis.graph import complete, copies, to_graph6

    # ten disjoint triangles: 3^10 maximum independent sets to enumerate
    g6 = to_graph6(copies(complete(3), 10))
    code, out, err = run(capsys, "analyze", g6, "--timeout-seconds", "0.01", "--json")
    assert code == 3
    skipped = json.loads(out)["skipped"]
    assert "certificate" in skipped and "timed out after 0.01 s" in skipped.values()


def test_strategy_mismatch(capsys):
    code, out, err = run(capsys, "decide", "Ch", "--strategy", "unicyclic")
    assert code == 4 and out == "" and "strategy mismatch" in err


def test_large_unicyclic_decide(capsys, tmp_path):
    import random

    from disjoint_mis.catalog import random_unicyclic
    from disjoint_mis.graph import to_edge_list

    f = tmp_path / "u30.txt"
    f.write_text(to_edge_list(random_unicyclic(30, random.Random(30))))
    code, out, _ = run(capsys, "decide", str(f), "--strategy", "unicyclic", "--json", "--max-n", "12")
    assert code == 0 and json.loads(out)["validated"]


def test_multiple_graphs_from_file(capsys, tmp_path):
    f = tmp_path / "many.g6"
    f.write_text("Cr\nDhc\nCs\n")
    code, out, _ = run(capsys, "decide", str(f), "--json")
    docs = json.loads(out)
    assert code == 0 and [d["certificate"]["verdict"] for d in docs] == ["yes", "yes", "no"]


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("n 4\n0 1\n1 2\n2 3\n3 0\n"))
    code, out, _ = run(capsys, "decide", "-")
    assert code == 0 and out.startswith("Cl: yes")


def test_decide_dot(capsys):
    code, out, _ = run(capsys, "decide", "Cr", "--dot")
    assert code == 0 and out.startswith("graph G {") and out.count("fillcolor") == 4


def test_search_config_parsing():
    conf = parse_search_config("family = catalog\nnmax: 6  # inline comment\nbudget=10\n")
    assert conf == {"family": "catalog", "nmax": 6, "budget": 10}
    for bad in ["nmax = 6", "family = zoo", "family = catalog\nbudget = -1", "family = catalog\ncolour = red", "family"]:
        with pytest.raises(SearchConfigError):
            parse_search_config(bad)


def test_search_runs(capsys, tmp_path):
    conf = tmp_path / "s.conf"
    out_path = tmp_path / "report.json"
    conf.write_text(f"family = odd-cycles\nnmax = 11\nbudget = 100\noutput = {out_path}\n")
    code, out, err = run(capsys, "search", str(conf))
    assert code == 0
    assert json.loads(out) == json.loads(out_path.read_text())
    assert json.loads(out)["counterexamples"] == []
    check_golden("search_odd_cycles.json", out.replace(str(out_path), "<out>"))

    conf.write_text("family = catalog\nnmax = 6\nbudget = 100000\n")
    code, out, _ = run(capsys, "search", str(conf))
    assert code == 0 and json.loads(out)["examined"] == 208

    conf.write_text("family = catalog\nbudget = 0\n")
    code, out, _ = run(capsys, "search", str(conf))
    assert code == 0 and json.loads(out)["examined"] == 0

    code, _, err = run(capsys, "search", str(tmp_path / "missing.conf"))
    assert code == 2


def test_search_counterexample_exit_5(capsys, tmp_path, monkeypatch):
    import disjoint_mis.families as fam
    from disjoint_mis.independence import Certificate

    monkeypatch.setattr(fam, "has_two_disjoint_mis", lambda g: Certificate(False, "exhaustion", {}))
    conf = tmp_path / "s.conf"
    conf.write_text(f"family = odd-cycles\nnmax = 5\noutput = {tmp_path / 'r.json'}\n")
    code, out, err = run(capsys, "search", str(conf))
    assert code == 5 and "COUNTEREXAMPLE Dhc" in err
    assert (tmp_path / "r.counterexamples.g6").read_text() == "Dhc\nDUW\n"


def test_verify_violation_exit_5(capsys, monkeypatch):
    import disjoint_mis.verify as verify

    monkeypatch.setattr(verify, "is_well_covered", lambda g: False)
    code, out, err = run(capsys, "verify", "named", "--workers", "1")
    assert code == 5 and "FAIL named" in err


def test_internal_error_exit_1(capsys, monkeypatch):
    import disjoint_mis.cli as cli

    def boom(*a, **k):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "decide", boom)
    code, out, err = run(capsys, "decide", "Cr")
    assert code == 1 and "internal error" in err


def test_console_script_streams():
    proc = subprocess.run(
        [sys.executable, "-m", "disjoint_mis", "verify", "named", "--workers", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "named: PASS, 9 checks\n"
    assert "checks in" in proc.stderr
