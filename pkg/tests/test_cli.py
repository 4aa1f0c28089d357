from __future__ import annotations

import json
import subprocess
import sys

import pytest

from burngame.classical import burning_number, gamma_k
from burngame.cli import main, parse_range
from burngame.corpus import CorpusSpec, enumerate_graphs
from burngame.engine import BURNER, STALLER, burner_only_value, game_value, principal_variation, staller_only_value
from burngame.formats import emit_graph6
from burngame.generators import complete, hypercube, parse_family, path
from burngame.verification.runner import validate_report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "family, quantity, expected",
    [("path:9", "b", 3), ("hypercube:4", "bg", 4), ("complete:5", "bg-prime", 2)],
)
def test_compute_examples(capsys, family, quantity, expected):
    code, out, _ = run(capsys, "compute", "--family", family, "--quantity", quantity)
    assert code == 0 and out.strip() == str(expected)


@pytest.mark.parametrize("family", ["path:7", "cycle:6", "star:4", "cartesian(path:2,cycle:4)"])
def test_compute_matches_library(capsys, family):
    g = parse_family(family)
    expected = {
        "bg": game_value(g, 0, BURNER),
        "bg-prime": game_value(g, 0, STALLER),
        "b": burning_number(g)[0],
        "cl": staller_only_value(g),
        "burner-only": burner_only_value(g),
    }
    for quantity, value in expected.items():
        code, out, _ = run(capsys, "compute", "--family", family, "--quantity", quantity, "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["value"] == value and data["n"] == g.n
    _, out, _ = run(capsys, "compute", "--family", family, "--quantity", "gamma", "--k", "2")
    assert int(out) == gamma_k(g, 2)
    _, out, _ = run(capsys, "compute", "--family", family, "--quantity", "relative", "--burned", "0,1", "--starter", "staller")
    assert int(out) == game_value(g, 0b11, STALLER)


def test_compute_trace(capsys):
    code, out, _ = run(capsys, "compute", "--family", "path:6", "--trace", "--format", "json")
    data = json.loads(out)
    value, trace = principal_variation(path(6))
    assert data["value"] == value and data["trace"] == trace.to_json()
    _, out, _ = run(capsys, "compute", "--family", "path:6", "--trace")
    lines = out.splitlines()
    assert lines[0] == "3" and len(lines) == 1 + len(trace.rounds)
    _, out, _ = run(capsys, "compute", "--family", "path:9", "--quantity", "b", "--trace")
    assert out.splitlines()[1].startswith("burning sequence: ")


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--family", "path:30"],
        ["compute", "--family", "nonsense"],
        ["compute", "--graph6", "zz"],
        ["compute"],
        ["compute", "--family", "path:3", "--quantity", "gamma", "--k", "0"],
        ["compute", "--family", "path:3", "--quantity", "relative", "--burned", "7"],
        ["verify", "--suite", "prop-9.9", "--n", "3"],
        ["verify", "--suite", "prop-2.1"],
        ["verify", "--suite", "all", "--n", "9"],
        ["corpus", "--n", "8"],
        ["compute", "--file", "/nonexistent/graphs.g6"],
        ["sweep", "families", "--range", "3..4"],
        ["sweep", "families", "--family", "path", "--range", "20..30"],
        ["play"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error: ")


def test_argparse_errors_exit_2(capsys):
    for argv in (["compute", "--quantity", "mystery"], ["verify", "--n", "5..2"], ["play", "--human", "referee"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_parse_range():
    assert parse_range("6") == range(6, 7)
    assert parse_range("4..7") == range(4, 8)


def test_corpus_command(capsys, tmp_path):
    code, out, err = run(capsys, "corpus", "--n", "5", "--connected")
    expected = [emit_graph6(g) for g in enumerate_graphs(CorpusSpec(5, connected_only=True))]
    assert code == 0 and out.split() == expected and err.strip() == "21 graphs"
    target = tmp_path / "n1.g6"
    run(capsys, "corpus", "--n", "1", "--output", str(target))
    assert target.read_text() == "@\n"
    _, out, _ = run(capsys, "corpus", "--n", "3", "--labeled")
    assert len(out.split()) == 8
    _, out, _ = run(capsys, "corpus", "--n", "9", "--trees")
    assert len(out.split()) == 47


def test_verify_json_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, err = run(capsys, "verify", "--suite", "prop-2.1,prop-4.3", "--max-n", "5", "--output", str(target))
    data = json.loads(target.read_text())
    validate_report(data)
    assert code == 0
    assert data["suite"] == "prop-2.1,prop-4.3" and data["corpus"] == "n 1..5 classes"
    assert err.startswith(f"prop-2.1,prop-4.3: {data['summary']['pass']} pass, 0 fail")


def test_verify_all_connected_n6(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-n", "6", "--connected", "--dedup", "--format", "csv")
    assert code == 0
    total = out.splitlines()[-1].split(",")
    assert total[0] == "total" and total[2] == "0"


def test_verify_explicit_graph_and_exit_status(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "thm-5.3", "--family", "path:12")
    data = json.loads(out)
    assert code == 0 and data["corpus"] == "path:12" and data["summary"]["pass"] == 2
    # a report with a failure exits 1
    from burngame.verification import checks

    broken = checks.CheckDefinition("prop-2.6", "broken", lambda p: True, lambda p: [checks.Comparison(1, "<=", 0, {}, (p.game(BURNER),))])
    monkeypatch.setitem(checks.CHECKS_BY_ID, "prop-2.6", broken)
    code, out, _ = run(capsys, "verify", "--suite", "prop-2.6", "--family", "path:3")
    assert code == 1
    assert json.loads(out)["results"][0]["witness"]["games"]


def test_verify_examples(capsys):
    code, out, err = run(capsys, "verify", "--suite", "example-2.8")
    data = json.loads(out)
    assert code == 0 and len(data["results"]) == 1 and data["results"][0]["lhs"] == 5
    assert "not established" in err
    code, out, err = run(capsys, "verify", "--suite", "example-2.8", "--include-long-running")
    data = json.loads(out)
    assert code == 0 and {r["params"]["part"] for r in data["results"]} == {"a", "b", "exact", "consistency"}
    assert "warning" in err
    code, out, _ = run(capsys, "verify", "--suite", "example-5.2", "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "ex-5.2,3,0,0,0"


def test_verify_prop_4_7_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "prop-4.7", "--both-connected", "--n", "6..7", "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "prop-4.7,730,0,0,0"


def test_sweeps(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "families", "--family", "hypercube", "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "thm-6.2,8,0,0,0"
    code, out, err = run(capsys, "sweep", "tree-gap", "--n", "4..5")
    data = json.loads(out)
    assert code == 0 and sum(data["gap_counts"].values()) == 6 + 21
    assert err.startswith("gap counts: ")
    target = tmp_path / "products.csv"
    code, _, _ = run(capsys, "sweep", "products", "--format", "csv", "--output", str(target))
    assert code == 0 and target.read_text().splitlines()[-1].split(",")[2] == "0"


def test_config_file_supplies_defaults(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"family": "hypercube:3", "quantity": "bg-prime", "format": "json"}))
    code, out, _ = run(capsys, "--config", str(config), "compute")
    assert code == 0 and json.loads(out)["value"] == game_value(hypercube(3), 0, STALLER)
    # command-line flags still win
    code, out, _ = run(capsys, "--config", str(config), "compute", "--quantity", "b")
    assert json.loads(out)["value"] == burning_number(hypercube(3))[0]
    config.write_text(json.dumps({"suite": "prop-2.6", "n": "3..4", "connected": True, "format": "csv"}))
    code, out, _ = run(capsys, "--config", str(config), "verify")
    assert code == 0 and out.splitlines()[1] == "prop-2.6,8,0,0,0"
    config.write_text(json.dumps({"colour": "blue"}))
    with pytest.raises(SystemExit):
        main(["--config", str(config), "compute"])
    with pytest.raises(SystemExit):
        main(["--config", str(tmp_path / "missing.json"), "compute"])
    capsys.readouterr()


def test_jobs_environment_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("BURNGAME_JOBS", "2")
    _, serial, _ = run(capsys, "verify", "--suite", "prop-4.3", "--n", "5", "--jobs", "1")
    _, parallel, _ = run(capsys, "verify", "--suite", "prop-4.3", "--n", "5")
    assert serial == parallel


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "burngame.cli", "compute", "--family", "complete:4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == str(game_value(complete(4)))
