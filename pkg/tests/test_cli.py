import json

import pytest

from planarturan.cli import main, parse_pattern
from planarturan.graph6 import to_graph6
from planarturan.graphs import complete_graph, cycle_graph, empty_graph, join
from planarturan.patterns import Fan, Star, Wheel


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_parse_pattern():
    assert parse_pattern("wheel:5") == Wheel(5)
    assert parse_pattern("star:6") == Star(6)
    assert parse_pattern("fan:2,3") == Fan(2, 3)
    assert parse_pattern("fan:3") == Fan(3, 3)
    with pytest.raises(ValueError):
        parse_pattern("wheel")
    with pytest.raises(ValueError):
        parse_pattern("blob:3")


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "--family", "icosahedron", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"edges": 30, "family": "icosahedron",
                    "graph6": data["graph6"], "n": 12, "params": {}}
    code, out, _ = run(capsys, "construct", "--family", "two-apex-lower", "--n", "9")
    assert code == 0
    assert out  # one graph6 line


def test_construct_dot(capsys):
    code, out, _ = run(capsys, "construct", "--family", "pentagonal-stack",
                       "--t", "2", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")


def test_construct_usage_errors(capsys):
    code, _, err = run(capsys, "construct", "--family", "no-such-family")
    assert code == 2 and "unknown family" in err
    code, _, err = run(capsys, "construct", "--family", "serpentine")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "construct", "--family", "serpentine", "--n", "3")
    assert code == 2


def test_check_free_and_not(capsys):
    host = to_graph6(join(complete_graph(2), empty_graph(7)))
    code, out, _ = run(capsys, "check", "--pattern", "fan:2,3", "--graph", host)
    assert code == 0 and out == "free"
    code, out, _ = run(capsys, "check", "--pattern", "wheel:4", "--graph",
                       to_graph6(join(complete_graph(1), cycle_graph(4))), "--json")
    assert code == 1
    data = json.loads(out)
    assert data["free"] is False and len(data["match"]) == 5


def test_check_reads_file(tmp_path, capsys):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(cycle_graph(6)) + "\n")
    code, out, _ = run(capsys, "check", "--pattern", "star:3", "--graph", f"@{path}")
    assert code == 0 and out == "free"


def test_exact_and_formula(capsys):
    code, out, _ = run(capsys, "exact", "--n", "7", "--pattern", "wheel:5")
    assert code == 0 and out == "14"
    code, out, _ = run(capsys, "formula", "--pattern", "star:6", "--n", "13", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["value"]["lo"] == 31 and data["value"]["exact"]
    code, out, _ = run(capsys, "formula", "--pattern", "wheel:3", "--n", "10")
    assert code == 1 and "no theorem applies" in out
    code, _, err = run(capsys, "formula", "--pattern", "wheel:4", "--n", "4")
    assert code == 2


def test_exact_budget_exit_code(capsys):
    code, out, _ = run(capsys, "exact", "--n", "8", "--pattern", "star:3",
                       "--max-deletions", "2", "--json")
    assert code == 3
    data = json.loads(out)
    assert data["value"]["exact"] is False
    assert data["value"]["provenance"] == "oracle:budget-exhausted"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 5


def test_classify(capsys):
    octa = to_graph6(join(empty_graph(2), cycle_graph(4)))
    code, out, _ = run(capsys, "classify", "--graph", octa, "--n", "10",
                       "--verify", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["condition"] == "g" and data["verified"] is True
    code, out, _ = run(capsys, "classify", "--graph", to_graph6(cycle_graph(6)),
                       "--n", "8")
    assert code == 1 and out == "not covered"


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--n", "8", "--e", "15",
                       "--pattern", "fan:2,3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["found"] is True and data["e"] == 15
    # the nonexistent 4-regular planar graph on 7 vertices
    code, out, _ = run(capsys, "search", "--n", "7", "--profile", "4:7")
    assert code == 1 and out == "none (verified)"
    code, _, err = run(capsys, "search", "--n", "7")
    assert code == 2


def test_verify_theorem_cli(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--id", "2.1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and len(data["checks"]) == 3


def test_bad_pattern_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "--pattern", "nope:1", "--graph",
                       to_graph6(cycle_graph(3)))
    assert code == 2 and "error" in err
