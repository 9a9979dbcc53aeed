"""Golden-file tests for every subcommand.  Regenerate with
``UPDATE_GOLDEN=1 pytest tests/test_cli.py`` and review the diff."""

import io
import json
import os
from pathlib import Path

import pytest

import indepset.cli as cli
from indepset.polynomial import Polynomial
from indepset.poset import parse_poset

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
UPDATE = bool(os.environ.get("UPDATE_GOLDEN"))

CASES = {
    "indpoly_path3": ["indpoly", "path3.graph"],
    "indpoly_path3_oracle": ["indpoly", "--oracle", "path3.graph"],
    "indpoly_random10": ["indpoly", "--oracle", "random10.graph"],
    "indpoly_random10_cocoa": ["indpoly", "--pivot-strategy", "cocoa-like", "--seed", "3",
                               "random10.graph"],
    "antipoly_chain5": ["antipoly", "chain5.poset"],
    "antipoly_antichain3": ["antipoly", "antichain3.poset"],
    "antipoly_b3_oracle": ["antipoly", "--oracle", "b3.poset"],
    "antipoly_b4_nomemo": ["antipoly", "--memo", "off", "--components", "off",
                           "--pivot-strategy", "first", "b4.poset"],
    "groebner_chain2": ["groebner", "chain2.poset"],
    "groebner_b2": ["groebner", "b2.poset"],
    "variety_chain2": ["variety", "chain2.poset"],
    "variety_b2_cover": ["variety", "--cover", "b2.poset"],
    "variety_random7": ["variety", "random7.poset"],
    "convert_b2": ["convert", "b2.poset"],
    "convert_chain2_graph": ["convert", "chain2_cm.graph"],
    "lexprod_chain2_antichain3": ["lexprod", "chain2.poset", "antichain3.poset"],
    "interpolate_b2_half": ["interpolate", "b2.poset", "--t", "1/2"],
    "interpolate_random7": ["interpolate", "random7.poset", "--t", "-2", "--evaluator", "lex"],
    "bench_boolean_3": ["bench-boolean", "3", "--no-timing", "--oracle"],
    "hn_edge": ["hn", "edge.ideal"],
    "hn_nonminimal": ["hn", "nonminimal.ideal"],
}


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def resolve(args):
    return [str(DATA / a) if (DATA / a).exists() else a for a in args]


@pytest.fixture(scope="module", autouse=True)
def cm_graph_file():
    # written from the convert output so both directions stay in sync
    code, out, _ = invoke(["convert", str(DATA / "chain2.poset")])
    assert code == 0
    (DATA / "chain2_cm.graph").write_text(out)


@pytest.mark.parametrize("fmt", ["text", "json"])
@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, fmt):
    code, out, _ = invoke(resolve(CASES[name]) + ["--format", fmt])
    assert code == 0
    out = out.replace(str(DATA) + "/", "")
    path = GOLDEN / f"{name}.{'json' if fmt == 'json' else 'txt'}"
    if UPDATE:
        path.write_text(out)
    assert out == path.read_text()
    if fmt == "json":
        json.loads(out)


def test_antipoly_chain5_text():
    assert invoke(["antipoly", str(DATA / "chain5.poset")])[1] == "1 + 5*z\n"


def test_bench_boolean_count():
    code, out, _ = invoke(["bench-boolean", "3", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["count"] == "20"
    assert "seconds" in data


def test_oracle_mismatch_exits_3(monkeypatch):
    monkeypatch.setattr(cli, "independence_polynomial_oracle", lambda g: Polynomial([1]))
    code, out, err = invoke(["indpoly", "--oracle", str(DATA / "path3.graph")])
    assert code == 3
    assert "MISMATCH" in out and "verification failed" in err


def test_validation_errors_exit_1():
    code, _, err = invoke(["antipoly", str(DATA / "bad.poset")])
    assert code == 1 and "line 4" in err
    code, _, err = invoke(["indpoly", str(DATA / "bad.graph")])
    assert code == 1 and "line 3" in err
    code, _, err = invoke(["indpoly", str(DATA / "missing.graph")])
    assert code == 1 and "cannot read" in err
    code, _, err = invoke(["interpolate", str(DATA / "b2.poset"), "--t", "0"])
    assert code == 1
    code, _, err = invoke(["interpolate", str(DATA / "b2.poset"), "--t", "abc"])
    assert code == 1


def test_usage_errors_exit_2():
    assert invoke([])[0] == 2
    assert invoke(["frobnicate"])[0] == 2
    assert invoke(["antipoly", "--pivot-strategy", "nope", "x"])[0] == 2
    assert invoke(["bench-boolean", "three"])[0] == 2


def test_consistency_failure_exits_3(monkeypatch):
    def broken(*args, **kwargs):
        raise cli.ConsistencyError("routes disagree")
    monkeypatch.setattr(cli, "build_system", broken)
    code, _, err = invoke(["interpolate", str(DATA / "b2.poset"), "--t", "1"])
    assert code == 3 and "routes disagree" in err


def test_hn_warns_on_non_minimal_input():
    code, _, err = invoke(["hn", str(DATA / "nonminimal.ideal")])
    assert code == 0 and "not minimal" in err
    assert invoke(["hn", str(DATA / "edge.ideal")])[2] == ""


def test_convert_rejects_non_cm_graph(tmp_path):
    f = tmp_path / "p3.graph"
    f.write_text("graph 4\n1 3\n2 3\n")
    assert invoke(["convert", str(f)])[0] == 1


def test_convert_round_trip(tmp_path):
    code, out, _ = invoke(["convert", str(DATA / "b3.poset")])
    f = tmp_path / "g.graph"
    f.write_text(out)
    index_map = dict(tuple(int(x) - 1 for x in pair.split("->"))
                     for pair in out.splitlines()[1].split(": ")[1].split(", "))
    code, back, _ = invoke(["convert", str(f)])
    assert code == 0
    original = parse_poset((DATA / "b3.poset").read_text())
    assert parse_poset(back) == original.relabel(index_map)


def test_deterministic_output():
    argv = ["indpoly", "--pivot-strategy", "cocoa-like", "--seed", "9", "--format", "json",
            str(DATA / "random10.graph")]
    assert invoke(argv) == invoke(argv)
