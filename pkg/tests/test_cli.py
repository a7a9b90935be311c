import io
import json
import subprocess
import sys

import jsonschema
import pytest

from middledom import cli, theorems
from middledom.families import FamilySpec, generate
from middledom.io import ParseError, format_edge_list, load_graph, parse_edge_list
from middledom.schemas import BY_COMMAND
from middledom.theorems import Check, TheoremPredicate

from test_families import family_cases


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(command, *argv):
    code, out, _ = run(command, *argv, "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, BY_COMMAND[command])
    return code, payload


@pytest.mark.parametrize("descriptor, value", [("cycle:4", 2), ("kbip:2,3", 3), ("path:2", 1)])
def test_gamma_examples(descriptor, value):
    code, out, _ = run("gamma", descriptor)
    assert code == 0
    assert out.splitlines()[0] == f"gamma={value}"


def test_gamma_methods_agree():
    values = set()
    for method in ("auto", "oracle", "matching", "branch-bound"):
        code, payload = run_json("gamma", "friendship:3", "--method", method)
        assert code == 0
        values.add(payload["gamma"])
    assert values == {4}


def test_gamma_json_witness_labels():
    code, payload = run_json("gamma", "path:5")
    assert payload["witness"] == ["m0_1", "m2_3", "m3_4"]
    assert payload["method"] == "matching_fast_path"
    code, payload = run_json("gamma", "cycle:5", "--no-middle")
    assert (payload["gamma"], payload["witness"]) == (2, ["v0", "v2"])


def test_gamma_usage_errors(tmp_path):
    assert run("gamma", "cycle:4", "--no-middle", "--method", "matching")[0] == 2
    assert run("gamma", "cycle:2")[0] == 2
    assert run("gamma", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    code, _, err = run("gamma", str(bad))
    assert code == 2 and "declares 2 edges" in err
    assert run("gamma")[0] == 2
    assert run()[0] == 2


def test_gamma_budget_exit_code(monkeypatch):
    assert run("gamma", "kbip:4,4", "--method", "oracle", "--budget", "5")[0] == 3
    monkeypatch.setenv("MIDDLEDOM_BUDGET", "5")
    assert run("gamma", "kbip:4,4", "--method", "oracle")[0] == 3
    assert run("gamma", "kbip:4,4")[0] == 0


def test_gamma_from_file_and_stdin(tmp_path, monkeypatch):
    f = tmp_path / "c4.txt"
    f.write_text("# a four-cycle\n4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert run("gamma", str(f))[1].startswith("gamma=2\n")
    monkeypatch.setattr(sys, "stdin", io.StringIO("2 1\n0 1\n"))
    assert run("gamma", "-")[1].startswith("gamma=1\n")


def test_transform_examples():
    code, out, _ = run("transform", "path:2", "--op", "middle")
    assert code == 0
    assert out.splitlines()[:3] == ["3 2", "0 2", "1 2"]
    assert out.splitlines()[3] == "# labels: v0 v1 m0_1"
    code, out, _ = run("transform", "cycle:4", "--op", "complement")
    assert out == "4 2\n0 2\n1 3\n"
    code, out, _ = run("transform", "cycle:4", "--op", "corona")
    assert out.splitlines()[0] == "8 8"
    code, out, _ = run("transform", "cycle:4", "--op", "join-empty:2")
    assert out.splitlines()[0] == "6 12"
    code, out, _ = run("transform", "cycle:3", "--op", "corona2")
    assert out.splitlines()[0] == "9 9"
    code, out, _ = run("transform", "star:3", "--op", "line")
    assert out.splitlines()[0] == "3 3"


def test_transform_dot():
    code, out, _ = run("transform", "path:2", "--op", "middle", "--format", "dot")
    assert out == "graph G {\n  v0 -- m0_1;\n  v1 -- m0_1;\n}\n"
    code, out, _ = run("transform", "path:2", "--op", "complement", "--format", "dot")
    assert out == "graph G {\n  v0;\n  v1;\n}\n"


@pytest.mark.parametrize("op", ["square", "join-empty:x", "join-empty:-1"])
def test_transform_bad_op(op):
    assert run("transform", "cycle:4", "--op", op)[0] == 2


def test_certify_examples():
    code, payload = run_json("certify", "--nmax", "4")
    assert code == 0 and payload["total_violations"] == 0
    code, payload = run_json("certify", "--nmax", "5", "--predicates", "edge-cover-identity")
    (entry, _witness) = payload["predicates"]
    assert entry["tested"] == 1 + 4 + 41 + 768
    assert entry["violations"] == []
    code, out, _ = run("certify", "--nmax", "2")
    assert code == 0
    row = next(line for line in out.splitlines() if line.startswith("star-characterization"))
    assert "not-applicable" in row


def test_certify_usage_errors():
    assert run("certify", "--nmax", "8")[0] == 2
    assert run("certify", "--nmax", "0")[0] == 2
    assert run("certify", "--predicates", "no-such-thing")[0] == 2


def test_certify_exit_code_on_injected_violation(monkeypatch):
    liar = TheoremPredicate(
        "always-two",
        "γ = 2",
        lambda c: c.n >= 2 and c.connected,
        lambda c: Check(failures=[] if c.gamma == 2 else [{"gamma": c.gamma}]),
    )
    monkeypatch.setitem(theorems.PREDICATES, liar.id, liar)
    code, payload = run_json("certify", "--nmax", "3", "--predicates", "always-two", "--workers", "1")
    assert code == 1
    assert payload["total_violations"] > 0
    assert run("certify", "--nmax", "3", "--workers", "1")[0] == 1


def test_nordhaus_examples():
    code, payload = run_json("nordhaus", "cycle:4")
    assert code == 0
    assert (payload["sum"], payload["product"]) == (4, 4)
    assert all(b["tight"] for b in payload["bounds"].values())
    code, payload = run_json("nordhaus", "complete:5")
    assert (payload["sum"], payload["product"]) == (8, 15)
    assert code == 4 and not payload["hypothesis"]["ok"]
    code, out, err = run("nordhaus", "star:3")
    assert code == 4 and "isolated vertex" in err
    code, out, _ = run("nordhaus", "path:5")
    assert code == 0 and "sum=6" in out


def test_generate_round_trip():
    for descriptor in family_cases():
        code, out, _ = run("generate", descriptor)
        assert code == 0
        g = parse_edge_list(out)
        assert g == generate(descriptor)
        assert parse_edge_list(format_edge_list(g)) == g
    assert run("generate", "nope:1")[0] == 2


def test_parse_errors():
    for text in ("", "# only\n", "2\n", "2 1\n0 x\n", "2 1\n0 0\n", "2 1\n0 5\n", "-1 0\n"):
        with pytest.raises(ParseError):
            parse_edge_list(text)
    assert load_graph("kbip:2,3") == generate(FamilySpec("kbip", (2, 3)))


def test_output_is_byte_identical():
    first = run("certify", "--nmax", "4", "--json")[1]
    second = run("certify", "--nmax", "4", "--json", "--workers", "2")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "middledom", "gamma", "cycle:4", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["gamma"] == 2
