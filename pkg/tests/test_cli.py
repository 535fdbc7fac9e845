import json

import pytest

from gtspace.cli import main

ABC = {"points": ["a", "b", "c"], "opens": [[], ["a", "b"], ["b", "c"], ["a", "b", "c"]]}
XYZ = {"points": ["x", "y", "z"], "opens": [["x", "y", "z"], ["x", "y"], ["y", "z"], []]}
FOUR = {
    "domain": {"points": ["1", "2", "3", "4"], "opens": [[], ["2", "3"], ["1", "2", "3", "4"]]},
    "codomain": {"points": ["a", "b", "c"], "opens": [[], ["a", "b", "c"]]},
    "map": {"1": "a", "2": "b", "3": "c", "4": "c"},
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_validate(capsys):
    code, doc = run_json(capsys, "validate", "--input", json.dumps(ABC))
    assert code == 0 and doc["valid"] and doc["is_topology"] is False
    assert doc["space"] == ABC
    code, doc = run_json(capsys, "validate", "--input", json.dumps({"points": ["a", "b"], "opens": [["a", "b"]]}))
    assert code == 2 and doc["error"] == "MissingEmpty"
    discrete = {"points": ["a", "b"], "opens": [[], ["a"], ["b"], ["a", "b"]]}
    code, doc = run_json(capsys, "validate", "--input", json.dumps(discrete))
    assert code == 0 and doc["is_topology"] is True


def test_validate_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(ABC))
    code, doc = run_json(capsys, "validate", "--input", str(path))
    assert code == 0


def test_compute(capsys):
    assert run_json(capsys, "compute", "--input", json.dumps(XYZ), "--op", "interior", "--set", "y") == (0, [])
    assert run_json(capsys, "compute", "--input", json.dumps(ABC), "--op", "closure", "--set", "b") == (0, ["a", "b", "c"])
    assert run_json(capsys, "compute", "--input", json.dumps(ABC), "--op", "closure", "--set", "[]") == (0, [])
    assert run_json(capsys, "compute", "--input", json.dumps(ABC), "--op", "nbhd", "--point", "b") == (0, ["b"])
    code, doc = run_json(capsys, "compute", "--input", json.dumps(ABC), "--op", "closure", "--set", "q")
    assert code == 2 and doc["error"] == "ParseError"


def test_classify(capsys):
    ident = {"domain": ABC, "codomain": ABC, "map": {"a": "a", "b": "b", "c": "c"}}
    code, doc = run_json(capsys, "classify", "--input", json.dumps(ident))
    assert code == 0 and all(doc["flags"].values())
    code, doc = run_json(capsys, "classify", "--input", json.dumps(FOUR), "--full")
    assert code == 0
    assert doc["flags"]["quotient"] and not doc["flags"]["pseudo_open"]
    assert not doc["flags"]["open"] and not doc["flags"]["closed"]
    assert doc["disagreements"] == [] and doc["hereditary"]["quotient"] is False
    bad = dict(FOUR, map={"1": "a", "2": "a", "3": "a", "4": "a"})
    code, doc = run_json(capsys, "classify", "--input", json.dumps(bad))
    assert code == 2 and doc["error"] == "NotSurjective"


def test_classify_file_refs(capsys, tmp_path):
    (tmp_path / "dom.json").write_text(json.dumps(FOUR["domain"]))
    (tmp_path / "cod.json").write_text(json.dumps(FOUR["codomain"]))
    (tmp_path / "f.json").write_text(json.dumps(dict(FOUR, domain="dom.json", codomain="cod.json")))
    code, doc = run_json(capsys, "classify", "--input", str(tmp_path / "f.json"))
    assert code == 0 and doc["flags"]["quotient"]


def test_subspace(capsys):
    code, doc = run_json(capsys, "subspace", "--input", json.dumps(XYZ), "--carrier", "x,y")
    assert code == 0
    assert doc["subspace"] == {"points": ["x", "y"], "opens": [[], ["y"], ["x", "y"]]}
    code, doc = run_json(capsys, "subspace", "--input", json.dumps(XYZ), "--carrier", "x,y",
                         "--op", "interior", "--set", "y")
    assert doc["result"] == ["y"]
    code, doc = run_json(capsys, "subspace", "--input", json.dumps(XYZ), "--carrier", "x,y",
                         "--op", "trace", "--set", "x")
    assert doc["result"] == ["x"]


def test_verify(capsys):
    code, doc = run_json(capsys, "verify", "--bounds", "2x2")
    assert code == 0 and doc["passed"]
    assert all(r["failed"] == 0 for r in doc["results"])
    code, out = run(capsys, "verify", "--bounds", "2x2", "--theorems", "bogus")
    assert code == 2
    code, out = run(capsys, "verify", "--bounds", "9x2")
    assert code == 2


def test_verify_byte_identical_across_workers(capsys):
    _, a = run(capsys, "verify", "--bounds", "3x2", "--workers", "1")
    _, b = run(capsys, "verify", "--bounds", "3x2", "--workers", "2")
    assert a == b


def test_mine(capsys):
    code, doc = run_json(capsys, "mine", "open-not-closed", "--bounds", "3x2")
    assert code == 0 and doc["verified"] and doc["size"] == [3, 2]
    code, doc = run_json(capsys, "mine", "quotient-not-pseudo-open", "--bounds", "3x3")
    assert code == 1 and doc["exhausted"]
    code, doc = run_json(capsys, "mine", "--premise", "open", "--conclusion", "pseudo-open")
    assert code == 2 and doc["error"] == "ProvableImplication"
    code, doc = run_json(capsys, "mine", "no-such-preset")
    assert code == 2


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "2", "--count") == (0, "4\n")
    code, out = run(capsys, "enumerate", "2", "--stream")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 4
    code, out = run(capsys, "enumerate", "3", "--count", "--dedupe-iso")
    assert out == "14\n"
    assert run(capsys, "enumerate", "7", "--count")[0] == 2


def test_bad_usage(capsys):
    assert run(capsys, "frobnicate")[0] == 2
