"""End-to-end runs of the ``qdist`` command."""

import json
import math

import pytest

from qdist.cli import main


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def by_measure(doc):
    return {r["measure"]: r for r in doc["body"]["results"]}


def test_measures_or4(capsys):
    code, doc, _ = invoke(capsys, "measures", "--fn", "OR4", "--measure", "D,C,s,bs,fbs,adeg,adv", "--no-cache")
    assert code == 0
    r = by_measure(doc)
    assert [r[m]["value"] for m in ("D", "C", "s", "bs")] == [4, 4, 4, 4]
    assert r["fbs"]["value"] in (4, "4", "4/1")
    assert abs(float(r["adv"]["value"]) - 2) <= 1e-4
    assert r["adv"]["provenance"] == "SDP-certified"
    assert doc["format"] == "qdist-report/1"


def test_warm_cache(capsys, tmp_path):
    cache = str(tmp_path / "cache.json")
    args = ("measures", "--fn", "OR2,PARITY3", "--measure", "D,deg,adv", "--cache", cache)
    _, first, _ = invoke(capsys, *args)
    _, second, _ = invoke(capsys, *args)
    assert json.dumps(first["body"], sort_keys=True) == json.dumps(second["body"], sort_keys=True)
    assert first["meta"]["cache_hits"] == []
    assert len(second["meta"]["cache_hits"]) == 6


def test_tolerance_is_part_of_cache_key(capsys, tmp_path):
    cache = str(tmp_path / "cache.json")
    invoke(capsys, "measures", "--fn", "OR2", "--measure", "adv,D", "--cache", cache)
    _, doc, _ = invoke(capsys, "measures", "--fn", "OR2", "--measure", "adv,D", "--cache", cache, "--tol", "1e-5")
    assert doc["meta"]["cache_hits"] == ["OR2:D"]


def test_workers_same_body(capsys):
    args = ("measures", "--fn", "OR2,AND3,MAJ3", "--measure", "D,C,deg", "--no-cache")
    _, serial, _ = invoke(capsys, *args)
    _, parallel, _ = invoke(capsys, *args, "--workers", "2")
    serial["body"].pop("argv"), parallel["body"].pop("argv")
    assert serial["body"] == parallel["body"]


def test_unknown_measure(capsys):
    code, doc, err = invoke(capsys, "measures", "--fn", "OR2", "--measure", "D,bogus")
    assert code == 2 and doc is None
    assert "UnknownMeasure" in err and "fbs" in err


def test_unknown_function(capsys):
    code, _, err = invoke(capsys, "measures", "--fn", "NOPE", "--measure", "D")
    assert code == 2 and "UnknownFunction" in err


def test_measure_error_reported(capsys):
    code, doc, _ = invoke(capsys, "measures", "--fn", "SABAND2", "--measure", "s", "--no-cache")
    assert code == 1
    assert "AlphabetUnsupported" in doc["body"]["results"][0]["error"]


def test_verify_hybrid(capsys):
    code, doc, _ = invoke(capsys, "verify", "hybrid", "--alg", "grover4", "--x", "0000", "--block", "0")
    assert code == 0
    m = doc["body"]["metrics"]
    assert math.isclose(float(m["mass"]), 0.25, abs_tol=1e-12)
    assert math.isclose(float(m["refined_bound"]), 0.25, abs_tol=1e-9)


def test_verify_deterministic(capsys):
    _, a, _ = invoke(capsys, "verify", "cert-finder", "--seed", "7", "--seeds", "20")
    _, b, _ = invoke(capsys, "verify", "cert-finder", "--seed", "7", "--seeds", "20")
    assert a["body"] == b["body"]
    assert a["body"]["passed"]


def test_unknown_experiment(capsys):
    code, _, err = invoke(capsys, "verify", "nope")
    assert code == 2 and "UnknownExperiment" in err


def test_verify_rejects_foreign_flag(capsys):
    code, _, err = invoke(capsys, "verify", "collision", "--x", "0000")
    assert code == 2


def test_compose(capsys, tmp_path):
    path = tmp_path / "cat.txt"
    code, doc, _ = invoke(capsys, "compose", "IND", "1", "ID1", "--catalog", str(path))
    assert code == 0 and doc["body"]["function"]["n"] == 3
    code, doc, _ = invoke(capsys, "compose", "SAB", "AND2")
    assert doc["body"]["function"]["q"] == 4 and doc["body"]["function"]["domain_size"] == 6
    _, listing, _ = invoke(capsys, "catalog", "list", "--catalog", str(path))
    assert "IND1oID1" in [e["name"] for e in listing["body"]["entries"]]


def test_compose_overflow(capsys):
    code, _, err = invoke(capsys, "compose", "IND", "5", "OR4")
    assert code == 2 and "ArityOverflow" in err


def test_catalog_add(capsys, tmp_path):
    path = str(tmp_path / "cat.txt")
    code, _, _ = invoke(capsys, "catalog", "add", "--catalog", path, "MYF", "2", "2", "table", "00:0", "11:1")
    assert code == 0
    code, doc, _ = invoke(capsys, "measures", "--catalog", path, "--fn", "MYF", "--measure", "D,C", "--no-cache")
    assert code == 0 and by_measure(doc)["D"]["value"] == 1


def test_out_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", "sabotage", "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["body"]["experiment"] == "sabotage"
